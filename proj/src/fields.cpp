/*
   Copyright 2026 The gl3rep Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "gl3/fields.hpp"

#include <functional>
#include <numeric>
#include <sstream>

namespace gl3 {

namespace {

struct BaseOps {
    std::uint32_t size;
    std::function<std::uint32_t(std::uint32_t, std::uint32_t)> add;
    std::function<std::uint32_t(std::uint32_t, std::uint32_t)> mul;
    std::function<std::uint32_t(std::uint32_t)> neg;
};

std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// Multiplies the polynomial with base-b digits `code` by x modulo the monic
// polynomial with low coefficients `c`.
std::uint32_t mul_by_x(const BaseOps& base, const std::vector<std::uint32_t>& c, std::uint32_t code) {
    const int d = static_cast<int>(c.size());
    std::vector<std::uint32_t> digits(d);
    for (int i = 0; i < d; ++i) {
        digits[i] = code % base.size;
        code /= base.size;
    }
    const std::uint32_t top = digits[d - 1];
    std::vector<std::uint32_t> out(d);
    for (int i = d - 1; i >= 1; --i) out[i] = base.add(digits[i - 1], base.neg(base.mul(top, c[i])));
    out[0] = base.neg(base.mul(top, c[0]));
    std::uint32_t r = 0;
    for (int i = d - 1; i >= 0; --i) r = r * base.size + out[i];
    return r;
}

// Lexicographically smallest primitive monic polynomial of the given degree,
// coefficients compared from c_0 upwards.
ExtensionTable find_primitive(const BaseOps& base, int degree) {
    const auto size = static_cast<std::uint32_t>(ipow(base.size, degree));
    ExtensionTable t;
    t.degree = degree;
    t.base_size = base.size;
    t.size = size;
    const std::uint32_t unit_order = size - 1;
    for (std::uint32_t idx = 0; idx < size; ++idx) {
        std::vector<std::uint32_t> c(degree);
        std::uint32_t rest = idx;
        for (int i = degree - 1; i >= 0; --i) {
            c[i] = rest % base.size;
            rest /= base.size;
        }
        if (c[0] == 0) continue;
        std::vector<std::uint32_t> exp;
        exp.reserve(unit_order);
        std::uint32_t cur = 1;
        bool ok = true;
        for (std::uint32_t k = 0; k < unit_order; ++k) {
            if (k > 0 && (cur == 1 || cur == 0)) {
                ok = false;
                break;
            }
            exp.push_back(cur);
            cur = mul_by_x(base, c, cur);
        }
        if (!ok || cur != 1) continue;
        t.defining = c;
        t.exp = std::move(exp);
        t.log.assign(size, -1);
        for (std::uint32_t k = 0; k < unit_order; ++k) t.log[t.exp[k]] = static_cast<std::int32_t>(k);
        return t;
    }
    throw FieldError("no primitive polynomial found");
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

bool is_prime(std::int64_t v) {
    if (v < 2) return false;
    for (std::int64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

std::pair<int, int> prime_power(std::int64_t q) {
    if (q < 2) throw FieldError("q must be a prime power >= 2");
    for (std::int64_t p = 2; p <= q; ++p) {
        if (q % p != 0) continue;
        if (!is_prime(p)) break;
        int n = 0;
        std::int64_t r = q;
        while (r % p == 0) {
            r /= p;
            ++n;
        }
        if (r != 1) break;
        return {static_cast<int>(p), n};
    }
    throw FieldError("q = " + std::to_string(q) + " is not a prime power");
}

// ---------------------------------------------------------------- ExtElement

ExtElement::ExtElement(const FieldTower& tower, int degree, std::uint32_t code)
    : tower_(&tower), degree_(degree), code_(code) {
    if (degree < 1 || degree > 3) throw FieldError("extension degree must be 1, 2 or 3");
    if (code >= tower.size(degree)) throw FieldError("element code out of range");
}

std::array<Elem, 3> ExtElement::coeffs() const {
    std::array<Elem, 3> c{};
    std::uint32_t r = code_;
    for (int i = 0; i < degree_; ++i) {
        c[i] = static_cast<Elem>(r % tower_->q());
        r /= tower_->q();
    }
    return c;
}

std::int64_t ExtElement::dlog() const {
    if (code_ == 0) throw FieldError("zero has no discrete logarithm");
    return tower_->layer(degree_).log[code_];
}

ExtElement ExtElement::inverse() const {
    const auto m = tower_->group_order(degree_);
    return tower_->from_dlog(degree_, mod(-dlog(), m));
}

ExtElement ExtElement::pow(std::int64_t k) const {
    if (code_ == 0) {
        if (k <= 0) throw FieldError("zero raised to a non-positive power");
        return *this;
    }
    const auto m = tower_->group_order(degree_);
    return tower_->from_dlog(degree_, mod(dlog() * mod(k, m), m));
}

ExtElement operator+(const ExtElement& a, const ExtElement& b) {
    if (a.degree_ != b.degree_ || a.tower_ != b.tower_) throw FieldError("mixed-field addition");
    return {*a.tower_, a.degree_, a.tower_->ext_add(a.degree_, a.code_, b.code_)};
}

ExtElement operator-(const ExtElement& a, const ExtElement& b) {
    if (a.degree_ != b.degree_ || a.tower_ != b.tower_) throw FieldError("mixed-field subtraction");
    return {*a.tower_, a.degree_, a.tower_->ext_add(a.degree_, a.code_, a.tower_->ext_neg(a.degree_, b.code_))};
}

ExtElement operator*(const ExtElement& a, const ExtElement& b) {
    if (a.degree_ != b.degree_ || a.tower_ != b.tower_) throw FieldError("mixed-field multiplication");
    return {*a.tower_, a.degree_, a.tower_->ext_mul(a.degree_, a.code_, b.code_)};
}

// ---------------------------------------------------------------- FieldTower

FieldTower::FieldTower(int p, int n, const TowerOptions& options) : p_(p), n_(n) {
    if (!is_prime(p)) throw FieldError("p = " + std::to_string(p) + " is not prime");
    if (n < 1) throw FieldError("extension degree n must be positive");
    const std::int64_t q = ipow(p, n);
    if (q > options.max_q || q > 16)
        throw FieldError("q = " + std::to_string(q) + " exceeds the supported limit " +
                         std::to_string(std::min(options.max_q, 16)));
    q_ = static_cast<int>(q);

    const auto up = static_cast<std::uint32_t>(p);
    BaseOps prime{up, [up](std::uint32_t a, std::uint32_t b) { return (a + b) % up; },
                  [up](std::uint32_t a, std::uint32_t b) { return (a * b) % up; },
                  [up](std::uint32_t a) { return (up - a) % up; }};
    prime_layer_ = find_primitive(prime, n);

    // Base-field tables: digit-wise addition, multiplication through logs.
    const int qq = q_;
    add_.resize(qq * qq);
    mul_.resize(qq * qq);
    neg_.resize(qq);
    for (int a = 0; a < qq; ++a) {
        for (int b = 0; b < qq; ++b) {
            int r = 0, scale = 1, x = a, y = b;
            for (int i = 0; i < n; ++i) {
                r += ((x % p + y % p) % p) * scale;
                x /= p;
                y /= p;
                scale *= p;
            }
            add_[a * qq + b] = static_cast<Elem>(r);
            if (a == 0 || b == 0) {
                mul_[a * qq + b] = 0;
            } else {
                const auto k = (prime_layer_.log[a] + prime_layer_.log[b]) % (qq - 1);
                mul_[a * qq + b] = static_cast<Elem>(prime_layer_.exp[k]);
            }
        }
    }
    for (int a = 0; a < qq; ++a)
        for (int b = 0; b < qq; ++b)
            if (add_[a * qq + b] == 0) neg_[a] = static_cast<Elem>(b);

    // Degree-1 layer is F_q itself with g1 = root of the F_p-defining polynomial.
    layers_[1].degree = 1;
    layers_[1].base_size = static_cast<std::uint32_t>(qq);
    layers_[1].size = static_cast<std::uint32_t>(qq);
    layers_[1].exp = prime_layer_.exp;
    layers_[1].log = prime_layer_.log;
    layers_[1].defining = {neg_[exp1(1)]};

    BaseOps fq{static_cast<std::uint32_t>(qq), [this](std::uint32_t a, std::uint32_t b) { return std::uint32_t{add(a, b)}; },
               [this](std::uint32_t a, std::uint32_t b) { return std::uint32_t{mul(a, b)}; },
               [this](std::uint32_t a) { return std::uint32_t{neg(a)}; }};
    layers_[2] = find_primitive(fq, 2);
    layers_[3] = find_primitive(fq, 3);

    trace_.resize(qq);
    for (int a = 0; a < qq; ++a) {
        Elem t = 0;
        if (a != 0) {
            const std::int64_t la = prime_layer_.log[a];
            std::int64_t pk = 1;
            for (int i = 0; i < n; ++i) {
                t = add(t, static_cast<Elem>(prime_layer_.exp[(la * pk) % (qq - 1)]));
                pk *= p;
            }
        }
        if (t >= p) throw FieldError("trace left the prime field");
        trace_[a] = t;
    }

    norm_exp_[1] = 1;
    for (int d = 2; d <= 3; ++d) {
        const Elem nrm = to_base(norm(generator(d)));
        norm_exp_[d] = dlog1(nrm);
        if (std::gcd(norm_exp_[d], static_cast<std::int64_t>(qq - 1)) != 1)
            throw FieldError("norm of a primitive root is not primitive");
    }
}

std::int64_t FieldTower::group_order(int degree) const { return static_cast<std::int64_t>(size(degree)) - 1; }

const ExtensionTable& FieldTower::layer(int degree) const {
    if (degree < 1 || degree > 3) throw FieldError("extension degree must be 1, 2 or 3");
    return layers_[degree];
}

Elem FieldTower::inv(Elem a) const {
    if (a == 0) throw FieldError("zero is not invertible");
    return exp1(-dlog1(a));
}

int FieldTower::dlog1(Elem a) const {
    if (a == 0) throw FieldError("zero has no discrete logarithm");
    return prime_layer_.log[a];
}

Elem FieldTower::exp1(std::int64_t k) const { return static_cast<Elem>(prime_layer_.exp[mod(k, q_ - 1)]); }

ExtElement FieldTower::generator(int degree) const { return from_dlog(degree, 1 % group_order(degree)); }

ExtElement FieldTower::from_dlog(int degree, std::int64_t k) const {
    const auto& t = layer(degree);
    return {*this, degree, t.exp[mod(k, group_order(degree))]};
}

Elem FieldTower::to_base(const ExtElement& x) const {
    if (x.code() >= static_cast<std::uint32_t>(q_)) throw FieldError("element is not in the base field");
    return static_cast<Elem>(x.code());
}

ExtElement FieldTower::frobenius(const ExtElement& x, std::int64_t k) const {
    if (x.is_zero() || x.degree() == 1) return x;
    const auto m = group_order(x.degree());
    std::int64_t e = x.dlog();
    const std::int64_t kk = mod(k, x.degree());
    for (std::int64_t i = 0; i < kk; ++i) e = (e * q_) % m;
    return from_dlog(x.degree(), e);
}

ExtElement FieldTower::norm(const ExtElement& x) const {
    if (x.is_zero()) return lift(0, 1);
    const int d = x.degree();
    const std::int64_t e = x.dlog() * (group_order(d) / (q_ - 1));
    const ExtElement v = from_dlog(d, e);
    return lift(to_base(v), 1);
}

Mat3 FieldTower::embed_cubic(const ExtElement& z) const {
    if (z.degree() != 3) throw FieldError("embed_cubic needs an element of F_{q^3}");
    if (z.is_zero()) throw FieldError("embed_cubic of zero");
    Mat3 m{};
    ExtElement basis = lift(1, 3);
    const ExtElement s = generator(3);
    for (int col = 0; col < 3; ++col) {
        const auto c = (z * basis).coeffs();
        for (int row = 0; row < 3; ++row) m[row * 3 + col] = c[row];
        basis = basis * s;
    }
    return m;
}

Mat3 FieldTower::embed_quadratic(const ExtElement& w, Elem a) const {
    if (w.degree() != 2) throw FieldError("embed_quadratic needs an element of F_{q^2}");
    if (w.is_zero() || a == 0) throw FieldError("embed_quadratic of zero");
    Mat3 m{};
    const auto c0 = w.coeffs();
    const auto c1 = (w * generator(2)).coeffs();
    m[0] = c0[0];
    m[3] = c0[1];
    m[1] = c1[0];
    m[4] = c1[1];
    m[8] = a;
    return m;
}

std::string FieldTower::fingerprint() const {
    std::ostringstream os;
    auto poly = [&os](const std::vector<std::uint32_t>& c) {
        os << '[';
        for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
        os << ']';
    };
    os << "p=" << p_ << ";n=" << n_ << ";fq=";
    poly(prime_layer_.defining);
    os << ";fq2=";
    poly(layers_[2].defining);
    os << ";fq3=";
    poly(layers_[3].defining);
    os << ";g1=" << static_cast<int>(exp1(1));
    return os.str();
}

std::uint32_t FieldTower::ext_add(int degree, std::uint32_t a, std::uint32_t b) const {
    if (degree == 1) return add(static_cast<Elem>(a), static_cast<Elem>(b));
    std::uint32_t r = 0, scale = 1;
    for (int i = 0; i < degree; ++i) {
        r += add(static_cast<Elem>(a % q_), static_cast<Elem>(b % q_)) * scale;
        a /= q_;
        b /= q_;
        scale *= q_;
    }
    return r;
}

std::uint32_t FieldTower::ext_neg(int degree, std::uint32_t a) const {
    std::uint32_t r = 0, scale = 1;
    for (int i = 0; i < degree; ++i) {
        r += neg(static_cast<Elem>(a % q_)) * scale;
        a /= q_;
        scale *= q_;
    }
    return r;
}

std::uint32_t FieldTower::ext_mul(int degree, std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    const auto& t = layer(degree);
    const auto m = static_cast<std::int64_t>(t.size) - 1;
    return t.exp[(static_cast<std::int64_t>(t.log[a]) + t.log[b]) % m];
}

std::shared_ptr<const FieldTower> make_tower(int p, int n, const TowerOptions& options) {
    return std::make_shared<const FieldTower>(p, n, options);
}

}  // namespace gl3
