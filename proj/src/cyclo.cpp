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

#include "gl3/cyclo.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>

namespace gl3 {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticError("int64 overflow in cyclotomic arithmetic");
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw ArithmeticError("int64 overflow in cyclotomic arithmetic");
    return r;
}

std::int64_t narrow(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw ArithmeticError("coefficient exceeds int64 after reduction");
    return static_cast<std::int64_t>(v);
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

std::int64_t radical(std::int64_t n) {
    std::int64_t r = 1;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        r *= p;
        while (n % p == 0) n /= p;
    }
    return n > 1 ? r * n : r;
}

// Exact division of `num` by a monic polynomial.
std::vector<std::int64_t> divide_monic(std::vector<std::int64_t> num, const std::vector<std::int64_t>& den) {
    const auto nd = static_cast<std::int64_t>(num.size()) - 1;
    const auto dd = static_cast<std::int64_t>(den.size()) - 1;
    if (nd < dd) throw ArithmeticError("polynomial division degree mismatch");
    std::vector<std::int64_t> quot(nd - dd + 1, 0);
    for (std::int64_t i = nd; i >= dd; --i) {
        const std::int64_t c = num[i];
        quot[i - dd] = c;
        if (c != 0)
            for (std::int64_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    for (std::int64_t i = 0; i < dd; ++i)
        if (num[i] != 0) throw ArithmeticError("cyclotomic division left a remainder");
    return quot;
}

}  // namespace

std::int64_t euler_phi(std::int64_t n) {
    std::int64_t r = n;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        r -= r / p;
    }
    if (n > 1) r -= r / n;
    return r;
}

std::vector<std::int64_t> cyclotomic_polynomial(std::int64_t n) {
    if (n < 1) throw ArithmeticError("cyclotomic index must be positive");
    // Phi_n(x) = Phi_rad(n)(x^{n/rad(n)}); the division runs on the radical.
    const std::int64_t rad = radical(n);
    std::map<std::int64_t, std::vector<std::int64_t>> known;
    for (std::int64_t d : divisors(rad)) {
        std::vector<std::int64_t> p(d + 1, 0);
        p[0] = -1;
        p[d] = 1;
        for (const auto& [e, phi_e] : known)
            if (d % e == 0) p = divide_monic(std::move(p), phi_e);
        known.emplace(d, std::move(p));
    }
    const auto& base = known.at(rad);
    const std::int64_t stretch = n / rad;
    std::vector<std::int64_t> out((base.size() - 1) * stretch + 1, 0);
    for (std::size_t i = 0; i < base.size(); ++i) out[i * stretch] = base[i];
    return out;
}

// ---------------------------------------------------------------- field

CyclotomicField::CyclotomicField(std::int64_t modulus) : modulus_(modulus) {
    if (modulus < 1 || modulus > (1 << 22)) throw ArithmeticError("unsupported cyclotomic modulus");
    poly_ = cyclotomic_polynomial(modulus);
    degree_ = static_cast<std::int64_t>(poly_.size()) - 1;
    if (degree_ != euler_phi(modulus)) throw ArithmeticError("cyclotomic polynomial has the wrong degree");
    for (std::int64_t j = 0; j < degree_; ++j)
        if (poly_[j] != 0) tail_.emplace_back(j, poly_[j]);
    roots_.resize(modulus);
    for (std::int64_t k = 0; k < modulus; ++k) {
        const double t = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(modulus);
        roots_[k] = {std::cos(t), std::sin(t)};
    }
}

std::uint32_t CyclotomicField::exponent(Phase ph) const {
    if (ph.den <= 0 || modulus_ % ph.den != 0) throw ArithmeticError("root of unity order does not divide the modulus");
    std::int64_t k = ph.num % ph.den;
    if (k < 0) k += ph.den;
    return static_cast<std::uint32_t>(k * (modulus_ / ph.den));
}

void CyclotomicField::reduce(std::vector<__int128>& dense) const {
    for (std::int64_t i = static_cast<std::int64_t>(dense.size()) - 1; i >= degree_; --i) {
        const __int128 c = dense[i];
        if (c == 0) continue;
        const std::int64_t shift = i - degree_;
        for (const auto& [j, cj] : tail_) dense[shift + j] -= c * cj;
        dense[i] = 0;
    }
}

// ---------------------------------------------------------------- values

CycValue::CycValue(const CyclotomicField& field, std::int64_t n) : field_(&field) {
    if (n != 0) terms_.push_back({0, n});
}

CycValue CycValue::root(const CyclotomicField& field, std::int64_t k) {
    CycValue v;
    v.field_ = &field;
    std::int64_t e = k % field.modulus();
    if (e < 0) e += field.modulus();
    v.terms_.push_back({static_cast<std::uint32_t>(e), 1});
    return v;
}

CycValue CycValue::from_terms(const CyclotomicField& field, std::vector<Term> terms, std::int64_t den) {
    if (den <= 0) throw ArithmeticError("denominator must be positive");
    CycValue v;
    v.field_ = &field;
    v.den_ = den;
    for (auto& t : terms)
        if (t.exp >= field.modulus()) t.exp %= static_cast<std::uint32_t>(field.modulus());
    v.terms_ = std::move(terms);
    v.compact();
    return v;
}

void CycValue::adopt(const CycValue& other) {
    if (field_ == nullptr) {
        field_ = other.field_;
    } else if (other.field_ != nullptr && other.field_ != field_) {
        throw ArithmeticError("values from different cyclotomic fields");
    }
}

void CycValue::compact() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.exp < b.exp; });
    std::size_t w = 0;
    for (std::size_t r = 0; r < terms_.size();) {
        Term t = terms_[r++];
        while (r < terms_.size() && terms_[r].exp == t.exp) t.coeff = checked_add(t.coeff, terms_[r++].coeff);
        if (t.coeff != 0) terms_[w++] = t;
    }
    terms_.resize(w);
}

CycValue& CycValue::operator+=(const CycValue& rhs) {
    adopt(rhs);
    if (rhs.terms_.empty()) return *this;
    if (den_ == rhs.den_) {
        terms_.insert(terms_.end(), rhs.terms_.begin(), rhs.terms_.end());
    } else {
        const std::int64_t l = checked_mul(den_ / std::gcd(den_, rhs.den_), rhs.den_);
        const std::int64_t sa = l / den_, sb = l / rhs.den_;
        for (auto& t : terms_) t.coeff = checked_mul(t.coeff, sa);
        for (const auto& t : rhs.terms_) terms_.push_back({t.exp, checked_mul(t.coeff, sb)});
        den_ = l;
    }
    compact();
    return *this;
}

CycValue& CycValue::operator-=(const CycValue& rhs) { return *this += -rhs; }

CycValue CycValue::operator-() const {
    CycValue r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

CycValue& CycValue::operator*=(std::int64_t s) {
    if (s == 0) {
        terms_.clear();
        den_ = 1;
        return *this;
    }
    for (auto& t : terms_) t.coeff = checked_mul(t.coeff, s);
    return *this;
}

CycValue operator*(const CycValue& a, const CycValue& b) {
    CycValue r;
    r.field_ = a.field_;
    r.adopt(b);
    r.den_ = checked_mul(a.den_, b.den_);
    if (a.terms_.empty() || b.terms_.empty()) {
        r.den_ = 1;
        return r;
    }
    const auto m = static_cast<std::uint32_t>(r.field_ ? r.field_->modulus() : 1);
    r.terms_.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_) {
            std::uint32_t e = x.exp + y.exp;
            if (e >= m) e -= m;
            r.terms_.push_back({e, checked_mul(x.coeff, y.coeff)});
        }
    r.compact();
    return r;
}

CycValue& CycValue::operator*=(const CycValue& rhs) { return *this = *this * rhs; }

CycValue CycValue::conjugate() const {
    CycValue r = *this;
    if (!field_) return r;
    const auto m = static_cast<std::uint32_t>(field_->modulus());
    for (auto& t : r.terms_) t.exp = t.exp == 0 ? 0 : m - t.exp;
    r.compact();
    return r;
}

CycValue CycValue::canonical() const {
    CycValue r;
    r.field_ = field_;
    if (terms_.empty()) return r;
    if (!field_) {
        // Only constants can live without a field.
        r.terms_ = terms_;
        r.den_ = den_;
    } else if (terms_.back().exp < field_->degree()) {
        // Already a remainder modulo Phi_M.
        r.terms_ = terms_;
        r.den_ = den_;
    } else {
        const auto m = field_->modulus();
        std::vector<__int128> dense(std::max<std::int64_t>(m, field_->degree()), 0);
        for (const auto& t : terms_) dense[t.exp] += t.coeff;
        field_->reduce(dense);
        for (std::int64_t i = 0; i < field_->degree(); ++i)
            if (dense[i] != 0) r.terms_.push_back({static_cast<std::uint32_t>(i), narrow(dense[i])});
        r.den_ = den_;
    }
    std::int64_t g = r.den_;
    for (const auto& t : r.terms_) g = std::gcd(g, t.coeff);
    if (g > 1) {
        for (auto& t : r.terms_) t.coeff /= g;
        r.den_ /= g;
    }
    if (r.terms_.empty()) r.den_ = 1;
    return r;
}

bool CycValue::is_zero() const {
    if (terms_.empty()) return true;
    return canonical().terms_.empty();
}

std::optional<std::int64_t> CycValue::rational_integer() const {
    const CycValue c = canonical();
    if (c.terms_.empty()) return 0;
    if (c.terms_.size() != 1 || c.terms_[0].exp != 0 || c.den_ != 1) return std::nullopt;
    return c.terms_[0].coeff;
}

CycValue CycValue::exact_div_int(std::int64_t n) const {
    if (n == 0) throw ArithmeticError("division by zero");
    CycValue c = canonical();
    if (c.den_ != 1) throw ArithmeticError("exact division of a non-integral value");
    for (auto& t : c.terms_) {
        if (t.coeff % n != 0) throw ArithmeticError("value is not divisible by " + std::to_string(n));
        t.coeff /= n;
    }
    return c;
}

CycValue CycValue::div_int(std::int64_t n) const {
    if (n == 0) throw ArithmeticError("division by zero");
    CycValue r = *this;
    if (n < 0) {
        r = -r;
        n = -n;
    }
    r.den_ = checked_mul(r.den_, n);
    return r;
}

std::complex<double> CycValue::to_complex() const {
    std::complex<double> s = 0.0;
    for (const auto& t : terms_) s += static_cast<double>(t.coeff) * (field_ ? field_->root(t.exp) : 1.0);
    return s / static_cast<double>(den_);
}

// ---------------------------------------------------------------- accumulator

CycAccumulator::CycAccumulator(const CyclotomicField& field)
    : field_(&field), dense_(std::max(field.modulus(), field.degree()), 0) {}

void CycAccumulator::rescale_to(std::int64_t den) {
    const std::int64_t l = den_ / std::gcd(den_, den) * den;
    if (l != den_) {
        const std::int64_t s = l / den_;
        for (auto& c : dense_) c *= s;
        den_ = l;
    }
}

void CycAccumulator::add(const CycValue& v, std::int64_t scale) {
    if (v.field_ && v.field_ != field_) throw ArithmeticError("accumulator field mismatch");
    rescale_to(v.den_);
    const __int128 s = static_cast<__int128>(scale) * (den_ / v.den_);
    for (const auto& t : v.terms_) dense_[t.exp] += s * t.coeff;
}

void CycAccumulator::add_product(const CycValue& a, const CycValue& b, std::int64_t scale, bool conjugate_b) {
    if ((a.field_ && a.field_ != field_) || (b.field_ && b.field_ != field_))
        throw ArithmeticError("accumulator field mismatch");
    const std::int64_t d = a.den_ * b.den_;
    rescale_to(d);
    const __int128 s = static_cast<__int128>(scale) * (den_ / d);
    const auto m = static_cast<std::uint32_t>(field_->modulus());
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_) {
            std::uint32_t ey = conjugate_b ? (y.exp == 0 ? 0 : m - y.exp) : y.exp;
            std::uint32_t e = x.exp + ey;
            if (e >= m) e -= m;
            dense_[e] += s * x.coeff * y.coeff;
        }
}

CycValue CycAccumulator::finish() const {
    std::vector<__int128> dense = dense_;
    field_->reduce(dense);
    CycValue r;
    r.field_ = field_;
    for (std::int64_t i = 0; i < field_->degree(); ++i)
        if (dense[i] != 0) r.terms_.push_back({static_cast<std::uint32_t>(i), narrow(dense[i])});
    r.den_ = den_;
    return r.canonical();
}

}  // namespace gl3
