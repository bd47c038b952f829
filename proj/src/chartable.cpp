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


#include "gl3/chartable.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gl3 {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
    if (m == 1) return 0;
    std::int64_t t = 0, nt = 1, r = m, nr = mod(a, m);
    while (nr != 0) {
        const std::int64_t k = r / nr;
        t -= k * nt;
        std::swap(t, nt);
        r -= k * nr;
        std::swap(r, nr);
    }
    if (r != 1) throw std::invalid_argument("value is not invertible");
    return mod(t, m);
}

constexpr Family kFamilies[] = {Family::P1,     Family::Pq2q, Family::Pq3, Family::PabSmall,
                                Family::PabBig, Family::Pabc, Family::Int, Family::Cusp};

}  // namespace

const char* to_string(Family f) noexcept {
    switch (f) {
        case Family::P1: return "p1";
        case Family::Pq2q: return "pq2q";
        case Family::Pq3: return "pq3";
        case Family::PabSmall: return "pab";
        case Family::PabBig: return "pabq";
        case Family::Pabc: return "pabc";
        case Family::Int: return "int";
        case Family::Cusp: return "cusp";
    }
    return "?";
}

std::optional<Family> family_from_string(const std::string& s) {
    for (auto f : kFamilies)
        if (s == to_string(f)) return f;
    return std::nullopt;
}

int param_count(Family f) noexcept {
    switch (f) {
        case Family::PabSmall:
        case Family::PabBig:
        case Family::Int: return 2;
        case Family::Pabc: return 3;
        default: return 1;
    }
}

std::string to_string(const IrrLabel& label) {
    std::ostringstream os;
    os << to_string(label.family);
    for (int i = 0; i < param_count(label.family); ++i) os << ':' << label.params[i];
    return os.str();
}

IrrLabel parse_label(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.empty()) throw std::invalid_argument("empty character label");
    const auto fam = family_from_string(parts[0]);
    if (!fam) throw std::invalid_argument("unknown character family '" + parts[0] + "'");
    IrrLabel l{*fam, {}};
    if (static_cast<int>(parts.size()) != param_count(*fam) + 1)
        throw std::invalid_argument("label '" + text + "' needs " + std::to_string(param_count(*fam)) + " exponents");
    for (int i = 0; i < param_count(*fam); ++i) {
        std::size_t used = 0;
        l.params[i] = std::stoll(parts[i + 1], &used);
        if (used != parts[i + 1].size()) throw std::invalid_argument("bad exponent in label '" + text + "'");
    }
    return l;
}

bool VirtualCharacter::is_genuine() const {
    return std::all_of(terms.begin(), terms.end(), [](const auto& t) { return t.second >= 0; });
}

std::string to_string(const VirtualCharacter& v) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [l, c] : v.terms) {
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << '-';
        const std::int64_t a = c < 0 ? -c : c;
        if (a != 1) os << a << '*';
        os << to_string(l);
        first = false;
    }
    return first ? "0" : os.str();
}

bool TableReport::ok() const {
    return count == expected_count && sum_of_squares == group_order && orthogonality_failures.empty() && regular_ok &&
           degree_failures.empty();
}

// ---------------------------------------------------------------- table

CharacterTable::CharacterTable(const ConjugacyClasses& classes, const CyclotomicField& field)
    : classes_(&classes), field_(&field), q_(classes.q()), m_(field.modulus()) {
    const FieldTower& t = classes.tower();
    for (int d = 1; d <= 3; ++d) order_[d] = t.group_order(d);
    if (m_ % order_[3] != 0 || m_ % order_[2] != 0 || m_ % t.p() != 0)
        throw std::invalid_argument("cyclotomic modulus does not contain the character values");
    s2_ = t.lift(t.exp1(1), 2).dlog();
    s3_ = t.lift(t.exp1(1), 3).dlog();
}

std::uint32_t CharacterTable::zexp(int degree, std::int64_t exponent, std::int64_t dlog) const {
    const std::int64_t n = order_[degree];
    return static_cast<std::uint32_t>(mod(mod(exponent, n) * mod(dlog, n), n) * (m_ / n));
}

std::int64_t CharacterTable::norm_dlog(int degree, std::int64_t k) const {
    return mod(mod(k, order_[1]) * classes_->tower().norm_exponent(degree), order_[1]);
}

std::int64_t CharacterTable::degree(Family f) const {
    const std::int64_t q = q_;
    switch (f) {
        case Family::P1: return 1;
        case Family::Pq2q: return q * q + q;
        case Family::Pq3: return q * q * q;
        case Family::PabSmall: return q * q + q + 1;
        case Family::PabBig: return q * (q * q + q + 1);
        case Family::Pabc: return (q + 1) * (q * q + q + 1);
        case Family::Int: return q * q * q - 1;
        case Family::Cusp: return (q - 1) * (q * q - 1);
    }
    return 0;
}

std::int64_t CharacterTable::family_count(Family f) const {
    const std::int64_t q = q_;
    switch (f) {
        case Family::P1:
        case Family::Pq2q:
        case Family::Pq3: return q - 1;
        case Family::PabSmall:
        case Family::PabBig: return (q - 1) * (q - 2);
        case Family::Pabc: return (q - 1) * (q - 2) * (q - 3) / 6;
        case Family::Int: return q * (q - 1) * (q - 1) / 2;
        case Family::Cusp: return (q * q * q - q) / 3;
    }
    return 0;
}

bool CharacterTable::is_generic(const IrrLabel& l) const {
    const auto& p = l.params;
    switch (l.family) {
        case Family::PabSmall:
        case Family::PabBig: return mod(p[0], order_[1]) != mod(p[1], order_[1]);
        case Family::Pabc: {
            const std::int64_t a = mod(p[0], order_[1]), b = mod(p[1], order_[1]), c = mod(p[2], order_[1]);
            return a != b && b != c && a != c;
        }
        case Family::Int: return mod(p[1] * q_, order_[2]) != mod(p[1], order_[2]);
        case Family::Cusp: return mod(p[0] * q_, order_[3]) != mod(p[0], order_[3]);
        default: return true;
    }
}

IrrLabel CharacterTable::canonical(const IrrLabel& l) const {
    IrrLabel r{l.family, {}};
    const auto& p = l.params;
    switch (l.family) {
        case Family::P1:
        case Family::Pq2q:
        case Family::Pq3: r.params[0] = mod(p[0], order_[1]); break;
        case Family::PabSmall:
        case Family::PabBig:
            r.params[0] = mod(p[0], order_[1]);
            r.params[1] = mod(p[1], order_[1]);
            break;
        case Family::Pabc: {
            std::array<std::int64_t, 3> s{mod(p[0], order_[1]), mod(p[1], order_[1]), mod(p[2], order_[1])};
            std::sort(s.begin(), s.end());
            r.params = s;
            break;
        }
        case Family::Int: {
            r.params[0] = mod(p[0], order_[1]);
            const std::int64_t la = mod(p[1], order_[2]);
            r.params[1] = std::min(la, mod(la * q_, order_[2]));
            break;
        }
        case Family::Cusp: {
            const std::int64_t f0 = mod(p[0], order_[3]);
            const std::int64_t f1 = mod(f0 * q_, order_[3]);
            const std::int64_t f2 = mod(f1 * q_, order_[3]);
            r.params[0] = std::min({f0, f1, f2});
            break;
        }
    }
    return r;
}

std::vector<IrrLabel> CharacterTable::all_irreducibles() const {
    std::vector<IrrLabel> out;
    const std::int64_t q1 = order_[1];
    for (auto f : {Family::P1, Family::Pq2q, Family::Pq3})
        for (std::int64_t a = 0; a < q1; ++a) out.push_back({f, {a, 0, 0}});
    for (auto f : {Family::PabSmall, Family::PabBig})
        for (std::int64_t a = 0; a < q1; ++a)
            for (std::int64_t b = 0; b < q1; ++b)
                if (a != b) out.push_back({f, {a, b, 0}});
    for (std::int64_t a = 0; a < q1; ++a)
        for (std::int64_t b = a + 1; b < q1; ++b)
            for (std::int64_t c = b + 1; c < q1; ++c) out.push_back({Family::Pabc, {a, b, c}});
    for (std::int64_t a = 0; a < q1; ++a)
        for (std::int64_t la = 0; la < order_[2]; ++la) {
            const IrrLabel l{Family::Int, {a, la, 0}};
            if (is_generic(l) && canonical(l) == l) out.push_back(l);
        }
    for (std::int64_t ph = 0; ph < order_[3]; ++ph) {
        const IrrLabel l{Family::Cusp, {ph, 0, 0}};
        if (is_generic(l) && canonical(l) == l) out.push_back(l);
    }
    return out;
}

CycValue CharacterTable::value(const IrrLabel& label, std::size_t cls) const {
    if (!is_generic(label)) throw std::invalid_argument("degenerate label " + to_string(label) + " needs resolution");
    CycValue v(*field_, 0);
    evaluate(label, cls, [&](std::uint32_t e, std::int64_t c) { v += CycValue::root(*field_, e) * c; });
    return v;
}

ClassFunction CharacterTable::formula(const IrrLabel& label) const {
    std::vector<CycValue> vals;
    vals.reserve(classes_->size());
    for (std::size_t i = 0; i < classes_->size(); ++i) {
        CycValue v(*field_, 0);
        evaluate(label, i, [&](std::uint32_t e, std::int64_t c) { v += CycValue::root(*field_, e) * c; });
        vals.push_back(std::move(v));
    }
    return {*classes_, *field_, std::move(vals)};
}

const ClassFunction& CharacterTable::character(const IrrLabel& label) const {
    if (!is_generic(label)) throw std::invalid_argument("degenerate label " + to_string(label) + " needs resolution");
    const IrrLabel key = canonical(label);
    {
        std::lock_guard lock(mutex_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    ClassFunction f = formula(key);
    std::lock_guard lock(mutex_);
    return memo_.emplace(key, std::move(f)).first->second;
}

std::vector<std::complex<double>> CharacterTable::formula_complex(const IrrLabel& label) const {
    std::vector<std::complex<double>> out;
    out.reserve(classes_->size());
    const long double two_pi_over_m = 2.0L * std::numbers::pi_v<long double> / static_cast<long double>(m_);
    for (std::size_t i = 0; i < classes_->size(); ++i) {
        std::complex<long double> s = 0;
        evaluate(label, i, [&](std::uint32_t e, std::int64_t c) {
            s += static_cast<long double>(c) * std::polar(1.0L, two_pi_over_m * static_cast<long double>(e));
        });
        out.emplace_back(static_cast<double>(s.real()), static_cast<double>(s.imag()));
    }
    return out;
}

VirtualCharacter CharacterTable::resolve_degenerate(const IrrLabel& label) const {
    const std::int64_t q1 = order_[1];
    const auto& p = label.params;
    VirtualCharacter v;
    auto add = [&](Family f, std::int64_t a, std::int64_t b, std::int64_t c) {
        v.terms.push_back({canonical(IrrLabel{f, {a, b, 0}}), c});
    };
    if (is_generic(label)) {
        v.terms.push_back({canonical(label), 1});
        return v;
    }
    const FieldTower& t = classes_->tower();
    switch (label.family) {
        case Family::Cusp: {
            const std::int64_t index = order_[3] / q1;
            const std::int64_t ph = mod(p[0], order_[3]);
            if (ph % index != 0) break;
            const std::int64_t al = mod((ph / index) * inverse_mod(t.norm_exponent(3), q1), q1);
            add(Family::P1, al, 0, 1);
            add(Family::Pq2q, al, 0, -1);
            add(Family::Pq3, al, 0, 1);
            return v;
        }
        case Family::Int: {
            const std::int64_t la = mod(p[1], order_[2]);
            if (la % (q_ + 1) != 0) break;
            const std::int64_t al = mod(p[0], q1);
            const std::int64_t be = mod((la / (q_ + 1)) * inverse_mod(t.norm_exponent(2), q1), q1);
            if (be != al) {
                add(Family::PabBig, al, be, 1);
                add(Family::PabSmall, al, be, -1);
            } else {
                add(Family::Pq3, al, 0, 1);
                add(Family::P1, al, 0, -1);
            }
            return v;
        }
        case Family::PabBig:
            add(Family::Pq3, p[0], 0, 1);
            add(Family::Pq2q, p[0], 0, 1);
            return v;
        case Family::PabSmall:
            add(Family::P1, p[0], 0, 1);
            add(Family::Pq2q, p[0], 0, 1);
            return v;
        case Family::Pabc: {
            const std::int64_t a = mod(p[0], q1), b = mod(p[1], q1), c = mod(p[2], q1);
            if (a == b && b == c) {
                add(Family::P1, a, 0, 1);
                add(Family::Pq2q, a, 0, 2);
                add(Family::Pq3, a, 0, 1);
                return v;
            }
            const std::int64_t dbl = (a == b || a == c) ? a : b;
            const std::int64_t sgl = (a == b) ? c : (a == c ? b : a);
            add(Family::PabSmall, sgl, dbl, 1);
            add(Family::PabBig, sgl, dbl, 1);
            return v;
        }
        default: break;
    }
    throw std::invalid_argument("degenerate label " + to_string(label) + " has no known resolution");
}

ClassFunction CharacterTable::evaluate(const VirtualCharacter& v) const {
    ClassFunction f(*classes_, *field_);
    for (const auto& [l, c] : v.terms) f += character(l) * c;
    return f;
}

TableReport CharacterTable::validate() const {
    TableReport r;
    r.q = static_cast<int>(q_);
    r.group_order = classes_->group_order();
    r.expected_count = classes_->size();
    const auto labels = all_irreducibles();
    r.count = labels.size();
    for (auto f : kFamilies) {
        const auto n = std::count_if(labels.begin(), labels.end(), [&](const IrrLabel& l) { return l.family == f; });
        r.family_counts.push_back(static_cast<std::size_t>(n));
    }
    for (const auto& l : labels) {
        const std::int64_t d = degree(l);
        r.degrees.push_back(d);
        r.sum_of_squares += d * d;
        if (character(l)[0].rational_integer() != d) r.degree_failures.push_back(to_string(l));
    }
    std::sort(r.degrees.begin(), r.degrees.end());

    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = i; j < labels.size(); ++j) {
            const CycValue ip = inner(character(labels[i]), character(labels[j]));
            ++r.orthogonality_pairs;
            if (ip.rational_integer() != (i == j ? 1 : 0))
                r.orthogonality_failures.emplace_back(to_string(labels[i]), to_string(labels[j]));
        }

    ClassFunction reg(*classes_, *field_);
    for (const auto& l : labels) reg += character(l) * degree(l);
    ClassFunction expected(*classes_, *field_);
    expected[0] = CycValue(*field_, r.group_order);
    r.regular_ok = reg.equals(expected);
    return r;
}

}  // namespace gl3
