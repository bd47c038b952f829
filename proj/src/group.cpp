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

#include "gl3/group.hpp"

#include <algorithm>
#include <sstream>

namespace gl3 {

std::int64_t group_order(std::int64_t q) { return (q * q * q - 1) * (q * q * q - q) * (q * q * q - q * q); }

// ---------------------------------------------------------------- MatrixOps

Mat3 MatrixOps::scalar(Elem a) const {
    Mat3 m{};
    m[0] = m[4] = m[8] = a;
    return m;
}

Mat3 MatrixOps::mul(const Mat3& a, const Mat3& b) const {
    Mat3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Elem s = t_->mul(a[i * 3], b[j]);
            s = t_->add(s, t_->mul(a[i * 3 + 1], b[3 + j]));
            s = t_->add(s, t_->mul(a[i * 3 + 2], b[6 + j]));
            r[i * 3 + j] = s;
        }
    return r;
}

Mat3 MatrixOps::sub(const Mat3& a, const Mat3& b) const {
    Mat3 r{};
    for (int i = 0; i < 9; ++i) r[i] = t_->sub(a[i], b[i]);
    return r;
}

Elem MatrixOps::det(const Mat3& a) const {
    auto m2 = [&](int r0, int r1, int c0, int c1) {
        return t_->sub(t_->mul(a[r0 * 3 + c0], a[r1 * 3 + c1]), t_->mul(a[r0 * 3 + c1], a[r1 * 3 + c0]));
    };
    Elem d = t_->mul(a[0], m2(1, 2, 1, 2));
    d = t_->sub(d, t_->mul(a[1], m2(1, 2, 0, 2)));
    d = t_->add(d, t_->mul(a[2], m2(1, 2, 0, 1)));
    return d;
}

std::optional<Mat3> MatrixOps::inverse(const Mat3& a) const {
    const Elem d = det(a);
    if (d == 0) return std::nullopt;
    const Elem di = t_->inv(d);
    Mat3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            // Cofactor of (j, i).
            const int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
            const Elem c = t_->sub(t_->mul(a[r0 * 3 + c0], a[r1 * 3 + c1]), t_->mul(a[r0 * 3 + c1], a[r1 * 3 + c0]));
            r[i * 3 + j] = t_->mul(c, di);
        }
    return r;
}

int MatrixOps::rank(const Mat3& a) const {
    Mat3 m = a;
    int rank = 0;
    for (int col = 0; col < 3 && rank < 3; ++col) {
        int piv = -1;
        for (int r = rank; r < 3; ++r)
            if (m[r * 3 + col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        for (int c = 0; c < 3; ++c) std::swap(m[piv * 3 + c], m[rank * 3 + c]);
        const Elem inv = t_->inv(m[rank * 3 + col]);
        for (int r = 0; r < 3; ++r) {
            if (r == rank || m[r * 3 + col] == 0) continue;
            const Elem f = t_->mul(m[r * 3 + col], inv);
            for (int c = 0; c < 3; ++c) m[r * 3 + c] = t_->sub(m[r * 3 + c], t_->mul(f, m[rank * 3 + c]));
        }
        ++rank;
    }
    return rank;
}

Elem MatrixOps::trace(const Mat3& a) const { return t_->add(t_->add(a[0], a[4]), a[8]); }

Elem MatrixOps::minor_sum(const Mat3& a) const {
    auto m2 = [&](int i, int j) { return t_->sub(t_->mul(a[i * 3 + i], a[j * 3 + j]), t_->mul(a[i * 3 + j], a[j * 3 + i])); };
    return t_->add(t_->add(m2(0, 1), m2(0, 2)), m2(1, 2));
}

Mat3 MatrixOps::from_index(std::uint64_t index) const {
    Mat3 m{};
    const auto q = static_cast<std::uint64_t>(t_->q());
    for (int i = 0; i < 9; ++i) {
        m[i] = static_cast<Elem>(index % q);
        index /= q;
    }
    return m;
}

// ---------------------------------------------------------------- labels

const char* to_string(ClassType t) noexcept {
    switch (t) {
        case ClassType::Ta: return "Ta";
        case ClassType::T1a: return "T1a";
        case ClassType::T11a: return "T11a";
        case ClassType::Tab: return "Tab";
        case ClassType::T1ab: return "T1ab";
        case ClassType::Tabc: return "Tabc";
        case ClassType::TKa: return "TKa";
        case ClassType::Tz: return "Tz";
    }
    return "?";
}

std::optional<ClassType> class_type_from_string(const std::string& s) {
    for (auto t : {ClassType::Ta, ClassType::T1a, ClassType::T11a, ClassType::Tab, ClassType::T1ab, ClassType::Tabc,
                   ClassType::TKa, ClassType::Tz})
        if (s == to_string(t)) return t;
    return std::nullopt;
}

namespace {

int param_count(ClassType t) {
    switch (t) {
        case ClassType::Tab:
        case ClassType::T1ab:
        case ClassType::TKa: return 2;
        case ClassType::Tabc: return 3;
        default: return 1;
    }
}

}  // namespace

std::string to_string(const ClassLabel& label) {
    std::ostringstream os;
    os << to_string(label.type) << '(';
    for (int i = 0; i < param_count(label.type); ++i) os << (i ? "," : "") << label.params[i];
    os << ')';
    return os.str();
}

// ---------------------------------------------------------------- classes

ConjugacyClasses::ConjugacyClasses(std::shared_ptr<const FieldTower> tower, const ClassOptions& options)
    : tower_(std::move(tower)), ops_(*tower_), order_(gl3::group_order(tower_->q())) {
    const FieldTower& t = *tower_;
    const int qq = t.q();
    const std::int64_t q1 = qq - 1, q2 = t.group_order(2), q3 = t.group_order(3);

    quad_root_.assign(static_cast<std::size_t>(qq) * qq, -1);
    for (std::int64_t k = 0; k < q2; ++k) {
        if (k % (qq + 1) == 0) continue;
        const ExtElement kap = t.from_dlog(2, k);
        const ExtElement kq = t.frobenius(kap, 1);
        const Elem tr = t.to_base(kap + kq);
        const Elem nm = t.to_base(kap * kq);
        quad_root_[t.neg(tr) * qq + nm] = canonical_kappa(k);
    }
    cubic_root_.assign(static_cast<std::size_t>(qq) * qq * qq, -1);
    for (std::int64_t k = 0; k < q3; ++k) {
        if (k % (static_cast<std::int64_t>(qq) * qq + qq + 1) == 0) continue;
        const ExtElement z = t.from_dlog(3, k);
        const ExtElement z1 = t.frobenius(z, 1), z2 = t.frobenius(z, 2);
        const Elem e1 = t.to_base(z + z1 + z2);
        const Elem e2 = t.to_base(z * z1 + z * z2 + z1 * z2);
        const Elem e3 = t.to_base(z * z1 * z2);
        cubic_root_[poly_key(t.neg(e1), e2, t.neg(e3))] = canonical_z(k);
    }

    std::vector<ClassLabel> labels;
    auto push = [&](ClassType ty, std::int32_t a, std::int32_t b = 0, std::int32_t c = 0) {
        labels.push_back({ty, {a, b, c}});
    };
    for (auto ty : {ClassType::Ta, ClassType::T1a, ClassType::T11a})
        for (std::int32_t a = 0; a < q1; ++a) push(ty, a);
    for (auto ty : {ClassType::Tab, ClassType::T1ab})
        for (std::int32_t a = 0; a < q1; ++a)
            for (std::int32_t b = 0; b < q1; ++b)
                if (a != b) push(ty, a, b);
    for (std::int32_t a = 0; a < q1; ++a)
        for (std::int32_t b = a + 1; b < q1; ++b)
            for (std::int32_t c = b + 1; c < q1; ++c) push(ClassType::Tabc, a, b, c);
    for (std::int64_t k = 0; k < q2; ++k)
        if (k % (qq + 1) != 0 && canonical_kappa(k) == k)
            for (std::int32_t a = 0; a < q1; ++a) push(ClassType::TKa, static_cast<std::int32_t>(k), a);
    for (std::int64_t k = 0; k < q3; ++k)
        if (k % (static_cast<std::int64_t>(qq) * qq + qq + 1) != 0 && canonical_z(k) == k)
            push(ClassType::Tz, static_cast<std::int32_t>(k));

    const bool brute = qq <= options.brute_force_sizes_max_q;
    std::int64_t total = 0;
    for (const auto& lab : labels) {
        ClassDatum d;
        d.label = lab;
        d.representative = representative(lab);
        const std::int64_t formula = class_size_formula(lab.type);
        if (brute) {
            d.centralizer = centralizer_order_bruteforce(d.representative);
            d.size = order_ / d.centralizer;
            if (d.size != formula)
                throw std::logic_error("class size formula disagrees with centralizer count for " + to_string(lab));
        } else {
            d.size = formula;
            d.centralizer = order_ / formula;
        }
        total += d.size;
        index_.emplace(lab, classes_.size());
        classes_.push_back(d);
    }
    if (total != order_) throw std::logic_error("class equation fails");
    if (static_cast<std::int64_t>(classes_.size()) != static_cast<std::int64_t>(qq) * qq * qq - qq)
        throw std::logic_error("class count is not q^3 - q");
}

std::int32_t ConjugacyClasses::canonical_kappa(std::int64_t dlog2) const {
    const std::int64_t m = tower_->group_order(2);
    const std::int64_t k = ((dlog2 % m) + m) % m;
    return static_cast<std::int32_t>(std::min(k, k * tower_->q() % m));
}

std::int32_t ConjugacyClasses::canonical_z(std::int64_t dlog3) const {
    const std::int64_t m = tower_->group_order(3);
    const std::int64_t k = ((dlog3 % m) + m) % m;
    const std::int64_t k1 = k * tower_->q() % m, k2 = k1 * tower_->q() % m;
    return static_cast<std::int32_t>(std::min({k, k1, k2}));
}

std::optional<std::size_t> ConjugacyClasses::index_of(const ClassLabel& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Mat3 ConjugacyClasses::representative(const ClassLabel& label) const {
    const FieldTower& t = *tower_;
    const auto& p = label.params;
    Mat3 m{};
    switch (label.type) {
        case ClassType::Ta: return ops_.scalar(t.exp1(p[0]));
        case ClassType::T1a:
            m = ops_.scalar(t.exp1(p[0]));
            m[1] = 1;
            return m;
        case ClassType::T11a:
            m = ops_.scalar(t.exp1(p[0]));
            m[1] = 1;
            m[5] = 1;
            return m;
        case ClassType::Tab:
            m[0] = m[4] = t.exp1(p[0]);
            m[8] = t.exp1(p[1]);
            return m;
        case ClassType::T1ab:
            m[0] = m[4] = t.exp1(p[0]);
            m[1] = 1;
            m[8] = t.exp1(p[1]);
            return m;
        case ClassType::Tabc:
            m[0] = t.exp1(p[0]);
            m[4] = t.exp1(p[1]);
            m[8] = t.exp1(p[2]);
            return m;
        case ClassType::TKa: return t.embed_quadratic(t.from_dlog(2, p[0]), t.exp1(p[1]));
        case ClassType::Tz: return t.embed_cubic(t.from_dlog(3, p[0]));
    }
    return m;
}

std::int64_t ConjugacyClasses::class_size_formula(ClassType type) const {
    const std::int64_t q = tower_->q();
    const std::int64_t s3 = q * q + q + 1;
    switch (type) {
        case ClassType::Ta: return 1;
        case ClassType::T1a: return (q * q - 1) * s3;
        case ClassType::T11a: return q * (q - 1) * (q - 1) * (q + 1) * s3;
        case ClassType::Tab: return q * q * s3;
        case ClassType::T1ab: return q * q * (q - 1) * (q + 1) * s3;
        case ClassType::Tabc: return q * q * q * (q + 1) * s3;
        case ClassType::TKa: return q * q * q * (q - 1) * s3;
        case ClassType::Tz: return q * q * q * (q - 1) * (q - 1) * (q + 1);
    }
    return 0;
}

std::int64_t ConjugacyClasses::centralizer_order_bruteforce(const Mat3& r) const {
    const FieldTower& t = *tower_;
    // Linear system X r - r X = 0 in the 9 entries of X.
    std::array<std::array<Elem, 9>, 9> a{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int u = 0; u < 3; ++u)
                for (int v = 0; v < 3; ++v) {
                    Elem c = 0;
                    if (u == i) c = t.add(c, r[v * 3 + j]);
                    if (v == j) c = t.sub(c, r[i * 3 + u]);
                    a[i * 3 + j][u * 3 + v] = c;
                }
    // Reduced row echelon form.
    std::array<int, 9> pivot_col{};
    int rank = 0;
    for (int col = 0; col < 9 && rank < 9; ++col) {
        int piv = -1;
        for (int row = rank; row < 9; ++row)
            if (a[row][col] != 0) {
                piv = row;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[piv], a[rank]);
        const Elem inv = t.inv(a[rank][col]);
        for (auto& e : a[rank]) e = t.mul(e, inv);
        for (int row = 0; row < 9; ++row) {
            if (row == rank || a[row][col] == 0) continue;
            const Elem f = a[row][col];
            for (int c = 0; c < 9; ++c) a[row][c] = t.sub(a[row][c], t.mul(f, a[rank][c]));
        }
        pivot_col[rank++] = col;
    }
    std::vector<Mat3> basis;
    std::array<bool, 9> is_pivot{};
    for (int i = 0; i < rank; ++i) is_pivot[pivot_col[i]] = true;
    for (int free = 0; free < 9; ++free) {
        if (is_pivot[free]) continue;
        Mat3 b{};
        b[free] = 1;
        for (int i = 0; i < rank; ++i) b[pivot_col[i]] = t.neg(a[i][free]);
        basis.push_back(b);
    }
    // Odometer over all F_q-combinations of the basis, stepping each digit
    // through the element codes 0..q-1 and back to 0.
    const int dim = static_cast<int>(basis.size());
    const int qq = t.q();
    std::vector<Elem> step(qq);
    for (int c = 0; c < qq; ++c) step[c] = t.sub(static_cast<Elem>((c + 1) % qq), static_cast<Elem>(c));
    std::vector<int> digit(dim, 0);
    Mat3 x{};
    std::int64_t count = 0;
    while (true) {
        if (ops_.det(x) != 0) ++count;
        int pos = 0;
        while (pos < dim) {
            const Elem s = step[digit[pos]];
            for (int e = 0; e < 9; ++e) x[e] = t.add(x[e], t.mul(s, basis[pos][e]));
            if (++digit[pos] < qq) break;
            digit[pos] = 0;
            ++pos;
        }
        if (pos == dim) break;
    }
    return count;
}

ClassLabel ConjugacyClasses::classify(const Mat3& m) const {
    const FieldTower& t = *tower_;
    const Elem det = ops_.det(m);
    if (det == 0) throw std::invalid_argument("classify: singular matrix");
    // Characteristic polynomial x^3 + b2 x^2 + b1 x + b0.
    const Elem b2 = t.neg(ops_.trace(m)), b1 = ops_.minor_sum(m), b0 = t.neg(det);
    auto eval3 = [&](Elem x) { return t.add(t.mul(t.add(t.mul(t.add(x, b2), x), b1), x), b0); };
    const int qq = t.q();
    Elem r1 = 0;
    bool found = false;
    for (int x = 1; x < qq && !found; ++x)
        if (eval3(static_cast<Elem>(x)) == 0) {
            r1 = static_cast<Elem>(x);
            found = true;
        }
    if (!found) {
        const std::int32_t z = cubic_root_[poly_key(b2, b1, b0)];
        if (z < 0) throw std::logic_error("irreducible cubic without a recorded root");
        return {ClassType::Tz, {z, 0, 0}};
    }
    // Deflate: x^2 + c1 x + c0.
    const Elem c1 = t.add(b2, r1);
    const Elem c0 = t.add(b1, t.mul(r1, c1));
    auto eval2 = [&](Elem x) { return t.add(t.mul(t.add(x, c1), x), c0); };
    Elem r2 = 0;
    found = false;
    for (int x = 1; x < qq && !found; ++x)
        if (eval2(static_cast<Elem>(x)) == 0) {
            r2 = static_cast<Elem>(x);
            found = true;
        }
    if (!found) {
        const std::int32_t k = quad_root_[c1 * qq + c0];
        if (k < 0) throw std::logic_error("irreducible quadratic without a recorded root");
        return {ClassType::TKa, {k, t.dlog1(r1), 0}};
    }
    const Elem r3 = t.neg(t.add(c1, r2));
    const int l1 = t.dlog1(r1), l2 = t.dlog1(r2), l3 = t.dlog1(r3);
    auto rank_at = [&](Elem a) { return ops_.rank(ops_.sub(m, ops_.scalar(a))); };
    if (l1 == l2 && l2 == l3) {
        switch (rank_at(r1)) {
            case 0: return {ClassType::Ta, {l1, 0, 0}};
            case 1: return {ClassType::T1a, {l1, 0, 0}};
            default: return {ClassType::T11a, {l1, 0, 0}};
        }
    }
    if (l1 != l2 && l2 != l3 && l1 != l3) {
        std::array<std::int32_t, 3> s{l1, l2, l3};
        std::sort(s.begin(), s.end());
        return {ClassType::Tabc, s};
    }
    int dbl, sgl;
    Elem dbl_elem;
    if (l1 == l2) {
        dbl = l1, sgl = l3, dbl_elem = r1;
    } else if (l1 == l3) {
        dbl = l1, sgl = l2, dbl_elem = r1;
    } else {
        dbl = l2, sgl = l1, dbl_elem = r2;
    }
    const ClassType ty = rank_at(dbl_elem) == 1 ? ClassType::Tab : ClassType::T1ab;
    return {ty, {dbl, sgl, 0}};
}

std::size_t ConjugacyClasses::classify_index(const Mat3& m) const {
    const auto idx = index_of(classify(m));
    if (!idx) throw std::logic_error("classified label missing from the class list");
    return *idx;
}

}  // namespace gl3
