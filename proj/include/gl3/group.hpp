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

#ifndef GL3_GROUP_HPP
#define GL3_GROUP_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gl3/fields.hpp"

namespace gl3 {

/// |GL(3, F_q)| = (q^3-1)(q^3-q)(q^3-q^2).
std::int64_t group_order(std::int64_t q);

/// Arithmetic on 3x3 matrices over the base field of a tower.
class MatrixOps {
   public:
    explicit MatrixOps(const FieldTower& tower) : t_(&tower) {}

    Mat3 identity() const { return scalar(1); }
    Mat3 scalar(Elem a) const;
    Mat3 mul(const Mat3& a, const Mat3& b) const;
    Mat3 sub(const Mat3& a, const Mat3& b) const;
    Elem det(const Mat3& a) const;
    /// Inverse via the adjugate; nullopt for singular input.
    std::optional<Mat3> inverse(const Mat3& a) const;
    int rank(const Mat3& a) const;
    Elem trace(const Mat3& a) const;
    /// Sum of the principal 2x2 minors.
    Elem minor_sum(const Mat3& a) const;
    /// X r X^{-1}.
    Mat3 conjugate(const Mat3& x, const Mat3& r, const Mat3& x_inv) const { return mul(mul(x, r), x_inv); }
    /// Decodes a base-q integer in [0, q^9) into a matrix (entry 0 is the least significant digit).
    Mat3 from_index(std::uint64_t index) const;

   private:
    const FieldTower* t_;
};

enum class ClassType : std::uint8_t { Ta, T1a, T11a, Tab, T1ab, Tabc, TKa, Tz };

const char* to_string(ClassType t) noexcept;
std::optional<ClassType> class_type_from_string(const std::string& s);

/// Conjugacy class label.  Parameters are discrete logs:
///   Ta, T1a, T11a: {a};  Tab, T1ab: {a, b} (a the repeated eigenvalue);
///   Tabc: {a, b, c} sorted;  TKa: {kappa (against g2, minimal in its
///   Frobenius orbit), a};  Tz: {z (against g3, minimal in its orbit)}.
struct ClassLabel {
    ClassType type = ClassType::Ta;
    std::array<std::int32_t, 3> params{};
    friend auto operator<=>(const ClassLabel&, const ClassLabel&) = default;
};

std::string to_string(const ClassLabel& label);

struct ClassDatum {
    ClassLabel label;
    Mat3 representative{};
    std::int64_t size = 0;
    std::int64_t centralizer = 0;
};

struct ClassOptions {
    /// Class sizes come from an explicit centralizer count up to this q,
    /// and from the closed forms above it.
    int brute_force_sizes_max_q = 5;
};

/// The canonical class list of GL(3, F_q) and a classifier for arbitrary
/// invertible matrices.  Immutable after construction.
class ConjugacyClasses {
   public:
    explicit ConjugacyClasses(std::shared_ptr<const FieldTower> tower, const ClassOptions& options = {});

    const FieldTower& tower() const noexcept { return *tower_; }
    const MatrixOps& ops() const noexcept { return ops_; }
    int q() const noexcept { return tower_->q(); }
    std::int64_t group_order() const noexcept { return order_; }

    const std::vector<ClassDatum>& classes() const noexcept { return classes_; }
    std::size_t size() const noexcept { return classes_.size(); }
    const ClassDatum& operator[](std::size_t i) const { return classes_.at(i); }
    std::optional<std::size_t> index_of(const ClassLabel& label) const;

    ClassLabel classify(const Mat3& m) const;
    std::size_t classify_index(const Mat3& m) const;

    /// Representative matrix of a label (need not be canonical for TKa/Tz).
    Mat3 representative(const ClassLabel& label) const;
    /// |C_G(r)| by solving X r = r X and counting invertible solutions.
    std::int64_t centralizer_order_bruteforce(const Mat3& r) const;
    /// Closed-form class size for the type.
    std::int64_t class_size_formula(ClassType type) const;

    std::int32_t canonical_kappa(std::int64_t dlog2) const;
    std::int32_t canonical_z(std::int64_t dlog3) const;

   private:
    using Key = std::uint32_t;
    Key poly_key(Elem a, Elem b, Elem c) const { return (static_cast<Key>(a) * q() + b) * q() + c; }

    std::shared_ptr<const FieldTower> tower_;
    MatrixOps ops_;
    std::int64_t order_;
    std::vector<ClassDatum> classes_;
    std::map<ClassLabel, std::size_t> index_;
    // Monic quadratic x^2 + b x + c irreducible over F_q -> canonical kappa.
    std::vector<std::int32_t> quad_root_;
    // Monic cubic x^3 + b x^2 + c x + d irreducible -> canonical z.
    std::vector<std::int32_t> cubic_root_;
};

}  // namespace gl3

#endif  // GL3_GROUP_HPP
