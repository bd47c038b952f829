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

#ifndef GL3_FIELDS_HPP
#define GL3_FIELDS_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace gl3 {

/// Code of an element of F_q: the base-p digits of its coordinates over F_p.
using Elem = std::uint8_t;

class FieldError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

struct TowerOptions {
    /// Largest q accepted by make_tower.
    int max_q = 9;
};

/// Multiplicative-group data for one layer F_{b^d} built over a field of
/// size b.  Elements are coded by their coordinate digits (base b) in the
/// power basis {1, x, ..., x^{d-1}} of the defining root x, which is also the
/// chosen primitive root.
struct ExtensionTable {
    int degree = 0;
    std::uint32_t base_size = 0;
    std::uint32_t size = 0;                  // b^d
    std::vector<std::uint32_t> defining;     // c_0..c_{d-1}: x^d + c_{d-1}x^{d-1} + ... + c_0
    std::vector<std::uint32_t> exp;          // exp[k] = x^k, k < size-1
    std::vector<std::int32_t> log;           // log[0] = -1
};

class FieldTower;

/// Element of F_{q^d}, d in {1,2,3}.  Holds a non-owning pointer to its
/// tower, which must outlive it.
class ExtElement {
   public:
    ExtElement(const FieldTower& tower, int degree, std::uint32_t code);

    const FieldTower& tower() const noexcept { return *tower_; }
    int degree() const noexcept { return degree_; }
    std::uint32_t code() const noexcept { return code_; }
    bool is_zero() const noexcept { return code_ == 0; }
    /// Coordinates over F_q in the basis {1, root, root^2}.
    std::array<Elem, 3> coeffs() const;
    /// Exponent against the tower's primitive root of this degree.
    std::int64_t dlog() const;

    ExtElement inverse() const;
    ExtElement pow(std::int64_t k) const;

    friend ExtElement operator+(const ExtElement& a, const ExtElement& b);
    friend ExtElement operator-(const ExtElement& a, const ExtElement& b);
    friend ExtElement operator*(const ExtElement& a, const ExtElement& b);
    friend bool operator==(const ExtElement& a, const ExtElement& b) noexcept {
        return a.tower_ == b.tower_ && a.degree_ == b.degree_ && a.code_ == b.code_;
    }

   private:
    const FieldTower* tower_;
    int degree_;
    std::uint32_t code_;
};

/// 3x3 matrix over F_q, row-major.
using Mat3 = std::array<Elem, 9>;

/// The tower F_q, F_{q^2}, F_{q^3} with primitive roots g1, g2, g3 and full
/// discrete-log tables.  Immutable after construction.
class FieldTower {
   public:
    FieldTower(int p, int n, const TowerOptions& options = {});

    int p() const noexcept { return p_; }
    int n() const noexcept { return n_; }
    int q() const noexcept { return q_; }
    /// q^d - 1, the order of F_{q^d}^x.
    std::int64_t group_order(int degree) const;
    std::uint32_t size(int degree) const { return layer(degree).size; }

    // ---- base field arithmetic on codes
    Elem add(Elem a, Elem b) const noexcept { return add_[a * q_ + b]; }
    Elem neg(Elem a) const noexcept { return neg_[a]; }
    Elem sub(Elem a, Elem b) const noexcept { return add_[a * q_ + neg_[b]]; }
    Elem mul(Elem a, Elem b) const noexcept { return mul_[a * q_ + b]; }
    Elem inv(Elem a) const;
    /// Discrete log against g1; throws on zero.
    int dlog1(Elem a) const;
    Elem exp1(std::int64_t k) const;
    /// Absolute trace F_q -> F_p as an integer in [0, p).
    int trace(Elem a) const noexcept { return trace_[a]; }
    const Elem* add_table() const noexcept { return add_.data(); }
    const Elem* mul_table() const noexcept { return mul_.data(); }
    const Elem* neg_table() const noexcept { return neg_.data(); }

    // ---- extension layers
    const ExtensionTable& layer(int degree) const;
    ExtElement element(int degree, std::uint32_t code) const { return {*this, degree, code}; }
    ExtElement generator(int degree) const;
    ExtElement from_dlog(int degree, std::int64_t k) const;
    /// Embed a base-field element into F_{q^d}.
    ExtElement lift(Elem a, int degree) const { return {*this, degree, a}; }
    /// The base-field element represented by x, which must lie in F_q.
    Elem to_base(const ExtElement& x) const;

    ExtElement frobenius(const ExtElement& x, std::int64_t k) const;
    /// N_d(x) = x * x^q * ... * x^{q^{d-1}}, returned as an element of degree 1.
    ExtElement norm(const ExtElement& x) const;
    /// Exponent e with N_d(g_d) = g1^e; coprime to q-1.
    std::int64_t norm_exponent(int degree) const { return norm_exp_[degree]; }

    /// Matrix of multiplication by z in the basis {1, s, s^2} of F_{q^3}.
    Mat3 embed_cubic(const ExtElement& z) const;
    /// diag(M_w, a) with M_w multiplication by w in the basis {1, t} of F_{q^2}.
    Mat3 embed_quadratic(const ExtElement& w, Elem a) const;

    /// Stable description of every choice the construction made.
    std::string fingerprint() const;

   private:
    std::uint32_t ext_add(int degree, std::uint32_t a, std::uint32_t b) const;
    std::uint32_t ext_neg(int degree, std::uint32_t a) const;
    std::uint32_t ext_mul(int degree, std::uint32_t a, std::uint32_t b) const;

    friend class ExtElement;
    friend ExtElement operator+(const ExtElement&, const ExtElement&);
    friend ExtElement operator-(const ExtElement&, const ExtElement&);
    friend ExtElement operator*(const ExtElement&, const ExtElement&);

    int p_;
    int n_;
    int q_;
    ExtensionTable prime_layer_;           // F_q over F_p
    std::array<ExtensionTable, 4> layers_; // [1..3] over F_q
    std::vector<Elem> add_;
    std::vector<Elem> mul_;
    std::vector<Elem> neg_;
    std::vector<int> trace_;
    std::array<std::int64_t, 4> norm_exp_{};
};

std::shared_ptr<const FieldTower> make_tower(int p, int n, const TowerOptions& options = {});

bool is_prime(std::int64_t v);
/// Splits q = p^n; throws FieldError when q is not a prime power.
std::pair<int, int> prime_power(std::int64_t q);

}  // namespace gl3

#endif  // GL3_FIELDS_HPP
