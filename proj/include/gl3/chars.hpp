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

#ifndef GL3_CHARS_HPP
#define GL3_CHARS_HPP

#include <cstdint>

#include "gl3/cyclo.hpp"
#include "gl3/fields.hpp"

namespace gl3 {

/// Character x -> zeta_{q^d-1}^{k dlog(x)} of F_{q^d}^x, stored by its
/// exponent k in [0, q^d - 1).
class MultChar {
   public:
    MultChar(const FieldTower& tower, int degree, std::int64_t exponent);
    static MultChar trivial(const FieldTower& tower, int degree) { return {tower, degree, 0}; }

    const FieldTower& tower() const noexcept { return *tower_; }
    int degree() const noexcept { return degree_; }
    std::int64_t exponent() const noexcept { return exponent_; }
    std::int64_t order() const noexcept { return tower_->group_order(degree_); }
    bool is_trivial() const noexcept { return exponent_ == 0; }

    Phase operator()(const ExtElement& x) const;
    /// Evaluation on the base field element a (only for degree 1).
    Phase at_base(Elem a) const;
    /// Evaluation on g_d^k.
    Phase at_dlog(std::int64_t k) const;

    MultChar operator*(const MultChar& other) const;
    MultChar inverse() const;
    MultChar pow(std::int64_t k) const;
    friend bool operator==(const MultChar& a, const MultChar& b) noexcept {
        return a.tower_ == b.tower_ && a.degree_ == b.degree_ && a.exponent_ == b.exponent_;
    }

   private:
    const FieldTower* tower_;
    int degree_;
    std::int64_t exponent_;
};

/// x -> zeta_p^{Tr(c x)} on F_q^+.
class AddChar {
   public:
    AddChar(const FieldTower& tower, Elem twist);
    Elem twist() const noexcept { return twist_; }
    bool is_trivial() const noexcept { return twist_ == 0; }
    Phase operator()(Elem x) const;

   private:
    const FieldTower* tower_;
    Elem twist_;
};

/// chi^q = chi o Frobenius.
MultChar char_frobenius(const MultChar& chi);
/// Restriction of a degree-2 or degree-3 character to F_q^x.
MultChar char_restrict(const MultChar& chi);
/// Canonical extension of a degree-1 character to F_{q^d}^x.
MultChar char_extend(const MultChar& alpha, int degree);
/// alpha o N_d.
MultChar char_inflate_norm(const MultChar& alpha, int degree);

}  // namespace gl3

#endif  // GL3_CHARS_HPP
