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


#ifndef GL3_CONJECTURE_HPP
#define GL3_CONJECTURE_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gl3/context.hpp"
#include "gl3/tensorlab.hpp"

namespace gl3 {

/// c_0(n), ..., c_m(n) with m = (n-2)(n-1)/2: the coefficients of
/// prod_{k=1}^{n-2} (1 + q + ... + q^k) as a polynomial in q.
std::vector<std::int64_t> coefficients(int n);
int family_depth(int n);

using Position = std::pair<int, int>;

/// Strictly upper positions (1-based) forced to zero in a subgroup of the
/// upper unipotent group N(n).
struct UnipotentPattern {
    int n = 3;
    std::vector<Position> zeroed;  // sorted

    /// Closure under products: a zeroed (i,j) needs (i,k) or (k,j) zeroed for every i<k<j.
    bool is_subgroup() const;
    friend bool operator==(const UnipotentPattern&, const UnipotentPattern&) = default;
    friend auto operator<=>(const UnipotentPattern&, const UnipotentPattern&) = default;
};

std::string to_string(const UnipotentPattern& p);
std::vector<Position> upper_positions(int n);
/// Subgroup patterns with exactly i zeroed positions, in lexicographic order
/// of their position lists.
std::vector<UnipotentPattern> enumerate_patterns(int n, int i);
/// Closure checked on the actual matrices over F_q; needs q^free <= 4096.
bool literal_closure(const UnipotentPattern& p, const FieldTower& tower);

/// Packets of patterns indexed by the number of zeroed positions.
struct InterpolatingFamily {
    int n = 3;
    std::vector<std::vector<UnipotentPattern>> packets;
};

std::string to_string(const InterpolatingFamily& f);
/// Throws std::invalid_argument describing the first violated condition.
void validate_family(const InterpolatingFamily& f);
/// Every valid family for n, up to `limit` of them.
std::vector<InterpolatingFamily> enumerate_families(int n, std::size_t limit = 1000);
/// sum over the family of [G : Z N'] for GL(n, q).
std::int64_t family_degree(const InterpolatingFamily& f, std::int64_t q);
/// deg Cusp x deg principal series for GL(n, q).
std::int64_t tensor_degree(int n, std::int64_t q);

struct FamilyCheck {
    InterpolatingFamily family;
    bool degree_ok = false;
    VerifyReport report;
    bool passed() const { return degree_ok && report.ok() && report.admissible(); }
};

/// Cusp(psi) x Pabc(b1,b2,b3) against the sum of the family's Gelfand-Graev
/// type inductions, for every cuspidal psi, every b1<b2<b3 and every
/// nontrivial additive character.
FamilyCheck check_family_n3(const Context& ctx, const InterpolatingFamily& family, const SweepOptions& options = {});
std::vector<FamilyCheck> search_families_n3(const Context& ctx, const SweepOptions& options = {});

/// GL(n, 2) by enumeration, n <= 4.  Matrices are coded row by row in
/// 4-bit groups.
class GLn2 {
   public:
    explicit GLn2(int n);

    struct Class {
        std::uint16_t representative;
        std::int64_t size;
    };

    int n() const noexcept { return n_; }
    std::int64_t order() const noexcept { return static_cast<std::int64_t>(elements_.size()); }
    const std::vector<Class>& classes() const noexcept { return classes_; }
    std::uint16_t mul(std::uint16_t a, std::uint16_t b) const;
    std::vector<std::vector<int>> rows(std::uint16_t m) const;

    /// Induced character of N' with u -> (-1)^(sum of the free superdiagonal
    /// entries), one integer per class.
    std::vector<std::int64_t> induce(const UnipotentPattern& p) const;
    std::vector<std::int64_t> induce(const InterpolatingFamily& f) const;

   private:
    int n_;
    std::vector<std::uint16_t> elements_;
    std::vector<std::int32_t> class_of_;  // indexed by code, -1 when singular
    std::vector<Class> classes_;
};

}  // namespace gl3

#endif  // GL3_CONJECTURE_HPP
