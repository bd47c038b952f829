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


#ifndef GL3_CHARTABLE_HPP
#define GL3_CHARTABLE_HPP

#include <array>
#include <compare>
#include <complex>
#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "gl3/chars.hpp"
#include "gl3/classfunction.hpp"
#include "gl3/cyclo.hpp"
#include "gl3/group.hpp"

namespace gl3 {

/// The eight families of irreducible characters.  Parameters are character
/// exponents: P1, Pq2q, Pq3 {alpha}; PabSmall, PabBig {alpha, beta};
/// Pabc {alpha, beta, gamma}; Int {alpha, lambda}; Cusp {phi}, where alpha,
/// beta, gamma live on F_q^x, lambda on F_{q^2}^x and phi on F_{q^3}^x.
enum class Family : std::uint8_t { P1, Pq2q, Pq3, PabSmall, PabBig, Pabc, Int, Cusp };

const char* to_string(Family f) noexcept;
std::optional<Family> family_from_string(const std::string& s);
int param_count(Family f) noexcept;

struct IrrLabel {
    Family family = Family::P1;
    std::array<std::int64_t, 3> params{};
    friend auto operator<=>(const IrrLabel&, const IrrLabel&) = default;
};

/// "family:e1[:e2[:e3]]", e.g. "cusp:1" or "pabc:0:1:2".
std::string to_string(const IrrLabel& label);
IrrLabel parse_label(const std::string& text);

/// Formal integer combination of irreducible labels.
struct VirtualCharacter {
    std::vector<std::pair<IrrLabel, std::int64_t>> terms;
    bool is_genuine() const;
};

std::string to_string(const VirtualCharacter& v);

struct TableReport {
    int q = 0;
    std::size_t count = 0;
    std::size_t expected_count = 0;
    std::vector<std::int64_t> degrees;
    std::int64_t sum_of_squares = 0;
    std::int64_t group_order = 0;
    std::size_t orthogonality_pairs = 0;
    std::vector<std::pair<std::string, std::string>> orthogonality_failures;
    bool regular_ok = false;
    std::vector<std::string> degree_failures;
    std::vector<std::size_t> family_counts;
    bool ok() const;
};

/// Exact character table of GL(3, F_q).  Columns are evaluated lazily and
/// memoized; all methods are safe to call concurrently.
class CharacterTable {
   public:
    CharacterTable(const ConjugacyClasses& classes, const CyclotomicField& field);

    const ConjugacyClasses& classes() const noexcept { return *classes_; }
    const CyclotomicField& field() const noexcept { return *field_; }
    const FieldTower& tower() const noexcept { return classes_->tower(); }
    int q() const noexcept { return static_cast<int>(q_); }

    std::int64_t degree(Family f) const;
    std::int64_t degree(const IrrLabel& label) const { return degree(label.family); }
    /// Number of generic labels of each family.
    std::int64_t family_count(Family f) const;

    bool is_generic(const IrrLabel& label) const;
    /// Orbit representative of the parameters; does not check genericity.
    IrrLabel canonical(const IrrLabel& label) const;
    std::vector<IrrLabel> all_irreducibles() const;

    /// Streams the entry of the formula column at a class as a sum of
    /// coeff * zeta_M^exp, calling sink(exp, coeff).  No genericity check.
    template <class Sink>
    void evaluate(const IrrLabel& label, std::size_t cls, Sink&& sink) const;

    /// Exact entry for a generic label.
    CycValue value(const IrrLabel& label, std::size_t cls) const;
    /// The irreducible character of a generic label, memoized.
    const ClassFunction& character(const IrrLabel& label) const;
    /// The formula column for arbitrary parameters.
    ClassFunction formula(const IrrLabel& label) const;
    /// Floating-point evaluation of the formula column.
    std::vector<std::complex<double>> formula_complex(const IrrLabel& label) const;

    /// Generic labels pass through; degenerate shapes covered by the
    /// degenerate-parameter identities resolve to signed combinations of
    /// generic labels; anything else throws std::invalid_argument.
    VirtualCharacter resolve_degenerate(const IrrLabel& label) const;
    ClassFunction evaluate(const VirtualCharacter& v) const;

    TableReport validate() const;

    // Exponent helpers shared with the induction and tensor modules.
    std::int64_t modulus() const noexcept { return m_; }
    std::uint32_t zexp(int degree, std::int64_t exponent, std::int64_t dlog) const;
    /// dlog against g_d of the base-field element g1^a.
    std::int64_t lift_dlog(int degree, std::int64_t a) const { return degree == 1 ? a : a * (degree == 2 ? s2_ : s3_); }
    /// dlog against g1 of N_d(g_d^k).
    std::int64_t norm_dlog(int degree, std::int64_t k) const;

   private:
    const ConjugacyClasses* classes_;
    const CyclotomicField* field_;
    std::int64_t q_, m_;
    std::array<std::int64_t, 4> order_{};  // q^d - 1
    std::int64_t s2_, s3_;                  // dlog_d(g1)
    mutable std::mutex mutex_;
    mutable std::map<IrrLabel, ClassFunction> memo_;
};

template <class Sink>
void CharacterTable::evaluate(const IrrLabel& label, std::size_t cls, Sink&& sink) const {
    const ClassDatum& datum = (*classes_)[cls];
    const auto& cp = datum.label.params;
    const std::int64_t A = cp[0], B = cp[1], C = cp[2];
    const std::int64_t q = q_;
    const std::uint32_t m = static_cast<std::uint32_t>(m_);
    auto emit = [&](std::uint64_t e, std::int64_t coeff) {
        if (coeff != 0) sink(static_cast<std::uint32_t>(e % m), coeff);
    };
    auto z1 = [&](std::int64_t e, std::int64_t k) -> std::uint64_t { return zexp(1, e, k); };
    const ClassType type = datum.label.type;
    const auto& p = label.params;

    switch (label.family) {
        case Family::P1:
        case Family::Pq2q:
        case Family::Pq3: {
            std::int64_t det = 0;
            switch (type) {
                case ClassType::Ta:
                case ClassType::T1a:
                case ClassType::T11a: det = 3 * A; break;
                case ClassType::Tab:
                case ClassType::T1ab: det = 2 * A + B; break;
                case ClassType::Tabc: det = A + B + C; break;
                case ClassType::TKa: det = norm_dlog(2, A) + B; break;
                case ClassType::Tz: det = norm_dlog(3, A); break;
            }
            const int row = static_cast<int>(type);
            std::int64_t coeff = 1;
            if (label.family == Family::Pq2q) {
                const std::int64_t c[8] = {q * q + q, q, 0, q + 1, 1, 2, 0, -1};
                coeff = c[row];
            } else if (label.family == Family::Pq3) {
                const std::int64_t c[8] = {q * q * q, 0, 0, q, 0, 1, -1, 1};
                coeff = c[row];
            }
            emit(z1(p[0], det), coeff);
            return;
        }
        case Family::PabSmall:
        case Family::PabBig: {
            const bool big = label.family == Family::PabBig;
            const std::int64_t al = p[0], be = p[1];
            const std::int64_t s3 = q * q + q + 1;
            switch (type) {
                case ClassType::Ta: emit(z1(al, A) + z1(be, 2 * A), big ? q * s3 : s3); return;
                case ClassType::T1a: emit(z1(al, A) + z1(be, 2 * A), big ? q : q + 1); return;
                case ClassType::T11a: emit(z1(al, A) + z1(be, 2 * A), big ? 0 : 1); return;
                case ClassType::Tab:
                    emit(z1(al, A) + z1(be, A + B), q + 1);
                    emit(z1(be, 2 * A) + z1(al, B), big ? q : 1);
                    return;
                case ClassType::T1ab:
                    emit(z1(al, A) + z1(be, A + B), 1);
                    emit(z1(be, 2 * A) + z1(al, B), big ? 0 : 1);
                    return;
                case ClassType::Tabc:
                    emit(z1(al, A) + z1(be, B + C), 1);
                    emit(z1(al, B) + z1(be, A + C), 1);
                    emit(z1(al, C) + z1(be, A + B), 1);
                    return;
                case ClassType::TKa: emit(z1(al, B) + z1(be, norm_dlog(2, A)), big ? -1 : 1); return;
                case ClassType::Tz: return;
            }
            return;
        }
        case Family::Pabc: {
            const std::int64_t al = p[0], be = p[1], ga = p[2];
            const std::int64_t s3 = q * q + q + 1;
            switch (type) {
                case ClassType::Ta: emit(z1(al + be + ga, A), (q + 1) * s3); return;
                case ClassType::T1a: emit(z1(al + be + ga, A), 2 * q + 1); return;
                case ClassType::T11a: emit(z1(al + be + ga, A), 1); return;
                case ClassType::Tab:
                case ClassType::T1ab: {
                    const std::int64_t c = type == ClassType::Tab ? q + 1 : 1;
                    emit(z1(al + be, A) + z1(ga, B), c);
                    emit(z1(al + ga, A) + z1(be, B), c);
                    emit(z1(be + ga, A) + z1(al, B), c);
                    return;
                }
                case ClassType::Tabc: {
                    const std::int64_t x[3] = {A, B, C};
                    static constexpr int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
                    for (const auto& s : perms) emit(z1(al, x[s[0]]) + z1(be, x[s[1]]) + z1(ga, x[s[2]]), 1);
                    return;
                }
                default: return;
            }
        }
        case Family::Int: {
            const std::int64_t al = p[0], la = p[1];
            auto lam_base = [&](std::int64_t a) -> std::uint64_t { return zexp(2, la, lift_dlog(2, a)); };
            switch (type) {
                case ClassType::Ta: emit(z1(al, A) + lam_base(A), q * q * q - 1); return;
                case ClassType::T1a:
                case ClassType::T11a: emit(z1(al, A) + lam_base(A), -1); return;
                case ClassType::Tab: emit(z1(al, B) + lam_base(A), q - 1); return;
                case ClassType::T1ab: emit(z1(al, B) + lam_base(A), -1); return;
                case ClassType::TKa:
                    emit(z1(al, B) + zexp(2, la, A), -1);
                    emit(z1(al, B) + zexp(2, la, A * q), -1);
                    return;
                default: return;
            }
        }
        case Family::Cusp: {
            const std::int64_t ph = p[0];
            auto phi_base = [&](std::int64_t a) -> std::uint64_t { return zexp(3, ph, lift_dlog(3, a)); };
            switch (type) {
                case ClassType::Ta: emit(phi_base(A), (q - 1) * (q * q - 1)); return;
                case ClassType::T1a: emit(phi_base(A), -(q - 1)); return;
                case ClassType::T11a: emit(phi_base(A), 1); return;
                case ClassType::Tz:
                    emit(zexp(3, ph, A), 1);
                    emit(zexp(3, ph, A * q), 1);
                    emit(zexp(3, ph, A * q * q), 1);
                    return;
                default: return;
            }
        }
    }
}

}  // namespace gl3

#endif  // GL3_CHARTABLE_HPP
