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


#ifndef GL3_TENSORLAB_HPP
#define GL3_TENSORLAB_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gl3/chartable.hpp"
#include "gl3/classfunction.hpp"
#include "gl3/context.hpp"
#include "gl3/induction.hpp"

namespace gl3 {

/// Pointwise product; throws std::invalid_argument on a q mismatch.
ClassFunction product(const ClassFunction& f, const ClassFunction& g);

struct Decomposition {
    /// Nonzero multiplicities in the order of CharacterTable::all_irreducibles.
    std::vector<std::pair<IrrLabel, std::int64_t>> terms;
    std::int64_t degree = 0;
    bool genuine() const;
    std::int64_t multiplicity(const IrrLabel& label) const;
};

/// Multiplicities by inner products against every irreducible.  Throws
/// ArithmeticError when a multiplicity is not a rational integer or the
/// reconstruction differs from f.
Decomposition decompose(const CharacterTable& table, const ClassFunction& f);

// ---- identities as formal expressions

/// One tensor factor: an irreducible label (possibly degenerate) or an
/// induced character.
struct Factor {
    std::optional<IrrLabel> irr;
    std::optional<SubgroupSpec> ind;
    static Factor label(IrrLabel l) { return {l, std::nullopt}; }
    static Factor induced(SubgroupSpec s) { return {std::nullopt, std::move(s)}; }
};

struct Term {
    std::int64_t coeff = 1;
    std::vector<Factor> factors;
};

struct Identity {
    std::string tag;
    std::vector<Term> lhs;
    std::vector<Term> rhs;
};

std::string to_string(const Identity& id);

/// Parameter slot: the degree d of the field whose character group it ranges over.
using SlotDegrees = std::vector<int>;
using Tuple = std::vector<std::int64_t>;

// ---- reports

struct Failure {
    Tuple tuple;
    std::string detail;
    std::vector<std::string> classes;
};

struct VerifyReport {
    std::string name;
    int q = 0;
    std::string sweep;
    std::uint64_t tuple_space = 0;
    std::uint64_t tuples_checked = 0;
    std::uint64_t excluded = 0;
    std::vector<Failure> failures;
    std::uint64_t experimental_checked = 0;
    std::vector<Failure> experimental;
    std::vector<std::string> notes;
    bool ok() const { return failures.empty(); }
    bool admissible() const { return tuples_checked > 0; }
};

enum class SweepMode { Auto, Exhaustive, Random };

/// Case 1.ii readings of the second Int parameter.
enum class Interpretation { Restrict, Extend, Norm };
const char* to_string(Interpretation i) noexcept;
std::optional<Interpretation> interpretation_from_string(const std::string& s);

struct SweepOptions {
    SweepMode mode = SweepMode::Auto;
    std::size_t samples = 100;
    std::uint64_t seed = 20240601;
    std::uint64_t exhaustive_limit = 10000;
    std::vector<Tuple> explicit_tuples;
    bool experimental_degenerate = false;
    Interpretation interpretation = Interpretation::Restrict;
    /// Torus inductions through the closed forms instead of the sweeps.
    std::optional<bool> fast_induction;
    int jobs = 1;
    std::function<void(const std::string&, std::uint64_t, std::uint64_t)> progress;
};

const std::vector<std::string>& theorem1_cases();
/// Parameter slots of a case.
SlotDegrees theorem1_slots(const std::string& case_id, Interpretation interp = Interpretation::Restrict);
/// Both sides of a case for one tuple.  `alt_extension` replaces the
/// canonical extension in 3i and 8i by another extension.
Identity theorem1_identity(const Context& ctx, const std::string& case_id, const Tuple& t,
                           Interpretation interp = Interpretation::Restrict, bool alt_extension = false);

/// Evaluates a side of an identity; degenerate labels are resolved when
/// `resolve` is set and rejected otherwise.
ClassFunction evaluate_side(const Context& ctx, const std::vector<Term>& side, bool resolve, bool fast_induction);
/// True when every label on both sides is generic.
bool is_admissible(const Context& ctx, const Identity& id);

/// Generic driver: sweeps the tuple space of `slots` and checks build(t).
VerifyReport verify_identity(const Context& ctx, const std::string& name, const SlotDegrees& slots,
                             const std::function<std::vector<Identity>(const Tuple&)>& build,
                             const SweepOptions& options);

VerifyReport verify_theorem1(const Context& ctx, const std::string& case_id, const SweepOptions& options = {});
VerifyReport verify_corollary1(const Context& ctx, int item, const SweepOptions& options = {});
VerifyReport verify_prop1(const Context& ctx, const SweepOptions& options = {});
VerifyReport verify_section4(const Context& ctx, const SweepOptions& options = {});
/// Closed-form torus induction against the brute-force sweep.
VerifyReport verify_lemma1(const Context& ctx, const SweepOptions& options = {});
/// Formula columns at degenerate parameters against resolve_degenerate.
VerifyReport verify_lemma2(const Context& ctx, const SweepOptions& options = {});
/// Character table validity and the floating-point cross-check.
VerifyReport verify_table(const Context& ctx, double tolerance = 1e-9);
/// <Ind theta, chi>_G = <theta, Res chi>_H for the given specs and every irreducible.
/// Every torus character, plus ZN, ZN1 and the (2,3) pattern for each central character and twist.
std::vector<SubgroupSpec> reciprocity_specs(const Context& ctx);
VerifyReport verify_reciprocity(const Context& ctx, const std::vector<SubgroupSpec>& specs, const SweepOptions& options = {});

/// Section 4 closed forms for <Cusp(phi) x Cusp(psi), label>; nullopt for
/// families without one.
std::optional<std::int64_t> section4_prediction(const Context& ctx, std::int64_t phi, std::int64_t psi, const IrrLabel& label);

}  // namespace gl3

#endif  // GL3_TENSORLAB_HPP
