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


#ifndef GL3_INDUCTION_HPP
#define GL3_INDUCTION_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "gl3/chartable.hpp"
#include "gl3/classfunction.hpp"

namespace gl3 {

enum class SubgroupKind : std::uint8_t { TorusI, TorusM, TorusA, ZN, ZN1, ZNPattern };

const char* to_string(SubgroupKind k) noexcept;
std::optional<SubgroupKind> subgroup_kind_from_string(const std::string& s);

/// An induction source H together with a linear character of H.
///   TorusI:  chars = {alpha, beta, gamma}, diag(x, y, z) -> alpha(x) beta(y) gamma(z)
///   TorusM:  chars = {lambda, alpha}, diag(w, a) -> lambda(w) alpha(a)
///   TorusA:  chars = {phi}
///   ZN, ZN1, ZNPattern: chars = {alpha} on the center, twist = c for the
///   additive character v -> zeta_p^{Tr(c v)}, applied to the sum of the
///   superdiagonal entries.  ZNPattern lists the zeroed positions (1-based).
struct SubgroupSpec {
    SubgroupKind kind = SubgroupKind::TorusI;
    std::array<std::int64_t, 3> chars{};
    Elem twist = 1;
    std::vector<std::pair<int, int>> zeroed;

    static SubgroupSpec torus_i(std::int64_t a, std::int64_t b, std::int64_t c) { return {SubgroupKind::TorusI, {a, b, c}, 0, {}}; }
    static SubgroupSpec torus_m(std::int64_t lambda, std::int64_t a) { return {SubgroupKind::TorusM, {lambda, a, 0}, 0, {}}; }
    static SubgroupSpec torus_a(std::int64_t phi) { return {SubgroupKind::TorusA, {phi, 0, 0}, 0, {}}; }
    static SubgroupSpec zn(std::int64_t alpha, Elem twist) { return {SubgroupKind::ZN, {alpha, 0, 0}, twist, {}}; }
    static SubgroupSpec zn1(std::int64_t alpha, Elem twist) { return {SubgroupKind::ZN1, {alpha, 0, 0}, twist, {}}; }
    static SubgroupSpec pattern(std::int64_t alpha, Elem twist, std::vector<std::pair<int, int>> zeroed) {
        return {SubgroupKind::ZNPattern, {alpha, 0, 0}, twist, std::move(zeroed)};
    }

    bool is_torus() const noexcept { return kind == SubgroupKind::TorusI || kind == SubgroupKind::TorusM || kind == SubgroupKind::TorusA; }
    /// Zeroed superdiagonal positions, with ZN and ZN1 expanded.
    std::vector<std::pair<int, int>> zero_set() const;
    friend bool operator==(const SubgroupSpec&, const SubgroupSpec&) = default;
};

std::string to_string(const SubgroupSpec& spec);

/// Counts, for each class representative r and each element h of H, the
/// number of X in G with X r X^{-1} = h.  Independent of the character of H.
struct SweepHistogram {
    SubgroupKind kind = SubgroupKind::TorusI;  // TorusI, TorusM, TorusA or ZN
    std::size_t classes = 0;
    std::size_t bins = 0;
    std::vector<std::int64_t> counts;  // classes * bins
    std::int64_t& at(std::size_t cls, std::size_t bin) { return counts[cls * bins + bin]; }
    std::int64_t at(std::size_t cls, std::size_t bin) const { return counts[cls * bins + bin]; }
};

/// Persists sweep histograms between runs.
class HistogramStore {
   public:
    virtual ~HistogramStore() = default;
    virtual std::optional<SweepHistogram> load(SubgroupKind kind) = 0;
    virtual void save(const SweepHistogram& h) = 0;
};

struct InductionOptions {
    /// induce_bruteforce refuses larger q unless raised.
    int brute_force_max_q = 5;
    int jobs = 1;
    std::shared_ptr<HistogramStore> store;
    /// Progress callback for long sweeps: (kind, done, total).
    std::function<void(SubgroupKind, std::uint64_t, std::uint64_t)> progress;
};

class InductionEngine {
   public:
    InductionEngine(const CharacterTable& table, InductionOptions options = {});

    const CharacterTable& table() const noexcept { return *table_; }
    const InductionOptions& options() const noexcept { return options_; }

    std::int64_t subgroup_order(const SubgroupSpec& spec) const;
    /// Throws std::invalid_argument for malformed specs (bad pattern, zero
    /// twist, out-of-range exponents are reduced).
    void validate(const SubgroupSpec& spec) const;

    /// (1/|H|) sum over X in G with X r X^{-1} in H of theta(X r X^{-1}).
    ClassFunction induce_bruteforce(const SubgroupSpec& spec) const;
    /// Closed forms from the fusion sets of the three tori.
    ClassFunction induce_torus_fast(const SubgroupSpec& spec) const;
    /// Gelfand-Graev type inductions; always brute force.
    ClassFunction induce_gg(const SubgroupSpec& spec) const;
    /// Fast path for tori when q exceeds `brute_below`, brute force otherwise.
    ClassFunction induce(const SubgroupSpec& spec, bool prefer_fast = false) const;

    /// Elements of H paired with theta(h) as an exponent of zeta_M.
    std::vector<std::pair<Mat3, std::uint32_t>> subgroup_elements(const SubgroupSpec& spec) const;
    /// (1/|H|) sum_{h in H} theta(h) conj(f(h)).
    CycValue restricted_inner(const SubgroupSpec& spec, const ClassFunction& f) const;

    /// Runs (or loads) the sweep for a histogram kind.
    const SweepHistogram& histogram(SubgroupKind kind) const;
    SweepHistogram sweep(SubgroupKind kind) const;

   private:
    std::uint32_t theta_exponent(const SubgroupSpec& spec, std::size_t bin) const;
    bool bin_in_subgroup(const SubgroupSpec& spec, std::size_t bin) const;
    static SubgroupKind histogram_kind(SubgroupKind k);
    std::size_t bin_count(SubgroupKind kind) const;
    Mat3 bin_element(SubgroupKind kind, std::size_t bin) const;

    const CharacterTable* table_;
    InductionOptions options_;
    mutable std::mutex mutex_;
    mutable std::map<SubgroupKind, std::unique_ptr<SweepHistogram>> hist_;
};

}  // namespace gl3

#endif  // GL3_INDUCTION_HPP
