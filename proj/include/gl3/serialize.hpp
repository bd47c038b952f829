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


#ifndef GL3_SERIALIZE_HPP
#define GL3_SERIALIZE_HPP

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "gl3/conjecture.hpp"
#include "gl3/context.hpp"
#include "gl3/induction.hpp"
#include "gl3/tensorlab.hpp"

namespace gl3 {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Integers stay integers; anything else becomes
/// {"zeta": M, "den": d, "terms": [[k, c], ...]} over the canonical basis.
Json to_json(const CycValue& v);
Json to_json(const ClassFunction& f, bool with_classes = false);
Json to_json(const ClassLabel& l);
Json to_json(const IrrLabel& l);
Json to_json(const SubgroupSpec& s);
Json to_json(const Decomposition& d);
Json to_json(const Failure& f);
Json to_json(const VerifyReport& r);
Json to_json(const UnipotentPattern& p);
Json to_json(const InterpolatingFamily& f);

/// "Ti:a:b:c", "Tm:lambda:alpha", "Ta:phi", "ZN:alpha:twist",
/// "ZN1:alpha:twist", "ZNpattern:alpha:twist:12,23".
CycValue cyc_from_json(const Json& j, const CyclotomicField& field);
SubgroupSpec subgroup_from_json(const Json& j);
/// Accepts the colon form ("Tm:1:0") or a JSON object
/// {"kind": "Tm", "chars": [1, 0], "twist": 1, "zeroed": [[2, 3]]}.
SubgroupSpec parse_subgroup(const std::string& text);
/// [[[]], [[[1,2]]]] style nesting: packets of patterns of positions.
InterpolatingFamily family_from_json(const Json& j, int n);

/// Sweep histograms as JSON files stamped with the schema version, the
/// tool version, q and the tower fingerprint.  Stale or unreadable files
/// are ignored and rewritten.
class JsonHistogramStore : public HistogramStore {
   public:
    JsonHistogramStore(std::filesystem::path dir, int q, std::string fingerprint);
    std::optional<SweepHistogram> load(SubgroupKind kind) override;
    void save(const SweepHistogram& h) override;
    std::filesystem::path path(SubgroupKind kind) const;
    /// Number of files rejected as stale or corrupt.
    int rejected() const noexcept { return rejected_; }

   private:
    std::filesystem::path dir_;
    int q_;
    std::string fingerprint_;
    int rejected_ = 0;
};

/// Induced characters stored as induce-q{q}-{hash}.json, keyed by q and the spec.
class InducedCache {
   public:
    InducedCache(std::filesystem::path dir, const Context& ctx);
    std::optional<ClassFunction> load(const SubgroupSpec& spec);
    void save(const SubgroupSpec& spec, const ClassFunction& f);
    std::filesystem::path path(const SubgroupSpec& spec) const;
    int rejected() const noexcept { return rejected_; }

   private:
    std::filesystem::path dir_;
    const Context* ctx_;
    int rejected_ = 0;
};

}  // namespace gl3

#endif  // GL3_SERIALIZE_HPP
