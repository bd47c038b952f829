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


#ifndef GL3_CONTEXT_HPP
#define GL3_CONTEXT_HPP

#include <functional>
#include <memory>

#include "gl3/chartable.hpp"
#include "gl3/cyclo.hpp"
#include "gl3/fields.hpp"
#include "gl3/group.hpp"
#include "gl3/induction.hpp"

namespace gl3 {

/// Library version string.
const char* version() noexcept;

/// M = p (q^2 - 1)(q^2 + q + 1).
std::int64_t cyclotomic_modulus(int p, int q);

struct ContextOptions {
    TowerOptions tower;
    ClassOptions classes;
    InductionOptions induction;
    /// Builds a histogram store once the tower is known; may be empty.
    std::function<std::shared_ptr<HistogramStore>(const FieldTower&)> store_factory;
};

/// Everything needed to compute with GL(3, F_q) for one q.
class Context {
   public:
    static std::shared_ptr<Context> create(int q, const ContextOptions& options = {});

    int q() const noexcept { return tower_->q(); }
    const FieldTower& tower() const noexcept { return *tower_; }
    std::shared_ptr<const FieldTower> tower_ptr() const noexcept { return tower_; }
    const CyclotomicField& field() const noexcept { return *field_; }
    const ConjugacyClasses& classes() const noexcept { return *classes_; }
    const CharacterTable& table() const noexcept { return *table_; }
    const InductionEngine& induction() const noexcept { return *engine_; }

   private:
    Context() = default;
    std::shared_ptr<const FieldTower> tower_;
    std::unique_ptr<CyclotomicField> field_;
    std::unique_ptr<ConjugacyClasses> classes_;
    std::unique_ptr<CharacterTable> table_;
    std::unique_ptr<InductionEngine> engine_;
};

}  // namespace gl3

#endif  // GL3_CONTEXT_HPP
