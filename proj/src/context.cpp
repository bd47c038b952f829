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


#include "gl3/context.hpp"

namespace gl3 {

const char* version() noexcept { return GL3_VERSION; }

std::int64_t cyclotomic_modulus(int p, int q) {
    const std::int64_t qq = q;
    return p * (qq * qq - 1) * (qq * qq + qq + 1);
}

std::shared_ptr<Context> Context::create(int q, const ContextOptions& options) {
    const auto [p, n] = prime_power(q);
    std::shared_ptr<Context> ctx(new Context());
    ctx->tower_ = make_tower(p, n, options.tower);
    ctx->field_ = std::make_unique<CyclotomicField>(cyclotomic_modulus(p, q));
    ctx->classes_ = std::make_unique<ConjugacyClasses>(ctx->tower_, options.classes);
    ctx->table_ = std::make_unique<CharacterTable>(*ctx->classes_, *ctx->field_);
    InductionOptions io = options.induction;
    if (options.store_factory && !io.store) io.store = options.store_factory(*ctx->tower_);
    ctx->engine_ = std::make_unique<InductionEngine>(*ctx->table_, std::move(io));
    return ctx;
}

}  // namespace gl3
