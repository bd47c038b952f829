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


#ifndef GL3_TESTS_SUPPORT_HPP
#define GL3_TESTS_SUPPORT_HPP

#include <map>
#include <memory>
#include <mutex>

#include "gl3/context.hpp"

namespace gl3::testing {

/// One shared context per q for the whole test binary.
inline const Context& ctx(int q) {
    static std::mutex mutex;
    static std::map<int, std::shared_ptr<Context>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[q];
    if (!slot) {
        ContextOptions opts;
        opts.tower.max_q = 16;
        slot = Context::create(q, opts);
    }
    return *slot;
}

}  // namespace gl3::testing

#endif  // GL3_TESTS_SUPPORT_HPP
