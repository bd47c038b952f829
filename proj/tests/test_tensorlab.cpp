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


#include <doctest.h>

#include "gl3/tensorlab.hpp"
#include "support.hpp"

using namespace gl3;
using gl3::testing::ctx;

namespace {

std::vector<std::int64_t> cusp_params(const Context& c) {
    std::vector<std::int64_t> out;
    for (const auto& l : c.table().all_irreducibles())
        if (l.family == Family::Cusp) out.push_back(l.params[0]);
    return out;
}

}  // namespace

TEST_CASE("products and decompositions") {
    const auto& t = ctx(3).table();
    const auto irr = t.all_irreducibles();
    const ClassFunction& one = t.character({Family::P1, {0, 0, 0}});
    for (const auto& l : irr) {
        CHECK(product(one, t.character(l)).equals(t.character(l)));
        const Decomposition d = decompose(t, t.character(l));
        REQUIRE(d.terms.size() == 1);
        CHECK(d.terms[0] == std::pair{l, std::int64_t{1}});
        CHECK(d.degree == t.degree(l));
    }
    const Decomposition d = decompose(t, product(t.character(irr[5]), t.character(irr.back())));
    CHECK(d.genuine());
    CHECK(d.degree == t.degree(irr[5]) * t.degree(irr.back()));
    const Decomposition v = decompose(t, t.character(irr[1]) - t.character(irr[2]));
    CHECK_FALSE(v.genuine());
    CHECK(v.multiplicity(irr[2]) == -1);
    CHECK(v.multiplicity(irr[3]) == 0);
}

TEST_CASE("non-virtual input is rejected") {
    const auto& t = ctx(2).table();
    ClassFunction f = t.character({Family::P1, {0, 0, 0}});
    f[0] = CycValue(ctx(2).field(), 2);
    CHECK_THROWS_AS(decompose(t, f), ArithmeticError);
}

TEST_CASE("theorem 1 at q=2 and q=3") {
    for (int q : {2, 3}) {
        for (const auto& c : theorem1_cases()) {
            CAPTURE(q);
            CAPTURE(c);
            const VerifyReport r = verify_theorem1(ctx(q), c);
            CHECK(r.ok());
            CHECK(r.tuples_checked + r.excluded == r.tuple_space);
        }
    }
}

TEST_CASE("a perturbed identity is caught") {
    const Context& c = ctx(3);
    const std::string id = "3ii";
    auto build = [&](const Tuple& t) {
        Identity i = theorem1_identity(c, id, t);
        i.rhs.front().coeff += 1;
        return std::vector<Identity>{i};
    };
    const VerifyReport r = verify_identity(c, "perturbed", theorem1_slots(id), build, {});
    REQUIRE(r.admissible());
    CHECK_FALSE(r.ok());
    CHECK(r.failures.size() == r.tuples_checked);
}

TEST_CASE("cross-torus consistency") {
    // The same tensor product expanded through different tori must agree.
    for (int q : {3, 4}) {
        for (const auto& group : {std::vector<std::string>{"3i", "3ii"}, {"7i", "7ii", "7iii"}, {"8i", "8ii"}}) {
            for (const auto& c : group) {
                CAPTURE(q);
                CAPTURE(c);
                SweepOptions o;
                o.mode = SweepMode::Random;
                o.samples = 10;
                CHECK(verify_theorem1(ctx(q), c, o).ok());
            }
        }
    }
}

TEST_CASE("corollary and lemmas") {
    CHECK(verify_corollary1(ctx(3), 1).ok());
    CHECK(verify_corollary1(ctx(3), 2).ok());
    CHECK(verify_lemma1(ctx(2)).ok());
    CHECK(verify_lemma1(ctx(3)).ok());
    CHECK(verify_lemma2(ctx(3)).ok());
    CHECK(verify_table(ctx(3)).ok());
}

TEST_CASE("cuspidal products at q=3") {
    const VerifyReport r = verify_section4(ctx(3));
    CHECK(r.ok());
    CHECK(r.tuples_checked == 64);
}

TEST_CASE("cuspidal products at q=4: principal series multiplicities") {
    const Context& c = ctx(4);
    const auto cusp = cusp_params(c);
    const auto irr = c.table().all_irreducibles();
    int mismatched = 0;
    for (std::size_t i = 0; i < cusp.size(); i += 4)
        for (std::size_t j = 1; j < cusp.size(); j += 5) {
            const auto d = decompose(c.table(), c.table().character({Family::Cusp, {cusp[i], 0, 0}}) *
                                                    c.table().character({Family::Cusp, {cusp[j], 0, 0}}));
            for (const auto& l : irr) {
                const auto want = section4_prediction(c, cusp[i], cusp[j], l);
                if (!want) continue;
                if (l.family == Family::Pabc) {
                    CHECK(d.multiplicity(l) == 4 * *want);
                    if (*want != 0) ++mismatched;
                } else {
                    CHECK(d.multiplicity(l) == *want);
                }
            }
        }
    CHECK(mismatched > 0);
}

TEST_CASE("interpretations and sweep modes") {
    CHECK(interpretation_from_string("extend") == Interpretation::Extend);
    CHECK_FALSE(interpretation_from_string("other").has_value());
    SweepOptions o;
    o.mode = SweepMode::Random;
    o.samples = 5;
    const VerifyReport a = verify_theorem1(ctx(4), "2", o);
    const VerifyReport b = verify_theorem1(ctx(4), "2", o);
    CHECK(a.tuples_checked == b.tuples_checked);
    CHECK(a.sweep == b.sweep);
    o.explicit_tuples = {{0, 1, 1, 2}};
    const VerifyReport e = verify_theorem1(ctx(4), "2", o);
    CHECK(e.sweep == "explicit");
    CHECK(e.tuples_checked + e.excluded == 1);
}
