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

#include "gl3/induction.hpp"
#include "support.hpp"

using namespace gl3;
using gl3::testing::ctx;

namespace {

std::vector<SubgroupSpec> torus_specs(int q) {
    std::vector<SubgroupSpec> out;
    const std::int64_t q1 = q - 1, q2 = std::int64_t{q} * q - 1, q3 = std::int64_t{q} * q * q - 1;
    for (std::int64_t a = 0; a < q1; ++a)
        for (std::int64_t b = 0; b < q1; ++b)
            for (std::int64_t c = 0; c < q1; ++c) out.push_back(SubgroupSpec::torus_i(a, b, c));
    for (std::int64_t l = 0; l < q2; ++l)
        for (std::int64_t a = 0; a < q1; ++a) out.push_back(SubgroupSpec::torus_m(l, a));
    for (std::int64_t f = 0; f < q3; ++f) out.push_back(SubgroupSpec::torus_a(f));
    return out;
}

std::vector<SubgroupSpec> gg_specs(int q) {
    std::vector<SubgroupSpec> out;
    for (std::int64_t a = 0; a < q - 1; ++a)
        for (int tw = 1; tw < q; ++tw) {
            out.push_back(SubgroupSpec::zn(a, static_cast<Elem>(tw)));
            out.push_back(SubgroupSpec::zn1(a, static_cast<Elem>(tw)));
            out.push_back(SubgroupSpec::pattern(a, static_cast<Elem>(tw), {{2, 3}}));
        }
    return out;
}

std::int64_t index_of(const InductionEngine& e, const SubgroupSpec& s) {
    return e.table().classes().group_order() / e.subgroup_order(s);
}

}  // namespace

TEST_CASE("fast torus induction equals brute force") {
    for (int q : {2, 3}) {
        const auto& e = ctx(q).induction();
        for (const auto& s : torus_specs(q)) {
            CAPTURE(to_string(s));
            CHECK(e.induce_torus_fast(s).equals(e.induce_bruteforce(s)));
        }
    }
}

TEST_CASE("induced degrees are indices") {
    for (int q : {2, 3}) {
        const auto& e = ctx(q).induction();
        auto specs = torus_specs(q);
        for (const auto& s : gg_specs(q)) specs.push_back(s);
        for (const auto& s : specs) CHECK(e.induce(s).degree() == CycValue(ctx(q).field(), index_of(e, s)));
    }
}

TEST_CASE("frobenius reciprocity") {
    const int q = 2;
    const auto& e = ctx(q).induction();
    auto specs = torus_specs(q);
    for (const auto& s : gg_specs(q)) specs.push_back(s);
    const auto irr = ctx(q).table().all_irreducibles();
    for (const auto& s : specs) {
        const ClassFunction ind = e.induce(s);
        for (const auto& l : irr) {
            const ClassFunction& chi = ctx(q).table().character(l);
            CHECK(inner(ind, chi) == e.restricted_inner(s, chi));
        }
    }
}

TEST_CASE("gelfand-graev characters are multiplicity free") {
    for (int q : {2, 3}) {
        const auto& e = ctx(q).induction();
        for (std::int64_t a = 0; a < q - 1; ++a) {
            const ClassFunction gg = e.induce(SubgroupSpec::zn(a, 1));
            std::int64_t deg = 0;
            for (const auto& l : ctx(q).table().all_irreducibles()) {
                const auto m = inner(gg, ctx(q).table().character(l)).rational_integer();
                REQUIRE(m.has_value());
                CHECK((*m == 0 || *m == 1));
                deg += *m * ctx(q).table().degree(l);
            }
            CHECK(CycValue(ctx(q).field(), deg) == gg.degree());
        }
    }
}

TEST_CASE("spec validation") {
    const auto& e = ctx(3).induction();
    CHECK_THROWS_AS(e.validate(SubgroupSpec::zn(0, 0)), std::invalid_argument);
    CHECK_THROWS_AS(e.validate(SubgroupSpec::pattern(0, 1, {{1, 1}})), std::invalid_argument);
    CHECK_NOTHROW(e.validate(SubgroupSpec::pattern(0, 1, {{1, 2}})));
    CHECK(SubgroupSpec::zn1(0, 1).zero_set() == std::vector<std::pair<int, int>>{{1, 2}});
    CHECK(subgroup_kind_from_string(to_string(SubgroupKind::TorusM)) == SubgroupKind::TorusM);
}
