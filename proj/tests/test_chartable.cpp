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

#include <set>

#include "gl3/chartable.hpp"
#include "support.hpp"

using namespace gl3;
using gl3::testing::ctx;

TEST_CASE("tables validate") {
    for (int q : {2, 3, 4}) {
        const TableReport r = ctx(q).table().validate();
        CAPTURE(q);
        CHECK(r.ok());
        CHECK(r.count == static_cast<std::size_t>(q * q * q - q));
        CHECK(r.count == r.expected_count);
        CHECK(r.sum_of_squares == r.group_order);
        CHECK(r.regular_ok);
        CHECK(r.orthogonality_failures.empty());
    }
}

TEST_CASE("degrees at q=2") {
    std::multiset<std::int64_t> degrees;
    for (const auto& l : ctx(2).table().all_irreducibles()) degrees.insert(ctx(2).table().degree(l));
    CHECK(degrees == std::multiset<std::int64_t>{1, 3, 3, 6, 7, 8});
}

TEST_CASE("column orthogonality") {
    for (int q : {2, 3}) {
        const auto& t = ctx(q).table();
        const auto& cc = ctx(q).classes();
        const auto irr = t.all_irreducibles();
        for (std::size_t i = 0; i < cc.size(); ++i)
            for (std::size_t j = i; j < cc.size(); ++j) {
                CycAccumulator acc(ctx(q).field());
                for (const auto& l : irr) acc.add_product(t.value(l, i), t.value(l, j), 1, true);
                CHECK(acc.finish() == CycValue(ctx(q).field(), i == j ? cc[i].centralizer : 0));
            }
    }
}

TEST_CASE("labels") {
    const auto& t = ctx(4).table();
    for (const auto& l : t.all_irreducibles()) {
        CHECK(parse_label(to_string(l)) == l);
        CHECK(t.is_generic(l));
        CHECK(t.canonical(l) == l);
    }
    CHECK_THROWS_AS(parse_label("cusp:0:1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_label("nope:1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_label("pab:1:x"), std::invalid_argument);
    CHECK(to_string(parse_label("pabc:0:1:2")) == "pabc:0:1:2");
}

TEST_CASE("formula columns match the memoized characters") {
    const auto& t = ctx(3).table();
    for (const auto& l : t.all_irreducibles()) {
        CHECK(t.formula(l).equals(t.character(l)));
        const auto z = t.formula_complex(l);
        const auto exact = t.character(l).to_complex();
        for (std::size_t i = 0; i < z.size(); ++i) CHECK(std::abs(z[i] - exact[i]) < 1e-9);
    }
}

TEST_CASE("degenerate parameters") {
    const auto& t = ctx(3).table();
    const IrrLabel deg{Family::Pabc, {0, 0, 1}};
    CHECK_FALSE(t.is_generic(deg));
    const VirtualCharacter v = t.resolve_degenerate(deg);
    CHECK_FALSE(v.terms.empty());
    CHECK(t.evaluate(v).equals(t.formula(deg)));
    const IrrLabel gen = t.all_irreducibles().back();
    const VirtualCharacter same = t.resolve_degenerate(gen);
    REQUIRE(same.terms.size() == 1);
    CHECK(same.terms[0].first == gen);
}
