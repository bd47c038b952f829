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

#include <numeric>

#include "gl3/conjecture.hpp"
#include "support.hpp"

using namespace gl3;
using gl3::testing::ctx;

TEST_CASE("coefficients") {
    CHECK(coefficients(3) == std::vector<std::int64_t>{1, 1});
    CHECK(coefficients(4) == std::vector<std::int64_t>{1, 2, 2, 1});
    CHECK(coefficients(5) == std::vector<std::int64_t>{1, 3, 5, 6, 5, 3, 1});
    CHECK_THROWS(coefficients(2));
    std::int64_t fact = 1;
    for (int n = 3; n <= 7; ++n) {
        fact *= n - 1;
        const auto c = coefficients(n);
        CHECK(c.front() == 1);
        CHECK(c.back() == 1);
        CHECK(std::accumulate(c.begin(), c.end(), std::int64_t{0}) == fact);
        CHECK(std::equal(c.begin(), c.end(), c.rbegin()));
    }
}

TEST_CASE("patterns") {
    CHECK(upper_positions(3).size() == 3);
    const auto p1 = enumerate_patterns(3, 1);
    REQUIRE(p1.size() == 2);
    CHECK(p1[0].zeroed == std::vector<Position>{{1, 2}});
    CHECK(p1[1].zeroed == std::vector<Position>{{2, 3}});
    CHECK_FALSE((UnipotentPattern{3, {{1, 3}}}).is_subgroup());
    CHECK(to_string(UnipotentPattern{3, {}}) == to_string(UnipotentPattern{3, {}}));
}

TEST_CASE("symbolic closure matches the literal group") {
    for (int n : {3, 4}) {
        const auto pos = upper_positions(n);
        for (int q : {2, 3}) {
            auto tower = make_tower(q, 1);
            for (unsigned mask = 0; mask < (1u << pos.size()); ++mask) {
                UnipotentPattern p{n, {}};
                for (std::size_t i = 0; i < pos.size(); ++i)
                    if (mask >> i & 1u) p.zeroed.push_back(pos[i]);
                if (n == 4 && q == 3 && p.zeroed.size() < 2) continue;
                CAPTURE(to_string(p));
                CHECK(p.is_subgroup() == literal_closure(p, *tower));
            }
        }
    }
}

TEST_CASE("families") {
    const auto f3 = enumerate_families(3);
    CHECK(f3.size() == 2);
    for (const auto& f : f3) {
        CHECK_NOTHROW(validate_family(f));
        for (std::int64_t q : {2, 3, 4, 5}) CHECK(family_degree(f, q) == tensor_degree(3, q));
    }
    CHECK(enumerate_families(4).size() == 693);
    for (const auto& f : enumerate_families(4, 50)) CHECK(family_degree(f, 2) == tensor_degree(4, 2));
    InterpolatingFamily bad{3, {{UnipotentPattern{3, {{1, 3}}}}, {UnipotentPattern{3, {}}}}};
    CHECK_THROWS_AS(validate_family(bad), std::invalid_argument);
}

TEST_CASE("GL(n,2) class structure") {
    CHECK(GLn2(2).classes().size() == 3);
    CHECK(GLn2(3).classes().size() == 6);
    CHECK(GLn2(4).classes().size() == 14);
    CHECK(GLn2(3).order() == 168);
    CHECK(GLn2(4).order() == 20160);
    for (int n : {2, 3, 4}) {
        const GLn2 g(n);
        std::int64_t total = 0;
        for (const auto& c : g.classes()) total += c.size;
        CHECK(total == g.order());
        CHECK(g.classes().front().size == 1);
    }
}

TEST_CASE("GL(3,2) Gelfand-Graev matches the q=2 engine") {
    const GLn2 g(3);
    const auto values = g.induce(UnipotentPattern{3, {}});
    const Context& c = ctx(2);
    const ClassFunction gg = c.induction().induce(SubgroupSpec::zn(0, 1));
    for (std::size_t i = 0; i < g.classes().size(); ++i) {
        const auto r = g.rows(g.classes()[i].representative);
        Mat3 m{};
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) m[3 * a + b] = static_cast<Elem>(r[a][b]);
        CHECK(gg[c.classes().classify_index(m)] == CycValue(c.field(), values[i]));
    }
}

TEST_CASE("n=3 families at q=4") {
    for (const auto& f : enumerate_families(3)) {
        const FamilyCheck chk = check_family_n3(ctx(4), f);
        CAPTURE(to_string(f));
        CHECK(chk.passed());
    }
}
