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

#include <random>

#include "gl3/group.hpp"

using namespace gl3;

namespace {

std::int64_t gl3_order(std::int64_t q) { return (q * q * q - 1) * (q * q * q - q) * (q * q * q - q * q); }

}  // namespace

TEST_CASE("class counts and group orders") {
    for (int q : {2, 3, 4, 5, 7, 8, 9}) {
        auto [p, n] = prime_power(q);
        ConjugacyClasses cc(make_tower(p, n));
        CAPTURE(q);
        CHECK(static_cast<int>(cc.size()) == q * q * q - q);
        CHECK(cc.group_order() == gl3_order(q));
        std::int64_t total = 0;
        for (const auto& c : cc.classes()) {
            total += c.size;
            CHECK(c.size * c.centralizer == cc.group_order());
            CHECK(c.size == cc.class_size_formula(c.label.type));
            CHECK(cc.classify(c.representative) == c.label);
            CHECK(cc.index_of(c.label).has_value());
        }
        CHECK(total == cc.group_order());
    }
    CHECK(gl3_order(2) == 168);
    CHECK(gl3_order(3) == 11232);
    CHECK(gl3_order(4) == 181440);
    CHECK(gl3_order(5) == 1488000);
}

TEST_CASE("brute enumeration matches class sizes") {
    for (int q : {2, 3}) {
        ConjugacyClasses cc(make_tower(q, 1));
        const auto& ops = cc.ops();
        std::vector<std::int64_t> counts(cc.size(), 0);
        std::uint64_t total = 1;
        for (int i = 0; i < 9; ++i) total *= static_cast<std::uint64_t>(q);
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            const Mat3 m = ops.from_index(idx);
            if (ops.det(m) == 0) continue;
            ++counts[cc.classify_index(m)];
        }
        for (std::size_t i = 0; i < cc.size(); ++i) CHECK(counts[i] == cc[i].size);
    }
}

TEST_CASE("centralizers by brute force") {
    ConjugacyClasses cc(make_tower(2, 2));
    for (const auto& c : cc.classes()) CHECK(cc.centralizer_order_bruteforce(c.representative) == c.centralizer);
}

TEST_CASE("classification is conjugation invariant") {
    for (auto [p, n] : {std::pair{5, 1}, {2, 2}, {3, 2}}) {
        ConjugacyClasses cc(make_tower(p, n));
        const auto& ops = cc.ops();
        std::uint64_t total = 1;
        for (int i = 0; i < 9; ++i) total *= static_cast<std::uint64_t>(cc.q());
        std::mt19937_64 rng(7);
        for (const auto& c : cc.classes()) {
            for (int tries = 0; tries < 3;) {
                const Mat3 x = ops.from_index(rng() % total);
                const auto xi = ops.inverse(x);
                if (!xi) continue;
                ++tries;
                CHECK(cc.classify(ops.conjugate(*xi, c.representative, x)) == c.label);
            }
        }
    }
}

TEST_CASE("labels round-trip through strings") {
    for (auto t : {ClassType::Ta, ClassType::T1a, ClassType::T11a, ClassType::Tab, ClassType::T1ab, ClassType::Tabc,
                   ClassType::TKa, ClassType::Tz})
        CHECK(class_type_from_string(to_string(t)) == t);
    CHECK_FALSE(class_type_from_string("nope").has_value());
}

TEST_CASE("matrix helpers") {
    ConjugacyClasses cc(make_tower(3, 1));
    const auto& ops = cc.ops();
    CHECK(ops.det(ops.identity()) == 1);
    CHECK(ops.rank(ops.scalar(0)) == 0);
    CHECK_FALSE(ops.inverse(ops.scalar(0)).has_value());
    const Mat3 m = ops.from_index(12345);
    if (auto mi = ops.inverse(m)) CHECK(ops.mul(m, *mi) == ops.identity());
}
