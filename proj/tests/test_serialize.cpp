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

#include <filesystem>
#include <fstream>

#include "gl3/serialize.hpp"
#include "support.hpp"

using namespace gl3;
using gl3::testing::ctx;

namespace {

std::filesystem::path scratch(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("gl3-test-" + name);
    std::filesystem::remove_all(dir);
    return dir;
}

SweepHistogram sample() {
    SweepHistogram h;
    h.kind = SubgroupKind::TorusI;
    h.classes = 2;
    h.bins = 3;
    h.counts = {1, 2, 3, 4, 5, 6};
    return h;
}

}  // namespace

TEST_CASE("values") {
    const auto& f = ctx(2).field();
    CHECK(to_json(CycValue(f, 7)) == Json(7));
    const Json j = to_json(CycValue::root(f, 1));
    CHECK(j.at("zeta") == f.modulus());
    CHECK(to_json(IrrLabel{Family::Pabc, {0, 1, 2}}).dump().find("pabc") != std::string::npos);
}

TEST_CASE("subgroup specs") {
    CHECK(parse_subgroup("Ti:0:1:2") == SubgroupSpec::torus_i(0, 1, 2));
    CHECK(parse_subgroup("Tm:3:1") == SubgroupSpec::torus_m(3, 1));
    CHECK(parse_subgroup("Ta:5") == SubgroupSpec::torus_a(5));
    CHECK(parse_subgroup("ZN1:0:2") == SubgroupSpec::zn1(0, 2));
    CHECK(parse_subgroup("ZNpattern:1:1:12,23") == SubgroupSpec::pattern(1, 1, {{1, 2}, {2, 3}}));
    CHECK_THROWS_AS(parse_subgroup("Ti:0:1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_subgroup("Q:1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_subgroup("Ta:x"), std::invalid_argument);
    CHECK(parse_subgroup(R"({"kind": "Tm", "chars": [3, 1]})") == SubgroupSpec::torus_m(3, 1));
    CHECK(parse_subgroup(R"({"kind": "ZNpattern", "chars": [1], "twist": 2, "zeroed": [[2, 3]]})") ==
          SubgroupSpec::pattern(1, 2, {{2, 3}}));
    CHECK_THROWS_AS(parse_subgroup(R"({"kind": "Ti", "chars": [1]})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_subgroup(R"({"kind": "Ti", )"), std::invalid_argument);
    CHECK_THROWS_AS(parse_subgroup(R"({"chars": [1]})"), std::invalid_argument);
}

TEST_CASE("values round-trip") {
    const auto& f = ctx(3).field();
    for (const auto& l : ctx(3).table().all_irreducibles())
        for (const auto& v : ctx(3).table().character(l).values()) CHECK(cyc_from_json(to_json(v), f) == v);
    CHECK(cyc_from_json(to_json(CycValue(f, 1).div_int(3)), f) == CycValue(f, 1).div_int(3));
    CHECK_THROWS(cyc_from_json(to_json(CycValue::root(ctx(2).field(), 1)), f));
}

TEST_CASE("families round-trip") {
    for (const auto& f : enumerate_families(3)) {
        const auto g = family_from_json(to_json(f), 3);
        CHECK(to_string(g) == to_string(f));
    }
    CHECK_THROWS_AS(family_from_json(Json::parse("[[1]]"), 3), std::invalid_argument);
}

TEST_CASE("reports") {
    VerifyReport r;
    r.name = "x";
    r.failures.push_back({{1, 2}, "bad", {}});
    const Json j = to_json(r);
    CHECK(j.at("case") == "x");
    CHECK(j.at("ok") == false);
}

TEST_CASE("histogram cache") {
    const auto dir = scratch("cache");
    JsonHistogramStore store(dir, 3, "fp");
    CHECK_FALSE(store.load(SubgroupKind::TorusI).has_value());
    store.save(sample());
    const auto back = store.load(SubgroupKind::TorusI);
    REQUIRE(back.has_value());
    CHECK(back->counts == sample().counts);
    CHECK(back->bins == 3);
    CHECK(store.rejected() == 0);

    JsonHistogramStore stale(dir, 3, "other");
    CHECK_FALSE(stale.load(SubgroupKind::TorusI).has_value());
    CHECK(stale.rejected() == 1);

    JsonHistogramStore wrong_q(dir, 4, "fp");
    CHECK_FALSE(wrong_q.load(SubgroupKind::TorusI).has_value());

    {
        std::ofstream out(store.path(SubgroupKind::TorusI));
        out << "{not json";
    }
    CHECK_FALSE(store.load(SubgroupKind::TorusI).has_value());
    CHECK(store.rejected() == 1);

    store.save(sample());
    Json j = Json::parse(std::ifstream(store.path(SubgroupKind::TorusI)));
    CHECK(j.at("schema_version") == kSchemaVersion);
    CHECK(j.at("tool_version") == version());
    j["counts"] = Json::array({1});
    std::ofstream(store.path(SubgroupKind::TorusI)) << j.dump();
    CHECK_FALSE(store.load(SubgroupKind::TorusI).has_value());
    std::filesystem::remove_all(dir);
}

TEST_CASE("induced character cache") {
    const auto dir = scratch("induced");
    const Context& c = ctx(3);
    InducedCache cache(dir, c);
    const auto spec = SubgroupSpec::zn1(1, 2);
    CHECK_FALSE(cache.load(spec).has_value());
    const ClassFunction f = c.induction().induce(spec);
    cache.save(spec, f);
    const auto back = cache.load(spec);
    REQUIRE(back.has_value());
    CHECK(back->equals(f));
    CHECK_FALSE(cache.load(SubgroupSpec::zn1(0, 2)).has_value());
    Json j = Json::parse(std::ifstream(cache.path(spec)));
    j["fingerprint"] = "stale";
    std::ofstream(cache.path(spec)) << j.dump();
    CHECK_FALSE(cache.load(spec).has_value());
    CHECK(cache.rejected() == 1);
    std::filesystem::remove_all(dir);
}

TEST_CASE("cached sweeps give identical inductions") {
    const auto dir = scratch("ctx");
    auto make = [&] {
        ContextOptions o;
        o.store_factory = [&](const FieldTower& t) { return std::make_shared<JsonHistogramStore>(dir, t.q(), t.fingerprint()); };
        return Context::create(3, o);
    };
    const auto spec = SubgroupSpec::torus_m(1, 0);
    const ClassFunction first = make()->induction().induce(spec);
    CHECK(std::filesystem::exists(dir / "sweep-q3-Tm.json"));
    const ClassFunction second = make()->induction().induce(spec);
    CHECK(first.values().size() == second.values().size());
    for (std::size_t i = 0; i < first.size(); ++i) CHECK(first[i] == second[i]);
    std::filesystem::remove_all(dir);
}
