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


// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "gl3/conjecture.hpp"
#include "gl3/context.hpp"
#include "gl3/serialize.hpp"
#include "gl3/tensorlab.hpp"

using namespace gl3;

namespace {

constexpr double kFloatTolerance = 1e-9;
constexpr double kStructuralSeconds = 60;
constexpr double kLemma1Seconds = 300;

const Context& ctx(int q) {
    static std::map<int, std::shared_ptr<Context>> cache;
    auto& slot = cache[q];
    if (!slot) {
        ContextOptions o;
        o.tower.max_q = 16;
        slot = Context::create(q, o);
    }
    return *slot;
}

struct Outcome {
    bool pass = true;
    std::vector<std::string> details;
    void fail(const std::string& why) {
        pass = false;
        details.push_back(why);
    }
    void note(const std::string& s) { details.push_back(s); }
};

std::string summary(const VerifyReport& r) {
    std::ostringstream os;
    os << r.name << "@q=" << r.q << " checked=" << r.tuples_checked << " failures=" << r.failures.size();
    return os.str();
}

void require(Outcome& o, const VerifyReport& r, bool need_admissible = true) {
    if (!r.ok()) {
        std::string first = r.failures.front().detail;
        if (first.size() > 160) first = first.substr(0, 160) + "...";
        o.fail(summary(r) + " first: " + first);
    } else if (need_admissible && !r.admissible()) {
        o.fail(summary(r) + " has no admissible tuple");
    }
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome structural() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const std::map<int, std::int64_t> orders{{2, 168}, {3, 11232}, {4, 181440}, {5, 1488000}};
    for (auto [q, order] : orders) {
        const auto& cc = ctx(q).classes();
        if (static_cast<int>(cc.size()) != q * q * q - q) o.fail("q=" + std::to_string(q) + " class count " + std::to_string(cc.size()));
        std::int64_t total = 0;
        for (const auto& c : cc.classes()) total += c.size;
        if (total != order || cc.group_order() != order) o.fail("q=" + std::to_string(q) + " sizes sum to " + std::to_string(total));
    }
    for (int q : {2, 3}) {
        const auto& cc = ctx(q).classes();
        const auto& ops = cc.ops();
        std::vector<std::int64_t> counts(cc.size(), 0);
        std::uint64_t total = 1;
        for (int i = 0; i < 9; ++i) total *= static_cast<std::uint64_t>(q);
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            const Mat3 m = ops.from_index(idx);
            if (ops.det(m) != 0) ++counts[cc.classify_index(m)];
        }
        for (std::size_t i = 0; i < cc.size(); ++i)
            if (counts[i] != cc[i].size) o.fail("q=" + std::to_string(q) + " enumeration disagrees at " + to_string(cc[i].label));
    }
    const double s = seconds_since(t0);
    if (s > kStructuralSeconds) o.fail("runtime " + std::to_string(s) + "s");
    o.note("q=2..5 counts 6,24,60,120; enumeration at q=2,3");
    return o;
}

Outcome table_validity() {
    Outcome o;
    for (int q : {2, 3, 4, 5}) {
        const TableReport r = ctx(q).table().validate();
        if (!r.ok()) o.fail("table invalid at q=" + std::to_string(q));
    }
    std::vector<std::int64_t> d = ctx(2).table().validate().degrees;
    std::sort(d.begin(), d.end());
    if (d != std::vector<std::int64_t>{1, 3, 3, 6, 7, 8}) o.fail("q=2 degree multiset");
    o.note("q=2..5 valid, q=2 degrees 1,3,3,6,7,8");
    return o;
}

Outcome lemma1() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    for (int q : {2, 3}) require(o, verify_lemma1(ctx(q)));
    const double s = seconds_since(t0);
    if (s > kLemma1Seconds) o.fail("runtime " + std::to_string(s) + "s");
    return o;
}

Outcome lemma2() {
    Outcome o;
    for (int q : {3, 4}) {
        const VerifyReport r = verify_lemma2(ctx(q));
        require(o, r);
        o.note(summary(r));
    }
    return o;
}

Outcome theorem1() {
    Outcome o;
    for (const std::string& c : theorem1_cases()) {
        int smallest = 0;
        for (int q : {2, 3, 4}) {
            const VerifyReport r = verify_theorem1(ctx(q), c);
            require(o, r, false);
            if (r.admissible() && !smallest) smallest = q;
        }
        for (int q : {5, 7, 8, 9, 11}) {
            if (smallest) break;
            const VerifyReport r = verify_theorem1(ctx(q), c);
            require(o, r, false);
            if (r.admissible()) smallest = q;
        }
        if (!smallest) o.fail("case " + c + " never admissible");
        else o.note(c + ":q" + std::to_string(smallest));
    }
    return o;
}

Outcome prop1() {
    Outcome o;
    const VerifyReport r = verify_prop1(ctx(4));
    require(o, r);
    if (r.tuples_checked != 20) o.fail("expected 20 cuspidal tuples, got " + std::to_string(r.tuples_checked));
    o.note(summary(r) + " twists=1..3");
    return o;
}

Outcome section4() {
    Outcome o;
    for (int q : {3, 4}) {
        const VerifyReport r = verify_section4(ctx(q));
        if (r.tuples_checked != static_cast<std::uint64_t>(q == 3 ? 64 : 400)) o.fail("pair count at q=" + std::to_string(q));
        if (!r.ok()) {
            o.fail(summary(r));
            for (const auto& n : r.notes) o.note(n);
        }
    }
    return o;
}

Outcome reciprocity() {
    Outcome o;
    for (int q : {2, 3}) {
        const VerifyReport r = verify_reciprocity(ctx(q), reciprocity_specs(ctx(q)));
        require(o, r);
        o.note(summary(r));
    }
    return o;
}

Outcome conjecture() {
    Outcome o;
    if (coefficients(3) != std::vector<std::int64_t>{1, 1}) o.fail("coefficients(3)");
    if (coefficients(4) != std::vector<std::int64_t>{1, 2, 2, 1}) o.fail("coefficients(4)");
    const InterpolatingFamily prop1_family = family_from_json(Json::parse("[[[]],[[[1,2]]]]"), 3);
    for (int q : {4, 5}) {
        const FamilyCheck f = check_family_n3(ctx(q), prop1_family);
        const bool p = verify_prop1(ctx(q)).ok();
        if (!f.passed()) o.fail("family check fails at q=" + std::to_string(q));
        if (f.passed() != p) o.fail("family check disagrees with prop1 at q=" + std::to_string(q));
    }
    auto search = [] {
        Json arr = Json::array();
        for (const auto& f : search_families_n3(ctx(4))) arr.push_back({{"family", to_json(f.family)}, {"passed", f.passed()}});
        return arr.dump();
    };
    const std::string a = search(), b = search();
    if (a != b) o.fail("search output differs between runs");
    o.note("search " + a);
    return o;
}

Outcome float_backend() {
    Outcome o;
    const VerifyReport r = verify_table(ctx(3), kFloatTolerance);
    require(o, r);
    for (const auto& n : r.notes)
        if (n.find("deviation") != std::string::npos) o.note(n);
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"structural", structural}, {"table validity", table_validity}, {"lemma 1 oracle", lemma1},
        {"lemma 2", lemma2},        {"theorem 1", theorem1},            {"proposition 1", prop1},
        {"cuspidal tensor products", section4}, {"frobenius reciprocity", reciprocity},
        {"conjecture scaffolding", conjecture}, {"float backend", float_backend},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        if (!o.pass) ++failed;
        std::printf("%s %2zu %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), seconds_since(t0));
        for (const auto& d : o.details) std::printf("       %s\n", d.c_str());
        std::fflush(stdout);
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
    return failed ? 1 : 0;
}
