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


#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "gl3/conjecture.hpp"
#include "gl3/context.hpp"
#include "gl3/serialize.hpp"
#include "gl3/tensorlab.hpp"

namespace py = pybind11;
using namespace gl3;

namespace {

std::shared_ptr<Context> context(int q) {
    static std::mutex mutex;
    static std::map<int, std::shared_ptr<Context>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[q];
    if (!slot) {
        ContextOptions o;
        o.tower.max_q = 16;
        slot = Context::create(q, o);
    }
    return slot;
}

std::string dump(const Json& j) { return j.dump(); }

std::string classes(int q) {
    const auto c = context(q);
    Json arr = Json::array();
    for (const auto& d : c->classes().classes()) {
        arr.push_back({{"label", to_json(d.label)}, {"size", d.size}, {"centralizer", d.centralizer}});
    }
    return dump(arr);
}

std::string table(int q) {
    const auto c = context(q);
    Json arr = Json::array();
    for (const auto& l : c->table().all_irreducibles()) {
        arr.push_back({{"label", to_json(l)}, {"degree", c->table().degree(l)}, {"values", to_json(c->table().character(l))}});
    }
    return dump(arr);
}

std::string induce(int q, const std::string& spec) {
    const auto c = context(q);
    const SubgroupSpec s = parse_subgroup(spec);
    c->induction().validate(s);
    const ClassFunction f = c->induction().induce(s);
    return dump({{"spec", to_json(s)}, {"values", to_json(f)}, {"decomposition", to_json(decompose(c->table(), f))}});
}

std::string tensor(int q, const std::string& left, const std::string& right) {
    const auto c = context(q);
    const auto& t = c->table();
    const ClassFunction f = t.character(parse_label(left)) * t.character(parse_label(right));
    return dump(to_json(decompose(t, f)));
}

SweepOptions sweep(std::uint64_t seed, int jobs) {
    SweepOptions o;
    o.seed = seed;
    o.jobs = jobs;
    return o;
}

std::string verify(int q, const std::string& what, const std::string& which, std::uint64_t seed, int jobs) {
    const auto c = context(q);
    const SweepOptions o = sweep(seed, jobs);
    VerifyReport r;
    if (what == "theorem1") r = verify_theorem1(*c, which, o);
    else if (what == "corollary1") r = verify_corollary1(*c, which.empty() ? 1 : std::stoi(which), o);
    else if (what == "prop1") r = verify_prop1(*c, o);
    else if (what == "section4") r = verify_section4(*c, o);
    else if (what == "lemma1") r = verify_lemma1(*c, o);
    else if (what == "lemma2") r = verify_lemma2(*c, o);
    else if (what == "table") r = verify_table(*c);
    else if (what == "reciprocity") r = verify_reciprocity(*c, reciprocity_specs(*c), o);
    else throw std::invalid_argument("unknown check '" + what + "'");
    return dump(to_json(r));
}

std::string check_family(int q, const std::string& family_json) {
    const auto c = context(q);
    const InterpolatingFamily f = family_from_json(Json::parse(family_json), 3);
    validate_family(f);
    const FamilyCheck chk = check_family_n3(*c, f);
    return dump({{"family", to_json(f)}, {"degree_ok", chk.degree_ok}, {"passed", chk.passed()}, {"report", to_json(chk.report)}});
}

}  // namespace

PYBIND11_MODULE(_gl3rep, m) {
    m.doc() = "Exact character theory of GL(3, F_q)";
    py::register_exception<ArithmeticError>(m, "ArithmeticError", PyExc_ArithmeticError);
    py::register_exception<FieldError>(m, "FieldError", PyExc_ValueError);
    m.attr("__version__") = version();
    m.def("fingerprint", [](int q) { return context(q)->tower().fingerprint(); }, py::arg("q"));
    m.def("classes", &classes, py::arg("q"));
    m.def("table", &table, py::arg("q"));
    m.def("induce", &induce, py::arg("q"), py::arg("spec"));
    m.def("tensor", &tensor, py::arg("q"), py::arg("left"), py::arg("right"));
    m.def("verify", &verify, py::arg("q"), py::arg("what"), py::arg("which") = "", py::arg("seed") = 20240601,
          py::arg("jobs") = 1);
    m.def("coefficients", &coefficients, py::arg("n"));
    m.def("check_family", &check_family, py::arg("q"), py::arg("family"));
}
