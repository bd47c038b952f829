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


#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gl3/conjecture.hpp"
#include "gl3/context.hpp"
#include "gl3/serialize.hpp"
#include "gl3/tensorlab.hpp"

namespace {

using gl3::Json;

struct RunConfig {
    int q = 3;
    std::string cache_dir;
    int jobs = 1;
    std::uint64_t seed = 20240601;
    std::string format = "json";
    int brute_max_q = 5;
    bool quiet = false;
};

// Exit codes: 0 all checks pass, 1 a check failed, 2 bad input or internal error.
constexpr int kExitFail = 1;
constexpr int kExitError = 2;

std::shared_ptr<gl3::Context> make_context(const RunConfig& cfg, int q) {
    gl3::ContextOptions opts;
    opts.tower.max_q = 16;
    opts.induction.jobs = cfg.jobs;
    opts.induction.brute_force_max_q = cfg.brute_max_q;
    if (!cfg.quiet)
        opts.induction.progress = [](gl3::SubgroupKind k, std::uint64_t done, std::uint64_t total) {
            if (done == total) std::cerr << "sweep " << gl3::to_string(k) << " done (" << total << " matrices)\n";
        };
    if (!cfg.cache_dir.empty()) {
        const std::string dir = cfg.cache_dir;
        opts.store_factory = [dir, q](const gl3::FieldTower& t) {
            return std::make_shared<gl3::JsonHistogramStore>(dir, q, t.fingerprint());
        };
    }
    return gl3::Context::create(q, opts);
}

Json header(const gl3::Context& ctx) {
    return Json{{"tool_version", gl3::version()}, {"q", ctx.q()}, {"fingerprint", ctx.tower().fingerprint()}};
}

std::string csv_value(const Json& v) {
    if (v.is_number()) return v.dump();
    const std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

void emit(const RunConfig& cfg, const Json& j) {
    if (cfg.format == "pretty") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    if (cfg.format == "csv" && j.contains("rows")) {
        const Json& rows = j["rows"];
        if (!rows.empty()) {
            bool first = true;
            for (auto it = rows[0].begin(); it != rows[0].end(); ++it) {
                std::cout << (first ? "" : ",") << it.key();
                first = false;
            }
            std::cout << "\n";
        }
        for (const auto& r : rows) {
            bool first = true;
            for (auto it = r.begin(); it != r.end(); ++it) {
                std::cout << (first ? "" : ",") << csv_value(*it);
                first = false;
            }
            std::cout << "\n";
        }
        return;
    }
    std::cout << j.dump() << "\n";
}

gl3::SweepOptions sweep_options(const RunConfig& cfg, const std::string& sweep, bool experimental, const std::string& interp,
                                const std::string& tuples) {
    gl3::SweepOptions o;
    o.seed = cfg.seed;
    o.jobs = cfg.jobs;
    o.experimental_degenerate = experimental;
    if (sweep == "exhaustive") {
        o.mode = gl3::SweepMode::Exhaustive;
    } else if (sweep.rfind("random", 0) == 0) {
        o.mode = gl3::SweepMode::Random;
        if (sweep.size() > 7) o.samples = std::stoull(sweep.substr(7));
    } else if (sweep != "auto") {
        throw std::invalid_argument("--sweep must be auto, exhaustive or random:N");
    }
    const auto i = gl3::interpretation_from_string(interp);
    if (!i) throw std::invalid_argument("--interpretation must be restrict, extend or norm");
    o.interpretation = *i;
    if (!tuples.empty()) o.explicit_tuples = Json::parse(tuples).get<std::vector<gl3::Tuple>>();
    if (!cfg.quiet)
        o.progress = [](const std::string& name, std::uint64_t done, std::uint64_t total) {
            if (done == total || done % 100 == 0) std::cerr << name << ": " << done << "/" << total << "\n";
        };
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"Exact representation theory of GL(3, F_q)"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", std::string("gl3rep ") + gl3::version());
    app.add_option("--q", cfg.q, "Field size (prime power)")->check(CLI::Range(2, 16));
    app.add_option("--cache-dir", cfg.cache_dir, "Directory for sweep histograms");
    app.add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::Range(1, 256));
    app.add_option("--seed", cfg.seed, "Seed for random sweeps");
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "pretty"}));
    app.add_option("--brute-max-q", cfg.brute_max_q, "Largest q for brute-force induction");
    app.add_flag("--quiet", cfg.quiet, "No progress on standard error");

    auto* classes = app.add_subcommand("classes", "Conjugacy classes");
    auto* table = app.add_subcommand("table", "Character table");
    bool table_values = true;
    table->add_flag("!--degrees-only", table_values, "Omit the value rows");

    auto* induce = app.add_subcommand("induce", "Induced character");
    std::string induce_spec, induce_method = "auto";
    bool induce_decompose = false;
    induce->add_option("--spec", induce_spec, "Ti:a:b:c, Tm:l:a, Ta:f, ZN:a:c, ZN1:a:c, ZNpattern:a:c:12,23 or a JSON object")->required();
    induce->add_option("--method", induce_method)->check(CLI::IsMember({"auto", "fast", "brute"}));
    induce->add_flag("--decompose", induce_decompose);

    auto* tensor = app.add_subcommand("tensor", "Tensor product of two irreducibles");
    std::string left, right;
    tensor->add_option("--left", left, "family:exponent[:exponent...]")->required();
    tensor->add_option("--right", right)->required();

    auto* decomp = app.add_subcommand("decompose", "Decompose a tensor product or an induced character");
    std::string d_left, d_right, d_spec;
    decomp->add_option("--left", d_left);
    decomp->add_option("--right", d_right);
    decomp->add_option("--spec", d_spec, "Induced character instead of a product");

    auto* verify = app.add_subcommand("verify", "Verification suites");
    verify->require_subcommand(1);
    std::string sweep = "auto", interp = "restrict", tuples, case_id;
    bool experimental = false;
    int item = 0;
    auto add_sweep = [&](CLI::App* sc) {
        sc->add_option("--sweep", sweep, "auto, exhaustive or random:N");
        sc->add_option("--tuples", tuples, "Explicit parameter tuples as a JSON array");
    };
    auto* v_thm = verify->add_subcommand("theorem1", "Tensor product identities");
    v_thm->add_option("--case", case_id, "Case id or 'all'")->required();
    v_thm->add_flag("--experimental-degenerate", experimental);
    v_thm->add_option("--interpretation", interp, "Case 1ii reading: restrict, extend or norm");
    add_sweep(v_thm);
    auto* v_cor = verify->add_subcommand("corollary1", "Corollary identities");
    v_cor->add_option("--item", item, "1 or 2 (default both)");
    v_cor->add_flag("--experimental-degenerate", experimental);
    add_sweep(v_cor);
    auto* v_prop = verify->add_subcommand("prop1", "Cuspidal times principal series");
    auto* v_s4 = verify->add_subcommand("section4", "Cuspidal tensor multiplicities");
    auto* v_l1 = verify->add_subcommand("lemma1", "Closed-form torus induction against brute force");
    auto* v_l2 = verify->add_subcommand("lemma2", "Degenerate parameters");
    auto* v_tab = verify->add_subcommand("table", "Character table validity");
    double tolerance = 1e-9;
    v_tab->add_option("--tolerance", tolerance);
    auto* v_rec = verify->add_subcommand("reciprocity", "Frobenius reciprocity for every subgroup kind");

    auto* conj = app.add_subcommand("conjecture", "Interpolating families");
    conj->require_subcommand(1);
    int n = 3, pi = 0;
    std::string family_json;
    auto* c_coeffs = conj->add_subcommand("coeffs", "Coefficients c_j(n)");
    c_coeffs->add_option("--n", n)->required();
    auto* c_pat = conj->add_subcommand("patterns", "Subgroup patterns with i zeroed positions");
    c_pat->add_option("--n", n)->required();
    c_pat->add_option("--i", pi)->required();
    auto* c_check = conj->add_subcommand("check", "Check one family");
    c_check->add_option("--n", n, "Only n = 3 has a computable left side");
    c_check->add_option("--family", family_json, "JSON packets, e.g. [[[]],[[[1,2]]]]");
    auto* c_search = conj->add_subcommand("search", "Check every family for n = 3");
    auto* c_ind = conj->add_subcommand("induce", "Right side for GL(n, 2) by enumeration");
    c_ind->add_option("--n", n)->required();
    c_ind->add_option("--family", family_json, "JSON packets; defaults to the first valid family");

    CLI11_PARSE(app, argc, argv);

    try {
        if (classes->parsed()) {
            auto ctx = make_context(cfg, cfg.q);
            Json out = header(*ctx);
            out["count"] = ctx->classes().size();
            out["group_order"] = ctx->classes().group_order();
            Json rows = Json::array();
            for (const auto& c : ctx->classes().classes()) {
                Json r = gl3::to_json(c.label);
                r["size"] = c.size;
                Json rep = Json::array();
                for (auto e : c.representative) rep.push_back(static_cast<int>(e));
                r["representative"] = rep;
                rows.push_back(r);
            }
            out["rows"] = rows;
            emit(cfg, out);
            return 0;
        }
        if (table->parsed()) {
            auto ctx = make_context(cfg, cfg.q);
            Json out = header(*ctx);
            Json cls = Json::array();
            for (const auto& c : ctx->classes().classes()) cls.push_back(gl3::to_string(c.label));
            out["classes"] = cls;
            Json rows = Json::array();
            for (const auto& l : ctx->table().all_irreducibles()) {
                Json r{{"label", gl3::to_string(l)}, {"degree", ctx->table().degree(l)}};
                if (table_values) r["values"] = gl3::to_json(ctx->table().character(l));
                rows.push_back(r);
            }
            out["rows"] = rows;
            emit(cfg, out);
            return 0;
        }
        if (induce->parsed()) {
            auto ctx = make_context(cfg, cfg.q);
            const auto spec = gl3::parse_subgroup(induce_spec);
            const auto& eng = ctx->induction();
            eng.validate(spec);
            std::optional<gl3::InducedCache> cache;
            if (!cfg.cache_dir.empty()) cache.emplace(cfg.cache_dir, *ctx);
            std::optional<gl3::ClassFunction> hit;
            if (cache) hit = cache->load(spec);
            gl3::ClassFunction f = hit                        ? *hit
                                   : induce_method == "fast"  ? eng.induce_torus_fast(spec)
                                   : induce_method == "brute" ? eng.induce_bruteforce(spec)
                                                              : eng.induce(spec);
            if (cache && !hit) cache->save(spec, f);
            Json out = header(*ctx);
            out["spec"] = gl3::to_string(spec);
            out["degree"] = gl3::to_json(f.degree());
            out["rows"] = gl3::to_json(f, true);
            if (induce_decompose) out["decomposition"] = gl3::to_json(gl3::decompose(ctx->table(), f));
            emit(cfg, out);
            return 0;
        }
        if (tensor->parsed() || decomp->parsed()) {
            auto ctx = make_context(cfg, cfg.q);
            const auto& tab = ctx->table();
            Json out = header(*ctx);
            gl3::ClassFunction f;
            const std::string l = tensor->parsed() ? left : d_left, r = tensor->parsed() ? right : d_right;
            if (!d_spec.empty() && decomp->parsed()) {
                f = ctx->induction().induce(gl3::parse_subgroup(d_spec));
                out["spec"] = d_spec;
            } else {
                if (l.empty()) throw std::invalid_argument("--left is required unless --spec is given");
                auto character = [&](const std::string& s) {
                    const auto lab = gl3::parse_label(s);
                    return tab.is_generic(lab) ? tab.character(lab) : tab.evaluate(tab.resolve_degenerate(lab));
                };
                f = character(l);
                out["left"] = l;
                if (!r.empty()) {
                    f = gl3::product(f, character(r));
                    out["right"] = r;
                }
            }
            if (tensor->parsed()) out["rows"] = gl3::to_json(f, true);
            out["decomposition"] = gl3::to_json(gl3::decompose(tab, f));
            emit(cfg, out);
            return 0;
        }
        if (verify->parsed()) {
            auto ctx = make_context(cfg, cfg.q);
            const auto opts = sweep_options(cfg, sweep, experimental, interp, tuples);
            std::vector<gl3::VerifyReport> reports;
            if (v_thm->parsed()) {
                if (case_id == "all")
                    for (const auto& c : gl3::theorem1_cases()) reports.push_back(gl3::verify_theorem1(*ctx, c, opts));
                else
                    reports.push_back(gl3::verify_theorem1(*ctx, case_id, opts));
            } else if (v_cor->parsed()) {
                if (item == 0 || item == 1) reports.push_back(gl3::verify_corollary1(*ctx, 1, opts));
                if (item == 0 || item == 2) reports.push_back(gl3::verify_corollary1(*ctx, 2, opts));
            } else if (v_prop->parsed()) {
                reports.push_back(gl3::verify_prop1(*ctx, opts));
            } else if (v_s4->parsed()) {
                reports.push_back(gl3::verify_section4(*ctx, opts));
            } else if (v_l1->parsed()) {
                reports.push_back(gl3::verify_lemma1(*ctx, opts));
            } else if (v_l2->parsed()) {
                reports.push_back(gl3::verify_lemma2(*ctx, opts));
            } else if (v_tab->parsed()) {
                reports.push_back(gl3::verify_table(*ctx, tolerance));
            } else if (v_rec->parsed()) {
                reports.push_back(gl3::verify_reciprocity(*ctx, gl3::reciprocity_specs(*ctx), opts));
            }
            Json out = header(*ctx);
            Json arr = Json::array();
            bool ok = true;
            for (const auto& r : reports) {
                arr.push_back(gl3::to_json(r));
                ok = ok && r.ok();
            }
            out["reports"] = arr;
            out["ok"] = ok;
            emit(cfg, out);
            return ok ? 0 : kExitFail;
        }
        if (conj->parsed()) {
            Json out{{"tool_version", gl3::version()}};
            if (c_coeffs->parsed()) {
                out["n"] = n;
                out["coefficients"] = gl3::coefficients(n);
                emit(cfg, out);
                return 0;
            }
            if (c_pat->parsed()) {
                out["n"] = n;
                out["i"] = pi;
                Json pats = Json::array();
                for (const auto& p : gl3::enumerate_patterns(n, pi)) pats.push_back(gl3::to_json(p));
                out["patterns"] = pats;
                emit(cfg, out);
                return 0;
            }
            if (c_ind->parsed()) {
                gl3::InterpolatingFamily fam = family_json.empty() ? gl3::enumerate_families(n, 1).at(0)
                                                                   : gl3::family_from_json(Json::parse(family_json), n);
                gl3::validate_family(fam);
                gl3::GLn2 g(n);
                out["n"] = n;
                out["q"] = 2;
                out["family"] = gl3::to_json(fam);
                out["left_side"] = "unavailable: no character table of GL(n, q) for n >= 4";
                const auto vals = g.induce(fam);
                Json rows = Json::array();
                for (std::size_t c = 0; c < g.classes().size(); ++c)
                    rows.push_back({{"representative", g.rows(g.classes()[c].representative)}, {"size", g.classes()[c].size}, {"value", vals[c]}});
                out["rows"] = rows;
                emit(cfg, out);
                return 0;
            }
            if (c_check->parsed() && n != 3) {
                out["n"] = n;
                out["status"] = "unavailable: the left side needs the character table of GL(n, q), implemented for n = 3 only";
                emit(cfg, out);
                return kExitError;
            }
            auto ctx = make_context(cfg, cfg.q);
            out = header(*ctx);
            gl3::SweepOptions opts;
            opts.jobs = cfg.jobs;
            opts.seed = cfg.seed;
            std::vector<gl3::FamilyCheck> checks;
            if (c_check->parsed()) {
                const auto fam = family_json.empty() ? gl3::enumerate_families(3, 1).at(0)
                                                     : gl3::family_from_json(Json::parse(family_json), 3);
                checks.push_back(gl3::check_family_n3(*ctx, fam, opts));
            } else {
                checks = gl3::search_families_n3(*ctx, opts);
            }
            Json arr = Json::array();
            bool ok = true;
            Json passing = Json::array();
            for (const auto& c : checks) {
                arr.push_back({{"family", gl3::to_json(c.family)}, {"degree_ok", c.degree_ok}, {"passed", c.passed()}, {"report", gl3::to_json(c.report)}});
                if (c.passed()) passing.push_back(gl3::to_json(c.family));
                ok = ok && c.passed();
            }
            out["checks"] = arr;
            if (c_search->parsed()) {
                out["passing"] = passing;
                ok = !passing.empty();
            }
            out["ok"] = ok;
            emit(cfg, out);
            return ok ? 0 : kExitFail;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return 0;
}
