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


#include "gl3/tensorlab.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "gl3/chars.hpp"

namespace gl3 {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

// Exponent arithmetic for the characters appearing in the identities.
struct Chars {
    const FieldTower& t;
    std::int64_t q, q1, o2, o3;
    explicit Chars(const Context& ctx)
        : t(ctx.tower()), q(ctx.q()), q1(ctx.q() - 1), o2(t.group_order(2)), o3(t.group_order(3)) {}
    std::int64_t ext(int d, std::int64_t a) const { return char_extend(MultChar(t, 1, mod(a, q1)), d).exponent(); }
    std::int64_t infl(int d, std::int64_t a) const { return char_inflate_norm(MultChar(t, 1, mod(a, q1)), d).exponent(); }
    std::int64_t res(int d, std::int64_t k) const { return char_restrict(MultChar(t, d, mod(k, t.group_order(d)))).exponent(); }
    std::int64_t n1(std::int64_t a) const { return mod(a, q1); }
    std::int64_t n2(std::int64_t a) const { return mod(a, o2); }
    std::int64_t n3(std::int64_t a) const { return mod(a, o3); }
};

Factor L(Family f, std::int64_t a = 0, std::int64_t b = 0, std::int64_t c = 0) { return Factor::label(IrrLabel{f, {a, b, c}}); }
Factor I(SubgroupSpec s) { return Factor::induced(std::move(s)); }
Term T(std::int64_t c, std::vector<Factor> f) { return Term{c, std::move(f)}; }

// Shared evaluation state for one verification run.
class Evaluator {
   public:
    Evaluator(const Context& ctx, bool fast) : ctx_(ctx), fast_(fast) {}

    ClassFunction factor(const Factor& f, bool resolve) {
        const CharacterTable& tab = ctx_.table();
        if (f.irr) {
            if (tab.is_generic(*f.irr)) return tab.character(*f.irr);
            if (!resolve) throw std::invalid_argument("degenerate label " + to_string(*f.irr));
            return tab.evaluate(tab.resolve_degenerate(*f.irr));
        }
        const std::string key = to_string(*f.ind);
        {
            std::lock_guard lock(mutex_);
            auto it = induced_.find(key);
            if (it != induced_.end()) return it->second;
        }
        ClassFunction v = ctx_.induction().induce(*f.ind, fast_);
        std::lock_guard lock(mutex_);
        return induced_.emplace(key, std::move(v)).first->second;
    }

    ClassFunction side(const std::vector<Term>& terms, bool resolve) {
        ClassFunction sum(ctx_.classes(), ctx_.field());
        for (const Term& term : terms) {
            if (term.factors.empty()) throw std::invalid_argument("empty term");
            ClassFunction p = factor(term.factors[0], resolve);
            for (std::size_t i = 1; i < term.factors.size(); ++i) p *= factor(term.factors[i], resolve);
            if (term.coeff != 1) p *= term.coeff;
            sum += p;
        }
        return sum;
    }

   private:
    const Context& ctx_;
    bool fast_;
    std::mutex mutex_;
    std::map<std::string, ClassFunction> induced_;
};

bool fast_default(const Context& ctx, const SweepOptions& o) {
    if (o.fast_induction) return *o.fast_induction;
    return ctx.q() > 4;
}

std::vector<std::string> class_names(const Context& ctx, const std::vector<std::size_t>& idx, std::size_t limit = 8) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < idx.size() && i < limit; ++i) out.push_back(to_string(ctx.classes()[idx[i]].label));
    if (idx.size() > limit) out.push_back("+" + std::to_string(idx.size() - limit) + " more");
    return out;
}

std::string factor_string(const Factor& f) {
    return f.irr ? to_string(*f.irr) : "Ind(" + to_string(*f.ind) + ")";
}

std::string side_string(const std::vector<Term>& side) {
    std::string s;
    for (const Term& t : side) {
        if (!s.empty()) s += t.coeff < 0 ? " - " : " + ";
        else if (t.coeff < 0) s += "-";
        const std::int64_t c = std::llabs(t.coeff);
        if (c != 1) s += std::to_string(c) + "*";
        for (std::size_t i = 0; i < t.factors.size(); ++i) s += (i ? " x " : "") + factor_string(t.factors[i]);
    }
    return s.empty() ? "0" : s;
}

// Runs fn(i) for i in [0, n) on up to `jobs` threads.
template <class Fn>
void parallel_for(std::size_t n, int jobs, Fn&& fn) {
    const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(n)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::mutex err_mutex;
    std::exception_ptr err;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(err_mutex);
                    if (!err) err = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace

ClassFunction product(const ClassFunction& f, const ClassFunction& g) {
    if (&f.classes() != &g.classes() && f.classes().q() != g.classes().q())
        throw std::invalid_argument("class functions belong to different q");
    return f * g;
}

bool Decomposition::genuine() const {
    return std::all_of(terms.begin(), terms.end(), [](const auto& t) { return t.second >= 0; });
}

std::int64_t Decomposition::multiplicity(const IrrLabel& label) const {
    for (const auto& [l, m] : terms)
        if (l == label) return m;
    return 0;
}

Decomposition decompose(const CharacterTable& table, const ClassFunction& f) {
    Decomposition d;
    ClassFunction rebuilt(table.classes(), table.field());
    for (const IrrLabel& l : table.all_irreducibles()) {
        const ClassFunction& chi = table.character(l);
        const auto m = inner(f, chi).rational_integer();
        if (!m) throw ArithmeticError("multiplicity of " + to_string(l) + " is not an integer");
        if (*m == 0) continue;
        d.terms.emplace_back(l, *m);
        d.degree += *m * table.degree(l);
        rebuilt += chi * *m;
    }
    if (!rebuilt.equals(f)) throw ArithmeticError("decomposition does not reconstruct the class function");
    return d;
}

std::string to_string(const Identity& id) { return side_string(id.lhs) + " = " + side_string(id.rhs); }

const char* to_string(Interpretation i) noexcept {
    switch (i) {
        case Interpretation::Restrict: return "restrict";
        case Interpretation::Extend: return "extend";
        case Interpretation::Norm: return "norm";
    }
    return "?";
}

std::optional<Interpretation> interpretation_from_string(const std::string& s) {
    for (auto i : {Interpretation::Restrict, Interpretation::Extend, Interpretation::Norm})
        if (s == to_string(i)) return i;
    return std::nullopt;
}

const std::vector<std::string>& theorem1_cases() {
    static const std::vector<std::string> ids{"1i", "1ii", "2", "3i", "3ii", "4", "5", "6", "7i", "7ii", "7iii", "8i", "8ii", "9", "10"};
    return ids;
}

SlotDegrees theorem1_slots(const std::string& c, Interpretation interp) {
    if (c == "1i") return {1, 2, 1, 1, 1};
    if (c == "1ii") return interp == Interpretation::Restrict ? SlotDegrees{1, 2, 1, 1, 1} : SlotDegrees{1, 1, 1, 1, 1};
    if (c == "2") return {1, 2, 1, 2};
    if (c == "3i" || c == "3ii") return {1, 2, 3};
    if (c == "4") return {1, 1, 1, 1};
    if (c == "5") return {1, 3};
    if (c == "6") return {1, 1, 2};
    if (c == "7i" || c == "7ii" || c == "7iii") return {1, 1};
    if (c == "8i" || c == "8ii") return {3, 1, 1, 1};
    if (c == "9") return {3, 3};
    if (c == "10") return {1, 1, 1, 1, 1, 1};
    throw std::invalid_argument("unknown case " + c);
}

Identity theorem1_identity(const Context& ctx, const std::string& c, const Tuple& t, Interpretation interp, bool alt_extension) {
    const Chars ch(ctx);
    if (t.size() != theorem1_slots(c, interp).size()) throw std::invalid_argument("wrong tuple length for case " + c);
    using F = Family;
    Identity id;
    id.tag = c;
    const Factor one_q2q = L(F::Pq2q, 0), one_1 = L(F::P1, 0);
    if (c == "1i") {
        const auto al = t[0], la = t[1], be = t[2], ga = t[3], de = t[4];
        id.lhs = {T(1, {L(F::Int, al, la), L(F::Pabc, be, ga, de)})};
        id.rhs = {T(1, {I(SubgroupSpec::torus_m(ch.n2(ch.ext(2, ga + de) + la), ch.n1(al + be)))}),
                  T(1, {L(F::Int, ch.n1(al + be), ch.n2(ch.ext(2, ga + de) + la))}),
                  T(1, {L(F::Int, ch.n1(al + ga), ch.n2(ch.ext(2, be + de) + la)), one_q2q}),
                  T(1, {L(F::Int, ch.n1(al + de), ch.n2(ch.ext(2, be + ga) + la)), one_q2q})};
    } else if (c == "1ii") {
        const auto al = t[0], be = t[2], ga = t[3], de = t[4];
        std::int64_t first = 0, second = 0;
        switch (interp) {
            case Interpretation::Restrict:
                first = al + ch.res(2, t[1]);
                second = ch.infl(2, al) + 2 * t[1];
                break;
            case Interpretation::Extend:
                first = al + t[1];
                second = ch.infl(2, al) + 2 * ch.ext(2, t[1]);
                break;
            case Interpretation::Norm:
                first = al + t[1];
                second = ch.infl(2, al + 2 * t[1]);
                break;
        }
        const auto x = ch.n1(first);
        id.lhs = {T(1, {L(F::Int, x, ch.n2(second)), L(F::Pabc, be, ga, de)})};
        id.rhs = {T(1, {I(SubgroupSpec::torus_i(ch.n1(x + be), ch.n1(x + ga), ch.n1(x + de)))}),
                  T(-1, {L(F::Pabc, ch.n1(x + be), ch.n1(x + ga), ch.n1(x + de))})};
    } else if (c == "2") {
        const auto al = t[0], la = t[1], be = t[2], mu = t[3];
        id.lhs = {T(1, {L(F::Int, al, la), L(F::Int, be, mu)})};
        id.rhs = {T(1, {I(SubgroupSpec::torus_m(ch.n2(la + mu), ch.n1(al + be)))}),
                  T(-1, {L(F::Int, ch.n1(al + be), ch.n2(la + ch.q * mu))})};
    } else if (c == "3i") {
        const auto al = t[0], la = t[1], ph = t[2];
        const std::int64_t alpha_ext = ch.ext(3, al) + (alt_extension ? ch.q1 : 0);
        const auto x = ch.n3(alpha_ext + ch.ext(3, ch.res(2, la)) + ph);
        id.lhs = {T(1, {L(F::Int, al, la), L(F::Cusp, ph)})};
        id.rhs = {T(1, {I(SubgroupSpec::torus_a(x))}), T(-1, {L(F::Cusp, x)})};
    } else if (c == "3ii") {
        const auto al = t[0], la = t[1], ph = t[2];
        const auto a = ch.n1(al + ch.res(3, ph));
        id.lhs = {T(1, {L(F::Int, al, la), L(F::Cusp, ph)})};
        id.rhs = {T(1, {I(SubgroupSpec::torus_m(ch.n2(la), a))}), T(1, {L(F::Int, a, la), one_1}),
                  T(-1, {L(F::Int, a, la), one_q2q})};
    } else if (c == "4") {
        const auto de = t[0], al = t[1], be = t[2], ga = t[3];
        id.lhs = {T(1, {L(F::Pq3, de), L(F::Pabc, al, be, ga)})};
        id.rhs = {T(1, {I(SubgroupSpec::torus_i(ch.n1(al + de), ch.n1(be + de), ch.n1(ga + de)))})};
    } else if (c == "5") {
        id.lhs = {T(1, {L(F::Pq3, t[0]), L(F::Cusp, t[1])})};
        id.rhs = {T(1, {I(SubgroupSpec::torus_a(ch.n3(ch.infl(3, t[0]) + t[1])))})};
    } else if (c == "6") {
        const auto al = t[0], be = t[1], la = t[2];
        id.lhs = {T(1, {L(F::Pq3, al), L(F::Int, be, la)})};
        id.rhs = {T(1, {I(SubgroupSpec::torus_m(ch.n2(ch.infl(2, al) + la), ch.n1(al + be)))})};
    } else if (c == "7i" || c == "7ii" || c == "7iii") {
        const auto s = ch.n1(t[0] + t[1]);
        id.lhs = {T(1, {L(F::Pq3, t[0]), L(F::Pq3, t[1])})};
        if (c == "7i")
            id.rhs = {T(1, {I(SubgroupSpec::torus_m(ch.infl(2, s), s))}), T(1, {L(F::Pq3, s)})};
        else if (c == "7ii")
            id.rhs = {T(1, {I(SubgroupSpec::torus_i(s, s, s))}), T(-2, {L(F::Pq3, s), one_q2q}), T(-1, {L(F::Pq3, s), one_1})};
        else
            id.rhs = {T(1, {I(SubgroupSpec::torus_a(ch.infl(3, s)))}), T(1, {L(F::Pq3, s), one_q2q}), T(-1, {L(F::Pq3, s), one_1})};
    } else if (c == "8i") {
        const auto ph = t[0], al = t[1], be = t[2], ga = t[3];
        const auto x = ch.n3(ph + ch.ext(3, al + be + ga) + (alt_extension ? ch.q1 : 0));
        id.lhs = {T(1, {L(F::Cusp, ph), L(F::Pabc, al, be, ga)})};
        id.rhs = {T(1, {I(SubgroupSpec::torus_a(x))}), T(2, {L(F::Cusp, x), one_q2q}), T(1, {L(F::Cusp, x), one_1})};
    } else if (c == "8ii") {
        const auto ph = t[0], al = t[1], be = t[2], ga = t[3];
        const auto g2 = ch.n1(ch.res(3, ph) + ga);
        id.lhs = {T(1, {L(F::Cusp, ph), L(F::Pabc, al, be, ga)})};
        id.rhs = {T(1, {I(SubgroupSpec::torus_i(ch.n1(al), ch.n1(be), g2))}), T(1, {L(F::Pabc, al, be, g2), one_1}),
                  T(-1, {L(F::Pabc, al, be, g2), one_q2q})};
    } else if (c == "9") {
        const auto ph = t[0], ps = t[1];
        const auto x = ch.n3(ph + ps);
        id.lhs = {T(1, {L(F::Cusp, ph), L(F::Cusp, ps)})};
        id.rhs = {T(1, {I(SubgroupSpec::torus_a(x))}), T(1, {L(F::Cusp, ch.n3(ph + ch.q * ps))}),
                  T(1, {L(F::Cusp, ch.n3(ph + ch.q * ch.q * ps))}), T(-1, {L(F::Cusp, x), one_q2q}), T(-1, {L(F::Cusp, x), one_1})};
    } else if (c == "10") {
        const auto al = t[0], be = t[1], ga = t[2];
        const std::int64_t x[3] = {t[3], t[4], t[5]};
        auto pabc = [&](int i, int j, int k) { return L(F::Pabc, ch.n1(al + x[i]), ch.n1(be + x[j]), ch.n1(ga + x[k])); };
        id.lhs = {T(1, {L(F::Pabc, al, be, ga), L(F::Pabc, x[0], x[1], x[2])})};
        id.rhs = {T(1, {I(SubgroupSpec::torus_i(ch.n1(al + x[0]), ch.n1(be + x[1]), ch.n1(ga + x[2])))})};
        static constexpr int perms[5][3] = {{0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        for (const auto& p : perms) id.rhs.push_back(T(1, {pabc(p[0], p[1], p[2])}));
        for (const auto& p : {std::array<int, 3>{1, 2, 0}, std::array<int, 3>{2, 0, 1}}) {
            id.rhs.push_back(T(1, {pabc(p[0], p[1], p[2]), one_q2q}));
            id.rhs.push_back(T(-2, {pabc(p[0], p[1], p[2]), one_1}));
        }
    } else {
        throw std::invalid_argument("unknown case " + c);
    }
    return id;
}

ClassFunction evaluate_side(const Context& ctx, const std::vector<Term>& side, bool resolve, bool fast_induction) {
    Evaluator ev(ctx, fast_induction);
    return ev.side(side, resolve);
}

bool is_admissible(const Context& ctx, const Identity& id) {
    for (const auto* side : {&id.lhs, &id.rhs})
        for (const Term& t : *side)
            for (const Factor& f : t.factors)
                if (f.irr && !ctx.table().is_generic(*f.irr)) return false;
    return true;
}

VerifyReport verify_identity(const Context& ctx, const std::string& name, const SlotDegrees& slots,
                             const std::function<std::vector<Identity>(const Tuple&)>& build, const SweepOptions& options) {
    VerifyReport rep;
    rep.name = name;
    rep.q = ctx.q();
    std::vector<std::uint64_t> sizes;
    std::uint64_t space = 1;
    for (int d : slots) {
        sizes.push_back(static_cast<std::uint64_t>(ctx.tower().group_order(d)));
        space *= sizes.back();
    }
    rep.tuple_space = space;
    auto decode = [&](std::uint64_t idx) {
        Tuple t(slots.size());
        for (std::size_t i = slots.size(); i-- > 0;) {
            t[i] = static_cast<std::int64_t>(idx % sizes[i]);
            idx /= sizes[i];
        }
        return t;
    };

    // Candidate tuples, split into admissible and excluded.
    std::vector<Tuple> chosen, excluded;
    auto consider = [&](const Tuple& t) {
        const auto ids = build(t);
        const bool ok = !ids.empty() && std::all_of(ids.begin(), ids.end(), [&](const Identity& id) { return is_admissible(ctx, id); });
        (ok ? chosen : excluded).push_back(t);
        return ok;
    };
    SweepMode mode = options.mode;
    if (!options.explicit_tuples.empty()) {
        rep.sweep = "explicit";
        for (const Tuple& t : options.explicit_tuples) consider(t);
    } else {
        if (mode == SweepMode::Auto) mode = space <= options.exhaustive_limit ? SweepMode::Exhaustive : SweepMode::Random;
        if (mode == SweepMode::Exhaustive) {
            rep.sweep = "exhaustive";
            for (std::uint64_t i = 0; i < space; ++i) consider(decode(i));
        } else {
            rep.sweep = "random:" + std::to_string(options.samples) + ":seed=" + std::to_string(options.seed);
            std::mt19937_64 rng(options.seed);
            const std::uint64_t max_draws = std::max<std::uint64_t>(1000, 1000 * options.samples);
            for (std::uint64_t draw = 0; draw < max_draws && chosen.size() < options.samples; ++draw) consider(decode(rng() % space));
        }
    }
    rep.excluded = excluded.size();
    if (chosen.empty()) rep.notes.push_back("no admissible tuples at q=" + std::to_string(ctx.q()));

    Evaluator ev(ctx, fast_default(ctx, options));
    std::vector<std::vector<Failure>> per(chosen.size());
    std::atomic<std::uint64_t> done{0};
    parallel_for(chosen.size(), options.jobs, [&](std::size_t i) {
        for (const Identity& id : build(chosen[i])) {
            const ClassFunction lhs = ev.side(id.lhs, false);
            const ClassFunction rhs = ev.side(id.rhs, false);
            const auto bad = lhs.mismatches(rhs);
            if (!bad.empty()) per[i].push_back({chosen[i], id.tag + ": " + to_string(id), class_names(ctx, bad)});
        }
        const auto d = ++done;
        if (options.progress) options.progress(name, d, chosen.size());
    });
    rep.tuples_checked = chosen.size();
    for (auto& v : per)
        for (auto& f : v) rep.failures.push_back(std::move(f));

    if (options.experimental_degenerate) {
        std::vector<std::vector<Failure>> exp(excluded.size());
        parallel_for(excluded.size(), options.jobs, [&](std::size_t i) {
            for (const Identity& id : build(excluded[i])) {
                try {
                    const auto bad = ev.side(id.lhs, true).mismatches(ev.side(id.rhs, true));
                    if (!bad.empty()) exp[i].push_back({excluded[i], id.tag + ": " + to_string(id), class_names(ctx, bad)});
                } catch (const std::invalid_argument& e) {
                    exp[i].push_back({excluded[i], std::string("unresolved: ") + e.what(), {}});
                }
            }
        });
        rep.experimental_checked = excluded.size();
        for (auto& v : exp)
            for (auto& f : v) rep.experimental.push_back(std::move(f));
    }
    return rep;
}

VerifyReport verify_theorem1(const Context& ctx, const std::string& case_id, const SweepOptions& options) {
    const auto slots = theorem1_slots(case_id, options.interpretation);
    const bool alt = case_id == "3i" || case_id == "8i";
    auto build = [&](const Tuple& t) {
        std::vector<Identity> ids{theorem1_identity(ctx, case_id, t, options.interpretation, false)};
        if (alt) {
            ids.push_back(theorem1_identity(ctx, case_id, t, options.interpretation, true));
            ids.back().tag += "/alt-extension";
        }
        return ids;
    };
    VerifyReport rep = verify_identity(ctx, "theorem1:" + case_id, slots, build, options);
    if (case_id == "1ii") rep.notes.push_back(std::string("interpretation=") + to_string(options.interpretation));
    return rep;
}

VerifyReport verify_corollary1(const Context& ctx, int item, const SweepOptions& options) {
    const Chars ch(ctx);
    using F = Family;
    if (item == 1) {
        auto build = [&](const Tuple& t) {
            const auto al = t[0], be = t[1], ga = t[2];
            Identity id;
            id.tag = "item1";
            id.lhs = {T(1, {L(F::Pq3, al), L(F::PabSmall, be, ga)}), T(1, {L(F::Pq3, al), L(F::PabBig, be, ga)})};
            id.rhs = {T(1, {I(SubgroupSpec::torus_i(ch.n1(al + be), ch.n1(al + ga), ch.n1(al + ga)))})};
            return std::vector<Identity>{id};
        };
        return verify_identity(ctx, "corollary1:1", {1, 1, 1}, build, options);
    }
    if (item == 2) {
        auto build = [&](const Tuple& t) {
            const auto al = t[0], be = t[1];
            const auto s = ch.n1(al + be);
            Identity id;
            id.tag = "item2";
            id.lhs = {T(1, {L(F::Pq3, al), L(F::Pq2q, be)})};
            id.rhs = {T(2, {L(F::Pq3, s)}), T(1, {I(SubgroupSpec::torus_m(ch.infl(2, s), s))}),
                      T(-1, {I(SubgroupSpec::torus_a(ch.n3(ch.infl(3, al) + ch.infl(3, be))))})};
            return std::vector<Identity>{id};
        };
        return verify_identity(ctx, "corollary1:2", {1, 1}, build, options);
    }
    throw std::invalid_argument("corollary item must be 1 or 2");
}

VerifyReport verify_prop1(const Context& ctx, const SweepOptions& options) {
    const Chars ch(ctx);
    const CharacterTable& tab = ctx.table();
    using F = Family;
    const int q = ctx.q();
    auto central = [&](const Tuple& t) { return ch.n1(ch.res(3, t[0]) + t[1] + t[2] + t[3]); };
    auto build = [&](const Tuple& t) {
        std::vector<Identity> ids;
        for (int c = 1; c < q; ++c) {
            const auto tw = static_cast<Elem>(c);
            Identity id;
            id.tag = "twist=" + std::to_string(c);
            id.lhs = {T(1, {L(F::Cusp, t[0]), L(F::Pabc, t[1], t[2], t[3])})};
            id.rhs = {T(1, {I(SubgroupSpec::zn(central(t), tw))}), T(1, {I(SubgroupSpec::zn1(central(t), tw))})};
            ids.push_back(std::move(id));
        }
        return ids;
    };
    SweepOptions opts = options;
    if (opts.explicit_tuples.empty()) {
        for (const IrrLabel& l : tab.all_irreducibles()) {
            if (l.family != F::Cusp) continue;
            for (std::int64_t b = 0; b < q - 1; ++b)
                for (std::int64_t g = b + 1; g < q - 1; ++g)
                    for (std::int64_t d = g + 1; d < q - 1; ++d) opts.explicit_tuples.push_back({l.params[0], b, g, d});
        }
        if (opts.mode == SweepMode::Random && opts.explicit_tuples.size() > opts.samples) {
            std::mt19937_64 rng(opts.seed);
            std::shuffle(opts.explicit_tuples.begin(), opts.explicit_tuples.end(), rng);
            opts.explicit_tuples.resize(opts.samples);
        }
    }
    VerifyReport rep = verify_identity(ctx, "prop1", {3, 1, 1, 1}, build, opts);
    rep.tuple_space = opts.explicit_tuples.size();
    if (q < 3) return rep;

    // Spot values: T1^a and the vanishing of the ZN1 term at T11^a.
    Evaluator ev(ctx, false);
    const CyclotomicField& field = ctx.field();
    for (const Tuple& t : opts.explicit_tuples) {
        const IrrLabel cusp{F::Cusp, {t[0], 0, 0}}, pabc{F::Pabc, {t[1], t[2], t[3]}};
        if (!tab.is_generic(cusp) || !tab.is_generic(pabc)) continue;
        const ClassFunction lhs = tab.character(cusp) * tab.character(pabc);
        const ClassFunction zn1 = ev.factor(I(SubgroupSpec::zn1(central(t), 1)), false);
        for (std::size_t i = 0; i < ctx.classes().size(); ++i) {
            const auto& lab = ctx.classes()[i].label;
            if (lab.type == ClassType::T1a) {
                const CycValue want = CycValue::root(field, tab.zexp(1, central(t), lab.params[0])) * (-(q - 1) * (2 * q + 1));
                if (!(lhs[i] == want)) rep.failures.push_back({t, "spot value at T1a", {to_string(lab)}});
            } else if (lab.type == ClassType::T11a && !zn1[i].is_zero()) {
                rep.failures.push_back({t, "ZN1 term nonzero at T11a", {to_string(lab)}});
            }
        }
    }
    rep.notes.push_back("spot values checked at T1a and T11a");
    return rep;
}

std::optional<std::int64_t> section4_prediction(const Context& ctx, std::int64_t phi, std::int64_t psi, const IrrLabel& label) {
    const Chars ch(ctx);
    const std::int64_t prod = ch.n3(phi + psi);
    switch (label.family) {
        case Family::P1: {
            // A cuspidal label is a Frobenius orbit, so psi runs over its conjugates.
            std::int64_t m = 0, qi = 1;
            for (int i = 0; i < 3; ++i, qi *= ch.q) m += ch.n3(phi + psi * qi) == ch.infl(3, label.params[0]) ? 1 : 0;
            return m;
        }
        case Family::Pabc: return ch.res(3, prod) == ch.n1(label.params[0] + label.params[1] + label.params[2]) ? 1 : 0;
        case Family::Cusp: {
            std::int64_t m = 0;
            std::int64_t qi = 1;
            for (int i = 0; i < 3; ++i, qi *= ch.q) {
                std::int64_t qj = 1;
                for (int j = 0; j < 3; ++j, qj *= ch.q)
                    if (ch.n3(phi + psi * qi) == ch.n3(label.params[0] * qj)) ++m;
            }
            if (ch.res(3, prod) == ch.res(3, label.params[0])) m += ch.q - 3;
            return m;
        }
        default: return std::nullopt;
    }
}

VerifyReport verify_section4(const Context& ctx, const SweepOptions& options) {
    VerifyReport rep;
    rep.name = "section4";
    rep.q = ctx.q();
    rep.sweep = "exhaustive";
    const CharacterTable& tab = ctx.table();
    std::vector<std::int64_t> cusp;
    for (const IrrLabel& l : tab.all_irreducibles())
        if (l.family == Family::Cusp) cusp.push_back(l.params[0]);
    std::vector<Tuple> pairs;
    for (auto a : cusp)
        for (auto b : cusp) pairs.push_back({a, b});
    if (!options.explicit_tuples.empty()) pairs = options.explicit_tuples;
    rep.tuple_space = pairs.size();
    const std::int64_t q = ctx.q();
    const std::int64_t expected = (q - 1) * (q * q - 1) * (q - 1) * (q * q - 1);
    std::vector<std::vector<Failure>> per(pairs.size());
    std::atomic<std::uint64_t> done{0};
    std::mutex stats_mutex;
    std::uint64_t pabc_seen = 0, pabc_scaled = 0;
    parallel_for(pairs.size(), options.jobs, [&](std::size_t i) {
        const Tuple& t = pairs[i];
        const ClassFunction f = tab.character({Family::Cusp, {t[0], 0, 0}}) * tab.character({Family::Cusp, {t[1], 0, 0}});
        Decomposition d;
        try {
            d = decompose(tab, f);
        } catch (const ArithmeticError& e) {
            per[i].push_back({t, e.what(), {}});
            return;
        }
        if (!d.genuine()) per[i].push_back({t, "negative multiplicity", {}});
        if (d.degree != expected)
            per[i].push_back({t, "degree " + std::to_string(d.degree) + " != " + std::to_string(expected), {}});
        for (const IrrLabel& l : tab.all_irreducibles()) {
            const auto want = section4_prediction(ctx, t[0], t[1], l);
            if (!want) continue;
            const auto got = d.multiplicity(l);
            if (got != *want)
                per[i].push_back({t, to_string(l) + ": multiplicity " + std::to_string(got) + ", closed form " + std::to_string(*want), {}});
            if (l.family == Family::Pabc) {
                std::lock_guard lock(stats_mutex);
                ++pabc_seen;
                if (got == q * *want) ++pabc_scaled;
            }
        }
        const auto n = ++done;
        if (options.progress) options.progress("section4", n, pairs.size());
    });
    rep.tuples_checked = pairs.size();
    for (auto& v : per)
        for (auto& f : v) rep.failures.push_back(std::move(f));
    if (q < 4) rep.notes.push_back("no principal-series label pabc exists at q=" + std::to_string(q));
    else
        rep.notes.push_back("pabc multiplicity equals q times the closed form in " + std::to_string(pabc_scaled) + " of " +
                            std::to_string(pabc_seen) + " cases");
    std::map<std::string, std::uint64_t> by_family;
    for (const Failure& f : rep.failures) by_family[f.detail.substr(0, f.detail.find(':'))]++;
    for (const auto& [fam, n] : by_family) rep.notes.push_back("mismatches for " + fam + ": " + std::to_string(n));
    return rep;
}

VerifyReport verify_lemma1(const Context& ctx, const SweepOptions& options) {
    VerifyReport rep;
    rep.name = "lemma1";
    rep.q = ctx.q();
    rep.sweep = "exhaustive";
    const FieldTower& t = ctx.tower();
    const std::int64_t q1 = ctx.q() - 1;
    std::vector<SubgroupSpec> specs;
    for (std::int64_t a = 0; a < q1; ++a)
        for (std::int64_t b = 0; b < q1; ++b)
            for (std::int64_t c = 0; c < q1; ++c) specs.push_back(SubgroupSpec::torus_i(a, b, c));
    for (std::int64_t l = 0; l < t.group_order(2); ++l)
        for (std::int64_t a = 0; a < q1; ++a) specs.push_back(SubgroupSpec::torus_m(l, a));
    for (std::int64_t f = 0; f < t.group_order(3); ++f) specs.push_back(SubgroupSpec::torus_a(f));
    rep.tuple_space = specs.size();
    if (ctx.q() > ctx.induction().options().brute_force_max_q) {
        rep.notes.push_back("brute-force induction disabled above q=" + std::to_string(ctx.induction().options().brute_force_max_q));
        return rep;
    }
    const InductionEngine& eng = ctx.induction();
    std::vector<std::vector<Failure>> per(specs.size());
    std::atomic<std::uint64_t> done{0};
    parallel_for(specs.size(), options.jobs, [&](std::size_t i) {
        const auto bad = eng.induce_torus_fast(specs[i]).mismatches(eng.induce_bruteforce(specs[i]));
        if (!bad.empty()) per[i].push_back({{specs[i].chars.begin(), specs[i].chars.end()}, to_string(specs[i]), class_names(ctx, bad)});
        const auto n = ++done;
        if (options.progress) options.progress("lemma1", n, specs.size());
    });
    rep.tuples_checked = specs.size();
    for (auto& v : per)
        for (auto& f : v) rep.failures.push_back(std::move(f));
    return rep;
}

VerifyReport verify_lemma2(const Context& ctx, const SweepOptions& options) {
    VerifyReport rep;
    rep.name = "lemma2";
    rep.q = ctx.q();
    rep.sweep = "exhaustive";
    const CharacterTable& tab = ctx.table();
    const FieldTower& t = ctx.tower();
    const std::int64_t q1 = ctx.q() - 1;
    std::set<IrrLabel> labels;
    for (std::int64_t a = 0; a < q1; ++a)
        for (std::int64_t b = 0; b < q1; ++b) {
            labels.insert(tab.canonical({Family::PabSmall, {a, b, 0}}));
            labels.insert(tab.canonical({Family::PabBig, {a, b, 0}}));
            for (std::int64_t c = 0; c < q1; ++c) labels.insert(tab.canonical({Family::Pabc, {a, b, c}}));
        }
    for (std::int64_t a = 0; a < q1; ++a)
        for (std::int64_t l = 0; l < t.group_order(2); ++l) labels.insert(tab.canonical({Family::Int, {a, l, 0}}));
    for (std::int64_t f = 0; f < t.group_order(3); ++f) labels.insert(tab.canonical({Family::Cusp, {f, 0, 0}}));
    std::vector<IrrLabel> degenerate;
    for (const IrrLabel& l : labels)
        if (!tab.is_generic(l)) degenerate.push_back(l);
    rep.tuple_space = degenerate.size();
    std::vector<std::vector<Failure>> per(degenerate.size());
    parallel_for(degenerate.size(), options.jobs, [&](std::size_t i) {
        const IrrLabel& l = degenerate[i];
        const Tuple tup(l.params.begin(), l.params.begin() + param_count(l.family));
        try {
            const VirtualCharacter v = tab.resolve_degenerate(l);
            const auto bad = tab.formula(l).mismatches(tab.evaluate(v));
            if (!bad.empty()) per[i].push_back({tup, to_string(l) + " = " + to_string(v), class_names(ctx, bad)});
        } catch (const std::invalid_argument& e) {
            per[i].push_back({tup, to_string(l) + ": " + e.what(), {}});
        }
    });
    rep.tuples_checked = degenerate.size();
    for (auto& v : per)
        for (auto& f : v) rep.failures.push_back(std::move(f));
    return rep;
}

VerifyReport verify_table(const Context& ctx, double tolerance) {
    VerifyReport rep;
    rep.name = "table";
    rep.q = ctx.q();
    rep.sweep = "exhaustive";
    const CharacterTable& tab = ctx.table();
    const TableReport tr = tab.validate();
    rep.tuple_space = tr.count;
    rep.tuples_checked = tr.count;
    if (tr.count != tr.expected_count)
        rep.failures.push_back({{}, "irreducible count " + std::to_string(tr.count) + " != " + std::to_string(tr.expected_count), {}});
    if (tr.sum_of_squares != tr.group_order)
        rep.failures.push_back({{}, "sum of squared degrees " + std::to_string(tr.sum_of_squares) + " != |G|", {}});
    for (const auto& [a, b] : tr.orthogonality_failures) rep.failures.push_back({{}, "orthogonality " + a + " , " + b, {}});
    if (!tr.regular_ok) rep.failures.push_back({{}, "regular character identity fails", {}});
    for (const auto& d : tr.degree_failures) rep.failures.push_back({{}, "degree " + d, {}});

    std::vector<std::int64_t> degs = tr.degrees;
    std::sort(degs.begin(), degs.end());
    std::ostringstream os;
    for (std::size_t i = 0; i < degs.size(); ++i) os << (i ? "," : "") << degs[i];
    rep.notes.push_back("degrees=" + os.str());

    double worst = 0;
    for (const IrrLabel& l : tab.all_irreducibles()) {
        const auto fl = tab.formula_complex(l);
        const auto ex = tab.character(l).to_complex();
        for (std::size_t i = 0; i < fl.size(); ++i) {
            const double err = std::abs(fl[i] - ex[i]) / std::max(1.0, std::abs(ex[i]));
            worst = std::max(worst, err);
            if (!(err <= tolerance))
                rep.failures.push_back({{}, "floating-point backend differs for " + to_string(l), {to_string(ctx.classes()[i].label)}});
        }
    }
    std::ostringstream ws;
    ws << "max relative deviation of floating-point backend=" << worst;
    rep.notes.push_back(ws.str());
    return rep;
}

std::vector<SubgroupSpec> reciprocity_specs(const Context& ctx) {
    std::vector<SubgroupSpec> specs;
    const std::int64_t q1 = ctx.q() - 1;
    for (std::int64_t a = 0; a < q1; ++a)
        for (std::int64_t b = 0; b < q1; ++b)
            for (std::int64_t c = 0; c < q1; ++c) specs.push_back(SubgroupSpec::torus_i(a, b, c));
    for (std::int64_t l = 0; l < ctx.tower().group_order(2); ++l)
        for (std::int64_t a = 0; a < q1; ++a) specs.push_back(SubgroupSpec::torus_m(l, a));
    for (std::int64_t f = 0; f < ctx.tower().group_order(3); ++f) specs.push_back(SubgroupSpec::torus_a(f));
    for (std::int64_t a = 0; a < q1; ++a)
        for (int c = 1; c < ctx.q(); ++c) {
            const auto tw = static_cast<Elem>(c);
            specs.push_back(SubgroupSpec::zn(a, tw));
            specs.push_back(SubgroupSpec::zn1(a, tw));
            specs.push_back(SubgroupSpec::pattern(a, tw, {{2, 3}}));
        }
    return specs;
}

VerifyReport verify_reciprocity(const Context& ctx, const std::vector<SubgroupSpec>& specs, const SweepOptions& options) {
    VerifyReport rep;
    rep.name = "reciprocity";
    rep.q = ctx.q();
    rep.sweep = "explicit";
    rep.tuple_space = specs.size();
    const CharacterTable& tab = ctx.table();
    const InductionEngine& eng = ctx.induction();
    const auto irr = tab.all_irreducibles();
    std::vector<std::vector<Failure>> per(specs.size());
    std::atomic<std::uint64_t> done{0};
    parallel_for(specs.size(), options.jobs, [&](std::size_t i) {
        const ClassFunction ind = eng.induce(specs[i], fast_default(ctx, options));
        for (const IrrLabel& l : irr) {
            const ClassFunction& chi = tab.character(l);
            if (!(inner(ind, chi) == eng.restricted_inner(specs[i], chi)))
                per[i].push_back({{specs[i].chars.begin(), specs[i].chars.end()}, to_string(specs[i]) + " against " + to_string(l), {}});
        }
        const auto n = ++done;
        if (options.progress) options.progress("reciprocity", n, specs.size());
    });
    rep.tuples_checked = specs.size();
    for (auto& v : per)
        for (auto& f : v) rep.failures.push_back(std::move(f));
    return rep;
}

}  // namespace gl3
