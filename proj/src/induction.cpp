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


#include "gl3/induction.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace gl3 {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

const char* to_string(SubgroupKind k) noexcept {
    switch (k) {
        case SubgroupKind::TorusI: return "Ti";
        case SubgroupKind::TorusM: return "Tm";
        case SubgroupKind::TorusA: return "Ta";
        case SubgroupKind::ZN: return "ZN";
        case SubgroupKind::ZN1: return "ZN1";
        case SubgroupKind::ZNPattern: return "ZNpattern";
    }
    return "?";
}

std::optional<SubgroupKind> subgroup_kind_from_string(const std::string& s) {
    for (auto k : {SubgroupKind::TorusI, SubgroupKind::TorusM, SubgroupKind::TorusA, SubgroupKind::ZN, SubgroupKind::ZN1,
                   SubgroupKind::ZNPattern})
        if (s == to_string(k)) return k;
    return std::nullopt;
}

std::vector<std::pair<int, int>> SubgroupSpec::zero_set() const {
    switch (kind) {
        case SubgroupKind::ZN: return {};
        case SubgroupKind::ZN1: return {{1, 2}};
        case SubgroupKind::ZNPattern: {
            auto z = zeroed;
            std::sort(z.begin(), z.end());
            z.erase(std::unique(z.begin(), z.end()), z.end());
            return z;
        }
        default: return {};
    }
}

std::string to_string(const SubgroupSpec& spec) {
    std::ostringstream os;
    os << to_string(spec.kind) << '(';
    switch (spec.kind) {
        case SubgroupKind::TorusI: os << spec.chars[0] << ',' << spec.chars[1] << ',' << spec.chars[2]; break;
        case SubgroupKind::TorusM: os << spec.chars[0] << ',' << spec.chars[1]; break;
        case SubgroupKind::TorusA: os << spec.chars[0]; break;
        default: {
            os << spec.chars[0] << ",psi" << int(spec.twist);
            if (spec.kind == SubgroupKind::ZNPattern) {
                os << ",zero{";
                bool first = true;
                for (auto [i, j] : spec.zero_set()) {
                    os << (first ? "" : ",") << i << j;
                    first = false;
                }
                os << '}';
            }
        }
    }
    os << ')';
    return os.str();
}

// ---------------------------------------------------------------- engine

InductionEngine::InductionEngine(const CharacterTable& table, InductionOptions options)
    : table_(&table), options_(std::move(options)) {
    if (options_.jobs < 1) options_.jobs = 1;
}

SubgroupKind InductionEngine::histogram_kind(SubgroupKind k) {
    return (k == SubgroupKind::ZN1 || k == SubgroupKind::ZNPattern) ? SubgroupKind::ZN : k;
}

std::size_t InductionEngine::bin_count(SubgroupKind kind) const {
    const FieldTower& t = table_->tower();
    const std::int64_t q = t.q(), q1 = q - 1;
    switch (histogram_kind(kind)) {
        case SubgroupKind::TorusI: return static_cast<std::size_t>(q1 * q1 * q1);
        case SubgroupKind::TorusM: return static_cast<std::size_t>(t.group_order(2) * q1);
        case SubgroupKind::TorusA: return static_cast<std::size_t>(t.group_order(3));
        default: return static_cast<std::size_t>(q1 * q * q * q);
    }
}

void InductionEngine::validate(const SubgroupSpec& spec) const {
    if (spec.is_torus()) return;
    if (spec.twist == 0 || spec.twist >= table_->q()) throw std::invalid_argument("additive character twist must be a nonzero field element");
    for (auto [i, j] : spec.zero_set())
        if (i < 1 || j > 3 || i >= j) throw std::invalid_argument("zeroed position must be strictly upper triangular in a 3x3 matrix");
    const auto z = spec.zero_set();
    const std::set<std::pair<int, int>> zs(z.begin(), z.end());
    for (auto [i, j] : z)
        for (int k = i + 1; k < j; ++k)
            if (!zs.count({i, k}) && !zs.count({k, j}))
                throw std::invalid_argument("pattern does not define a subgroup: product term at (" + std::to_string(i) + "," +
                                            std::to_string(j) + ") survives");
}

std::int64_t InductionEngine::subgroup_order(const SubgroupSpec& spec) const {
    const FieldTower& t = table_->tower();
    const std::int64_t q = t.q(), q1 = q - 1;
    switch (spec.kind) {
        case SubgroupKind::TorusI: return q1 * q1 * q1;
        case SubgroupKind::TorusM: return t.group_order(2) * q1;
        case SubgroupKind::TorusA: return t.group_order(3);
        default: return q1 * ipow(q, 3 - static_cast<int>(spec.zero_set().size()));
    }
}

Mat3 InductionEngine::bin_element(SubgroupKind kind, std::size_t bin) const {
    const FieldTower& t = table_->tower();
    const std::int64_t q = t.q(), q1 = q - 1;
    const auto b = static_cast<std::int64_t>(bin);
    Mat3 m{};
    switch (histogram_kind(kind)) {
        case SubgroupKind::TorusI:
            m[0] = t.exp1(b / (q1 * q1));
            m[4] = t.exp1((b / q1) % q1);
            m[8] = t.exp1(b % q1);
            return m;
        case SubgroupKind::TorusM: return t.embed_quadratic(t.from_dlog(2, b / q1), t.exp1(b % q1));
        case SubgroupKind::TorusA: return t.embed_cubic(t.from_dlog(3, b));
        default: {
            const Elem z = static_cast<Elem>(b % q), y = static_cast<Elem>((b / q) % q), x = static_cast<Elem>((b / (q * q)) % q);
            const Elem a = t.exp1(b / (q * q * q));
            m[0] = m[4] = m[8] = a;
            m[1] = t.mul(a, x);
            m[2] = t.mul(a, z);
            m[5] = t.mul(a, y);
            return m;
        }
    }
}

bool InductionEngine::bin_in_subgroup(const SubgroupSpec& spec, std::size_t bin) const {
    if (spec.is_torus()) return true;
    const std::int64_t q = table_->q();
    const auto b = static_cast<std::int64_t>(bin);
    const std::int64_t z = b % q, y = (b / q) % q, x = (b / (q * q)) % q;
    for (auto [i, j] : spec.zero_set()) {
        if (i == 1 && j == 2 && x != 0) return false;
        if (i == 2 && j == 3 && y != 0) return false;
        if (i == 1 && j == 3 && z != 0) return false;
    }
    return true;
}

std::uint32_t InductionEngine::theta_exponent(const SubgroupSpec& spec, std::size_t bin) const {
    const CharacterTable& T = *table_;
    const FieldTower& t = T.tower();
    const std::int64_t q = t.q(), q1 = q - 1, m = T.modulus();
    const auto b = static_cast<std::int64_t>(bin);
    const auto& c = spec.chars;
    std::int64_t e = 0;
    switch (spec.kind) {
        case SubgroupKind::TorusI:
            e = T.zexp(1, c[0], b / (q1 * q1)) + T.zexp(1, c[1], (b / q1) % q1) + T.zexp(1, c[2], b % q1);
            break;
        case SubgroupKind::TorusM: e = T.zexp(2, c[0], b / q1) + T.zexp(1, c[1], b % q1); break;
        case SubgroupKind::TorusA: e = T.zexp(3, c[0], b); break;
        default: {
            const Elem y = static_cast<Elem>((b / q) % q), x = static_cast<Elem>((b / (q * q)) % q);
            const std::int64_t ad = b / (q * q * q);
            const int tr = t.trace(t.mul(spec.twist, t.add(x, y)));
            e = T.zexp(1, c[0], ad) + tr * (m / t.p());
        }
    }
    return static_cast<std::uint32_t>(mod(e, m));
}

SweepHistogram InductionEngine::sweep(SubgroupKind requested) const {
    const SubgroupKind kind = histogram_kind(requested);
    const ConjugacyClasses& cl = table_->classes();
    const FieldTower& t = cl.tower();
    const MatrixOps& ops = cl.ops();
    const int q = t.q();
    const std::int64_t q1 = q - 1;
    if (q > options_.brute_force_max_q)
        throw std::invalid_argument("brute-force induction is limited to q <= " + std::to_string(options_.brute_force_max_q));

    SweepHistogram h;
    h.kind = kind;
    h.classes = cl.size();
    h.bins = bin_count(kind);
    h.counts.assign(h.classes * h.bins, 0);

    std::vector<Mat3> reps;
    for (const auto& d : cl.classes()) reps.push_back(d.representative);

    // Lookup data for the non-split tori.
    std::vector<std::array<Elem, 2>> quad_second_col(static_cast<std::size_t>(q) * q);
    std::vector<std::int64_t> dlog2(static_cast<std::size_t>(q) * q, -1);
    if (kind == SubgroupKind::TorusM)
        for (std::int64_t k = 0; k < t.group_order(2); ++k) {
            const ExtElement w = t.from_dlog(2, k);
            const Mat3 e = t.embed_quadratic(w, 1);
            quad_second_col[w.code()] = {e[1], e[4]};
            dlog2[w.code()] = k;
        }
    std::vector<Mat3> cubic(static_cast<std::size_t>(q) * q * q);
    std::vector<std::int64_t> dlog3(static_cast<std::size_t>(q) * q * q, -1);
    if (kind == SubgroupKind::TorusA)
        for (std::int64_t k = 0; k < t.group_order(3); ++k) {
            const ExtElement z = t.from_dlog(3, k);
            cubic[z.code()] = t.embed_cubic(z);
            dlog3[z.code()] = k;
        }
    std::vector<int> dlog1(q, -1);
    for (int a = 1; a < q; ++a) dlog1[a] = t.dlog1(static_cast<Elem>(a));

    const Elem* addt = t.add_table();
    const Elem* mult = t.mul_table();
    auto add = [&](Elem a, Elem b) { return addt[a * q + b]; };
    auto mul = [&](Elem a, Elem b) { return mult[a * q + b]; };

    const std::uint64_t total = static_cast<std::uint64_t>(ipow(q, 9));
    const int jobs = std::max(1, std::min<int>(options_.jobs, 64));

    auto work = [&](std::uint64_t begin, std::uint64_t end, std::vector<std::int64_t>& counts, bool report) {
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            if (report && options_.progress && (idx - begin) % (1u << 18) == 0) options_.progress(kind, idx - begin, end - begin);
            const Mat3 X = ops.from_index(idx);
            const auto Xi_opt = ops.inverse(X);
            if (!Xi_opt) continue;
            const Mat3& Xi = *Xi_opt;
            for (std::size_t c = 0; c < reps.size(); ++c) {
                const Mat3 A = ops.mul(X, reps[c]);
                auto y = [&](int i, int j) {
                    return add(add(mul(A[i * 3], Xi[j]), mul(A[i * 3 + 1], Xi[3 + j])), mul(A[i * 3 + 2], Xi[6 + j]));
                };
                std::int64_t bin = -1;
                switch (kind) {
                    case SubgroupKind::TorusI: {
                        if (y(2, 0) || y(1, 0) || y(2, 1) || y(0, 1) || y(0, 2) || y(1, 2)) break;
                        bin = (dlog1[y(0, 0)] * q1 + dlog1[y(1, 1)]) * q1 + dlog1[y(2, 2)];
                        break;
                    }
                    case SubgroupKind::TorusM: {
                        if (y(2, 0) || y(2, 1) || y(0, 2) || y(1, 2)) break;
                        const std::uint32_t code = y(0, 0) + static_cast<std::uint32_t>(y(1, 0)) * q;
                        const auto& sc = quad_second_col[code];
                        if (y(0, 1) != sc[0] || y(1, 1) != sc[1]) break;
                        bin = dlog2[code] * q1 + dlog1[y(2, 2)];
                        break;
                    }
                    case SubgroupKind::TorusA: {
                        const Elem y00 = y(0, 0), y10 = y(1, 0), y20 = y(2, 0);
                        const std::uint32_t code = y00 + static_cast<std::uint32_t>(y10) * q + static_cast<std::uint32_t>(y20) * q * q;
                        const Mat3& e = cubic[code];
                        bool ok = true;
                        for (int i = 0; i < 3 && ok; ++i)
                            for (int j = 1; j < 3 && ok; ++j) ok = y(i, j) == e[i * 3 + j];
                        if (ok) bin = dlog3[code];
                        break;
                    }
                    default: {
                        if (y(2, 0) || y(1, 0) || y(2, 1)) break;
                        const Elem a = y(0, 0);
                        if (y(1, 1) != a || y(2, 2) != a) break;
                        const Elem ai = t.inv(a);
                        const std::int64_t x01 = mul(y(0, 1), ai), x12 = mul(y(1, 2), ai), x02 = mul(y(0, 2), ai);
                        bin = ((dlog1[a] * q + x01) * q + x12) * q + x02;
                    }
                }
                if (bin >= 0) ++counts[c * h.bins + static_cast<std::size_t>(bin)];
            }
        }
    };

    if (jobs == 1) {
        work(0, total, h.counts, true);
    } else {
        std::vector<std::vector<std::int64_t>> partial(jobs, std::vector<std::int64_t>(h.counts.size(), 0));
        std::vector<std::thread> threads;
        for (int j = 0; j < jobs; ++j) {
            const std::uint64_t b = total * j / jobs, e = total * (j + 1) / jobs;
            threads.emplace_back([&, j, b, e] { work(b, e, partial[j], j == 0); });
        }
        for (auto& th : threads) th.join();
        for (const auto& p : partial)
            for (std::size_t i = 0; i < p.size(); ++i) h.counts[i] += p[i];
    }
    if (options_.progress) options_.progress(kind, total, total);
    return h;
}

const SweepHistogram& InductionEngine::histogram(SubgroupKind requested) const {
    const SubgroupKind kind = histogram_kind(requested);
    std::lock_guard lock(mutex_);
    auto it = hist_.find(kind);
    if (it != hist_.end()) return *it->second;
    std::optional<SweepHistogram> loaded;
    if (options_.store) loaded = options_.store->load(kind);
    if (loaded && (loaded->classes != table_->classes().size() || loaded->bins != bin_count(kind) ||
                   loaded->counts.size() != loaded->classes * loaded->bins))
        loaded.reset();
    if (!loaded) {
        loaded = sweep(kind);
        if (options_.store) options_.store->save(*loaded);
    }
    return *hist_.emplace(kind, std::make_unique<SweepHistogram>(std::move(*loaded))).first->second;
}

ClassFunction InductionEngine::induce_bruteforce(const SubgroupSpec& spec) const {
    validate(spec);
    const SweepHistogram& h = histogram(spec.kind);
    const CyclotomicField& F = table_->field();
    const ConjugacyClasses& cl = table_->classes();
    const std::int64_t order = subgroup_order(spec);
    std::vector<std::uint32_t> theta(h.bins);
    std::vector<char> member(h.bins);
    for (std::size_t b = 0; b < h.bins; ++b) {
        member[b] = bin_in_subgroup(spec, b);
        if (member[b]) theta[b] = theta_exponent(spec, b);
    }
    std::vector<CycValue> values;
    values.reserve(cl.size());
    for (std::size_t c = 0; c < cl.size(); ++c) {
        std::vector<CycValue::Term> terms;
        for (std::size_t b = 0; b < h.bins; ++b) {
            const std::int64_t n = h.at(c, b);
            if (n != 0 && member[b]) terms.push_back({theta[b], n});
        }
        CycValue v = CycValue::from_terms(F, std::move(terms));
        const bool divisible =
            std::all_of(v.terms().begin(), v.terms().end(), [&](const CycValue::Term& t) { return t.coeff % order == 0; });
        if (divisible) {
            std::vector<CycValue::Term> t = v.terms();
            for (auto& x : t) x.coeff /= order;
            v = CycValue::from_terms(F, std::move(t));
        } else {
            try {
                v = v.exact_div_int(order);
            } catch (const ArithmeticError&) {
                throw ArithmeticError("induced value of " + to_string(spec) + " at " + to_string(cl[c].label) +
                                      " is not divisible by |H|");
            }
        }
        values.push_back(std::move(v));
    }
    return {cl, F, std::move(values)};
}

ClassFunction InductionEngine::induce_torus_fast(const SubgroupSpec& spec) const {
    if (!spec.is_torus()) throw std::invalid_argument("closed-form induction is only available for tori");
    const CharacterTable& T = *table_;
    const CyclotomicField& F = T.field();
    const ConjugacyClasses& cl = T.classes();
    const std::int64_t q = T.q(), G = cl.group_order();
    const auto& ch = spec.chars;
    std::vector<CycValue> values;
    values.reserve(cl.size());
    for (const auto& d : cl.classes()) {
        const auto& p = d.label.params;
        std::vector<CycValue::Term> terms;
        auto emit = [&](std::int64_t e, std::int64_t c) { terms.push_back({static_cast<std::uint32_t>(mod(e, T.modulus())), c}); };
        switch (spec.kind) {
            case SubgroupKind::TorusI: {
                auto th = [&](std::int64_t x, std::int64_t y, std::int64_t z) {
                    return static_cast<std::int64_t>(T.zexp(1, ch[0], x)) + T.zexp(1, ch[1], y) + T.zexp(1, ch[2], z);
                };
                if (d.label.type == ClassType::Ta) {
                    emit(th(p[0], p[0], p[0]), G / ((q - 1) * (q - 1) * (q - 1)));
                } else if (d.label.type == ClassType::Tab) {
                    // Three fusion blocks, each GL(2) x F_q^x.
                    const std::int64_t a = p[0], b = p[1];
                    emit(th(a, a, b), q * (q + 1));
                    emit(th(a, b, a), q * (q + 1));
                    emit(th(b, a, a), q * (q + 1));
                } else if (d.label.type == ClassType::Tabc) {
                    static constexpr int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
                    for (const auto& s : perms) emit(th(p[s[0]], p[s[1]], p[s[2]]), 1);
                }
                break;
            }
            case SubgroupKind::TorusM: {
                if (d.label.type == ClassType::Ta) {
                    emit(T.zexp(2, ch[0], T.lift_dlog(2, p[0])) + T.zexp(1, ch[1], p[0]), G / (T.tower().group_order(2) * (q - 1)));
                } else if (d.label.type == ClassType::Tab) {
                    emit(T.zexp(2, ch[0], T.lift_dlog(2, p[0])) + T.zexp(1, ch[1], p[1]), q * (q - 1));
                } else if (d.label.type == ClassType::TKa) {
                    emit(T.zexp(2, ch[0], p[0]) + T.zexp(1, ch[1], p[1]), 1);
                    emit(T.zexp(2, ch[0], p[0] * q) + T.zexp(1, ch[1], p[1]), 1);
                }
                break;
            }
            default: {
                if (d.label.type == ClassType::Ta) {
                    emit(T.zexp(3, ch[0], T.lift_dlog(3, p[0])), G / T.tower().group_order(3));
                } else if (d.label.type == ClassType::Tz) {
                    emit(T.zexp(3, ch[0], p[0]), 1);
                    emit(T.zexp(3, ch[0], p[0] * q), 1);
                    emit(T.zexp(3, ch[0], p[0] * q * q), 1);
                }
            }
        }
        values.push_back(CycValue::from_terms(F, std::move(terms)));
    }
    return {cl, F, std::move(values)};
}

ClassFunction InductionEngine::induce_gg(const SubgroupSpec& spec) const {
    if (spec.is_torus()) throw std::invalid_argument("induce_gg needs a ZN, ZN1 or pattern subgroup");
    return induce_bruteforce(spec);
}

ClassFunction InductionEngine::induce(const SubgroupSpec& spec, bool prefer_fast) const {
    if (spec.is_torus() && (prefer_fast || table_->q() > options_.brute_force_max_q)) return induce_torus_fast(spec);
    return induce_bruteforce(spec);
}

std::vector<std::pair<Mat3, std::uint32_t>> InductionEngine::subgroup_elements(const SubgroupSpec& spec) const {
    validate(spec);
    std::vector<std::pair<Mat3, std::uint32_t>> out;
    const std::size_t nb = bin_count(spec.kind);
    for (std::size_t b = 0; b < nb; ++b)
        if (bin_in_subgroup(spec, b)) out.emplace_back(bin_element(spec.kind, b), theta_exponent(spec, b));
    return out;
}

CycValue InductionEngine::restricted_inner(const SubgroupSpec& spec, const ClassFunction& f) const {
    const CyclotomicField& F = table_->field();
    const ConjugacyClasses& cl = table_->classes();
    CycAccumulator acc(F);
    const auto elems = subgroup_elements(spec);
    for (const auto& [h, e] : elems) acc.add_product(CycValue::root(F, e), f[cl.classify_index(h)], 1, true);
    return acc.finish().div_int(static_cast<std::int64_t>(elems.size())).canonical();
}

}  // namespace gl3
