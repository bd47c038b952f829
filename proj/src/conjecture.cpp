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


#include "gl3/conjecture.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "gl3/chars.hpp"

namespace gl3 {

namespace {

std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

std::int64_t gl_order(int n, std::int64_t q) {
    std::int64_t r = 1;
    for (int k = 0; k < n; ++k) r *= ipow(q, n) - ipow(q, k);
    return r;
}

// Calls fn(indices) for every k-subset of [0, n) in lexicographic order.
template <class Fn>
void for_each_combination(int n, int k, Fn&& fn) {
    if (k > n || k < 0) return;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        if (!fn(idx)) return;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

}  // namespace

std::vector<std::int64_t> coefficients(int n) {
    if (n < 3) throw std::invalid_argument("coefficients need n >= 3");
    std::vector<std::int64_t> poly{1};
    for (int k = 1; k <= n - 2; ++k) {
        std::vector<std::int64_t> next(poly.size() + static_cast<std::size_t>(k), 0);
        for (std::size_t i = 0; i < poly.size(); ++i)
            for (int j = 0; j <= k; ++j) next[i + static_cast<std::size_t>(j)] += poly[i];
        poly = std::move(next);
    }
    return poly;
}

int family_depth(int n) { return (n - 2) * (n - 1) / 2; }

bool UnipotentPattern::is_subgroup() const {
    const std::set<Position> z(zeroed.begin(), zeroed.end());
    for (auto [i, j] : zeroed)
        for (int k = i + 1; k < j; ++k)
            if (!z.count({i, k}) && !z.count({k, j})) return false;
    return true;
}

std::string to_string(const UnipotentPattern& p) {
    std::string s = "{";
    for (std::size_t i = 0; i < p.zeroed.size(); ++i)
        s += (i ? "," : "") + std::string("(") + std::to_string(p.zeroed[i].first) + "," + std::to_string(p.zeroed[i].second) + ")";
    return s + "}";
}

std::vector<Position> upper_positions(int n) {
    std::vector<Position> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) out.emplace_back(i, j);
    return out;
}

std::vector<UnipotentPattern> enumerate_patterns(int n, int i) {
    if (n < 2) throw std::invalid_argument("patterns need n >= 2");
    const auto pos = upper_positions(n);
    if (binomial(static_cast<int>(pos.size()), i) > 5000000) throw std::invalid_argument("too many candidate patterns");
    std::vector<UnipotentPattern> out;
    for_each_combination(static_cast<int>(pos.size()), i, [&](const std::vector<int>& idx) {
        UnipotentPattern p{n, {}};
        for (int k : idx) p.zeroed.push_back(pos[static_cast<std::size_t>(k)]);
        if (p.is_subgroup()) out.push_back(std::move(p));
        return true;
    });
    return out;
}

bool literal_closure(const UnipotentPattern& p, const FieldTower& t) {
    const int n = p.n;
    const std::set<Position> z(p.zeroed.begin(), p.zeroed.end());
    std::vector<Position> free;
    for (const auto& ps : upper_positions(n))
        if (!z.count(ps)) free.push_back(ps);
    const std::int64_t q = t.q();
    const std::int64_t count = ipow(q, static_cast<int>(free.size()));
    if (count > 4096) throw std::invalid_argument("pattern subgroup too large for literal closure");
    auto element = [&](std::int64_t code) {
        std::vector<Elem> u(static_cast<std::size_t>(n * n), 0);
        for (const auto& [i, j] : free) {
            u[static_cast<std::size_t>((i - 1) * n + (j - 1))] = static_cast<Elem>(code % q);
            code /= q;
        }
        return u;
    };
    std::vector<std::vector<Elem>> elems;
    for (std::int64_t c = 0; c < count; ++c) elems.push_back(element(c));
    for (const auto& u : elems)
        for (const auto& v : elems)
            for (const auto& [i, j] : p.zeroed) {
                Elem s = t.add(u[static_cast<std::size_t>((i - 1) * n + (j - 1))], v[static_cast<std::size_t>((i - 1) * n + (j - 1))]);
                for (int k = i + 1; k < j; ++k)
                    s = t.add(s, t.mul(u[static_cast<std::size_t>((i - 1) * n + (k - 1))], v[static_cast<std::size_t>((k - 1) * n + (j - 1))]));
                if (s != 0) return false;
            }
    return true;
}

std::string to_string(const InterpolatingFamily& f) {
    std::string s = "[";
    for (std::size_t i = 0; i < f.packets.size(); ++i) {
        s += i ? ",[" : "[";
        for (std::size_t k = 0; k < f.packets[i].size(); ++k) s += (k ? "," : "") + to_string(f.packets[i][k]);
        s += "]";
    }
    return s + "]";
}

void validate_family(const InterpolatingFamily& f) {
    if (f.n < 3) throw std::invalid_argument("families need n >= 3");
    const auto c = coefficients(f.n);
    if (f.packets.size() != c.size())
        throw std::invalid_argument("family needs " + std::to_string(c.size()) + " packets, got " + std::to_string(f.packets.size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
        const auto& packet = f.packets[i];
        if (static_cast<std::int64_t>(packet.size()) != c[i])
            throw std::invalid_argument("packet " + std::to_string(i) + " needs " + std::to_string(c[i]) + " patterns");
        std::set<UnipotentPattern> seen;
        for (const auto& p : packet) {
            if (p.n != f.n) throw std::invalid_argument("pattern size differs from the family");
            if (p.zeroed.size() != i) throw std::invalid_argument("pattern " + to_string(p) + " in packet " + std::to_string(i));
            for (auto [a, b] : p.zeroed)
                if (a < 1 || b > f.n || a >= b) throw std::invalid_argument("position outside the strict upper triangle");
            if (!std::is_sorted(p.zeroed.begin(), p.zeroed.end()) ||
                std::adjacent_find(p.zeroed.begin(), p.zeroed.end()) != p.zeroed.end())
                throw std::invalid_argument("pattern positions must be sorted and distinct");
            if (!p.is_subgroup()) throw std::invalid_argument("pattern " + to_string(p) + " is not a subgroup");
            if (!seen.insert(p).second) throw std::invalid_argument("repeated pattern " + to_string(p));
        }
    }
}

std::vector<InterpolatingFamily> enumerate_families(int n, std::size_t limit) {
    const auto c = coefficients(n);
    std::vector<std::vector<std::vector<UnipotentPattern>>> choices(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        const auto cand = enumerate_patterns(n, static_cast<int>(i));
        for_each_combination(static_cast<int>(cand.size()), static_cast<int>(c[i]), [&](const std::vector<int>& idx) {
            std::vector<UnipotentPattern> packet;
            for (int k : idx) packet.push_back(cand[static_cast<std::size_t>(k)]);
            choices[i].push_back(std::move(packet));
            return choices[i].size() < limit;
        });
        if (choices[i].empty()) return {};
    }
    std::vector<InterpolatingFamily> out;
    std::vector<std::size_t> pick(c.size(), 0);
    while (out.size() < limit) {
        InterpolatingFamily f{n, {}};
        for (std::size_t i = 0; i < c.size(); ++i) f.packets.push_back(choices[i][pick[i]]);
        out.push_back(std::move(f));
        std::size_t i = c.size();
        while (i-- > 0) {
            if (++pick[i] < choices[i].size()) break;
            pick[i] = 0;
        }
        if (i == static_cast<std::size_t>(-1)) break;
    }
    return out;
}

std::int64_t family_degree(const InterpolatingFamily& f, std::int64_t q) {
    const std::int64_t g = gl_order(f.n, q);
    const int top = f.n * (f.n - 1) / 2;
    std::int64_t sum = 0;
    for (const auto& packet : f.packets)
        for (const auto& p : packet) sum += g / ((q - 1) * ipow(q, top - static_cast<int>(p.zeroed.size())));
    return sum;
}

std::int64_t tensor_degree(int n, std::int64_t q) {
    std::int64_t cusp = 1, principal = 1;
    for (int k = 1; k < n; ++k) cusp *= ipow(q, k) - 1;
    for (int k = 1; k <= n; ++k) principal *= ipow(q, k) - 1;
    return cusp * (principal / ipow(q - 1, n));
}

FamilyCheck check_family_n3(const Context& ctx, const InterpolatingFamily& family, const SweepOptions& options) {
    if (family.n != 3) throw std::invalid_argument("the identity check is implemented for n = 3 only");
    validate_family(family);
    FamilyCheck out;
    out.family = family;
    const int q = ctx.q();
    out.degree_ok = family_degree(family, q) == tensor_degree(3, q);
    out.report.name = "conjecture:" + to_string(family);
    out.report.q = q;
    if (!out.degree_ok) {
        out.report.notes.push_back("degree mismatch: family " + std::to_string(family_degree(family, q)) + ", tensor product " +
                                   std::to_string(tensor_degree(3, q)));
        return out;
    }
    const CharacterTable& tab = ctx.table();
    const FieldTower& tower = ctx.tower();
    auto central = [&](const Tuple& t) {
        const std::int64_t r = char_restrict(MultChar(tower, 3, t[0])).exponent();
        return (r + t[1] + t[2] + t[3]) % (q - 1);
    };
    auto build = [&](const Tuple& t) {
        std::vector<Identity> ids;
        for (int c = 1; c < q; ++c) {
            Identity id;
            id.tag = "twist=" + std::to_string(c);
            id.lhs = {Term{1, {Factor::label({Family::Cusp, {t[0], 0, 0}}), Factor::label({Family::Pabc, {t[1], t[2], t[3]}})}}};
            for (const auto& packet : family.packets)
                for (const auto& p : packet)
                    id.rhs.push_back(Term{1, {Factor::induced(SubgroupSpec::pattern(central(t), static_cast<Elem>(c), p.zeroed))}});
            ids.push_back(std::move(id));
        }
        return ids;
    };
    SweepOptions opts = options;
    if (opts.explicit_tuples.empty())
        for (const IrrLabel& l : tab.all_irreducibles()) {
            if (l.family != Family::Cusp) continue;
            for (std::int64_t b = 0; b < q - 1; ++b)
                for (std::int64_t g = b + 1; g < q - 1; ++g)
                    for (std::int64_t d = g + 1; d < q - 1; ++d) opts.explicit_tuples.push_back({l.params[0], b, g, d});
        }
    const std::string name = out.report.name;
    out.report = verify_identity(ctx, name, {3, 1, 1, 1}, build, opts);
    out.report.tuple_space = opts.explicit_tuples.size();
    return out;
}

std::vector<FamilyCheck> search_families_n3(const Context& ctx, const SweepOptions& options) {
    std::vector<FamilyCheck> out;
    for (const auto& f : enumerate_families(3)) out.push_back(check_family_n3(ctx, f, options));
    return out;
}

// ---- GL(n, 2)

GLn2::GLn2(int n) : n_(n) {
    if (n < 2 || n > 4) throw std::invalid_argument("GL(n, 2) enumeration supports 2 <= n <= 4");
    const std::uint32_t total = 1u << (4 * n);
    class_of_.assign(total, -1);
    auto rank = [&](std::uint16_t m) {
        std::vector<int> r;
        for (int i = 0; i < n; ++i) r.push_back((m >> (4 * i)) & 0xF);
        int rk = 0;
        for (int bit = 0; bit < n; ++bit) {
            int piv = -1;
            for (int i = rk; i < n; ++i)
                if (r[i] >> bit & 1) piv = i;
            if (piv < 0) continue;
            std::swap(r[rk], r[piv]);
            for (int i = 0; i < n; ++i)
                if (i != rk && (r[i] >> bit & 1)) r[i] ^= r[rk];
            ++rk;
        }
        return rk;
    };
    for (std::uint32_t m = 0; m < total; ++m) {
        bool fits = true;
        for (int i = 0; i < n; ++i)
            if ((m >> (4 * i)) & (0xF & ~((1u << n) - 1))) fits = false;
        if (fits && rank(static_cast<std::uint16_t>(m)) == n) elements_.push_back(static_cast<std::uint16_t>(m));
    }
    // Conjugation orbits under the elementary transvections, which generate GL(n, 2).
    std::vector<std::pair<std::uint16_t, std::uint16_t>> gens;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) {
                std::uint16_t e = 0;
                for (int r = 0; r < n; ++r) e |= static_cast<std::uint16_t>(1u << r) << (4 * r);
                e ^= static_cast<std::uint16_t>(1u << j) << (4 * i);
                gens.emplace_back(e, e);  // transvections over F_2 are involutions
            }
    std::uint16_t identity = 0;
    for (int r = 0; r < n; ++r) identity |= static_cast<std::uint16_t>(1u << r) << (4 * r);
    std::vector<std::uint16_t> order{identity};
    order.insert(order.end(), elements_.begin(), elements_.end());
    for (std::uint16_t g : order) {
        if (class_of_[g] >= 0) continue;
        const auto id = static_cast<std::int32_t>(classes_.size());
        std::deque<std::uint16_t> queue{g};
        class_of_[g] = id;
        std::int64_t size = 0;
        while (!queue.empty()) {
            const std::uint16_t x = queue.front();
            queue.pop_front();
            ++size;
            for (auto [e, einv] : gens) {
                const std::uint16_t y = mul(mul(e, x), einv);
                if (class_of_[y] < 0) {
                    class_of_[y] = id;
                    queue.push_back(y);
                }
            }
        }
        classes_.push_back({g, size});
    }
}

std::uint16_t GLn2::mul(std::uint16_t a, std::uint16_t b) const {
    std::uint16_t out = 0;
    for (int i = 0; i < n_; ++i) {
        const int row = (a >> (4 * i)) & 0xF;
        int acc = 0;
        for (int k = 0; k < n_; ++k)
            if (row >> k & 1) acc ^= (b >> (4 * k)) & 0xF;
        out |= static_cast<std::uint16_t>(acc << (4 * i));
    }
    return out;
}

std::vector<std::vector<int>> GLn2::rows(std::uint16_t m) const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(n_), std::vector<int>(static_cast<std::size_t>(n_)));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) out[i][j] = (m >> (4 * i + j)) & 1;
    return out;
}

std::vector<std::int64_t> GLn2::induce(const UnipotentPattern& p) const {
    if (p.n != n_) throw std::invalid_argument("pattern size differs from the group");
    if (!p.is_subgroup()) throw std::invalid_argument("pattern " + to_string(p) + " is not a subgroup");
    const std::set<Position> z(p.zeroed.begin(), p.zeroed.end());
    std::vector<Position> free;
    for (const auto& ps : upper_positions(n_))
        if (!z.count(ps)) free.push_back(ps);
    // Ind value at class c: |C(r)| / |H| * sum over h in H with h in c of theta(h).
    std::vector<std::int64_t> sums(classes_.size(), 0);
    const std::uint32_t count = 1u << free.size();
    for (std::uint32_t code = 0; code < count; ++code) {
        std::uint16_t m = 0;
        for (int i = 0; i < n_; ++i) m |= static_cast<std::uint16_t>(1u << i) << (4 * i);
        int super = 0;
        for (std::size_t k = 0; k < free.size(); ++k)
            if (code >> k & 1) {
                const auto [i, j] = free[k];
                m |= static_cast<std::uint16_t>(1u << (j - 1)) << (4 * (i - 1));
                if (j == i + 1) ++super;
            }
        sums[static_cast<std::size_t>(class_of_[m])] += (super % 2) ? -1 : 1;
    }
    std::vector<std::int64_t> out(classes_.size());
    for (std::size_t c = 0; c < classes_.size(); ++c) {
        const std::int64_t num = order() / classes_[c].size * sums[c];
        if (num % count != 0) throw std::logic_error("induced character value is not an integer");
        out[c] = num / static_cast<std::int64_t>(count);
    }
    return out;
}

std::vector<std::int64_t> GLn2::induce(const InterpolatingFamily& f) const {
    validate_family(f);
    std::vector<std::int64_t> out(classes_.size(), 0);
    for (const auto& packet : f.packets)
        for (const auto& p : packet) {
            const auto v = induce(p);
            for (std::size_t c = 0; c < v.size(); ++c) out[c] += v[c];
        }
    return out;
}

}  // namespace gl3
