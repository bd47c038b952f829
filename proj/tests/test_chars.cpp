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

#include "gl3/chars.hpp"

using namespace gl3;

namespace {

bool same_phase(Phase a, Phase b) {
    // a.num/a.den - b.num/b.den is an integer
    const std::int64_t diff = a.num * b.den - b.num * a.den;
    return diff % (a.den * b.den) == 0;
}

}  // namespace

TEST_CASE("multiplicative characters are homomorphisms") {
    for (auto [p, n] : {std::pair{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
        auto t = make_tower(p, n);
        for (int d = 1; d <= 3; ++d) {
            const std::int64_t order = t->group_order(d);
            for (std::int64_t e = 0; e < order; e += std::max<std::int64_t>(1, order / 7)) {
                const MultChar chi(*t, d, e);
                for (std::int64_t k = 0; k < order; k += 3) {
                    const ExtElement x = t->from_dlog(d, k), y = t->from_dlog(d, 2 * k + 1);
                    const Phase px = chi(x), py = chi(y), pxy = chi(x * y);
                    CHECK(same_phase({px.num * py.den + py.num * px.den, px.den * py.den}, pxy));
                    CHECK(same_phase(chi.at_dlog(k), px));
                }
                CHECK((chi * chi.inverse()).is_trivial());
                CHECK(chi.pow(order) == MultChar::trivial(*t, d));
            }
        }
    }
}

TEST_CASE("restriction, extension and norm inflation") {
    for (auto [p, n] : {std::pair{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}}) {
        auto t = make_tower(p, n);
        const int q = t->q();
        for (int a = 0; a < q - 1; ++a) {
            const MultChar alpha(*t, 1, a);
            for (int d = 2; d <= 3; ++d) {
                CHECK(char_restrict(char_extend(alpha, d)) == alpha);
                const MultChar inf = char_inflate_norm(alpha, d);
                CHECK(char_frobenius(inf) == inf);
                for (std::int64_t k = 0; k < t->group_order(d); k += 2) {
                    const ExtElement x = t->from_dlog(d, k);
                    CHECK(same_phase(inf(x), alpha(t->norm(x))));
                }
            }
            for (Elem c = 1; c < q; ++c) CHECK(same_phase(alpha.at_base(c), alpha(t->lift(c, 1))));
        }
        CHECK_THROWS_AS(char_restrict(MultChar(*t, 1, 0)), FieldError);
        CHECK_THROWS_AS(char_extend(MultChar(*t, 2, 1), 3), FieldError);
    }
}

TEST_CASE("frobenius orbits") {
    auto t = make_tower(3, 1);
    const MultChar chi(*t, 3, 1);
    CHECK(char_frobenius(char_frobenius(char_frobenius(chi))) == chi);
    CHECK_FALSE(char_frobenius(chi) == chi);
}

TEST_CASE("additive characters") {
    for (auto [p, n] : {std::pair{2, 1}, {3, 1}, {2, 2}, {5, 1}, {3, 2}}) {
        auto t = make_tower(p, n);
        const int q = t->q();
        for (int tw = 0; tw < q; ++tw) {
            const AddChar psi(*t, static_cast<Elem>(tw));
            std::int64_t trivial_hits = 0;
            for (int x = 0; x < q; ++x) {
                for (int y = 0; y < q; ++y) {
                    const Phase a = psi(static_cast<Elem>(x)), b = psi(static_cast<Elem>(y));
                    CHECK(same_phase({a.num * b.den + b.num * a.den, a.den * b.den}, psi(t->add(static_cast<Elem>(x), static_cast<Elem>(y)))));
                }
                if (same_phase(psi(static_cast<Elem>(x)), {0, 1})) ++trivial_hits;
            }
            CHECK(trivial_hits == (tw == 0 ? q : q / p));
        }
    }
}
