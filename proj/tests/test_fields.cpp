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

#include <set>
#include <string>
#include <vector>

#include "gl3/fields.hpp"

using namespace gl3;

namespace {

Mat3 mat_mul(const FieldTower& t, const Mat3& a, const Mat3& b) {
    Mat3 c{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Elem s = 0;
            for (int k = 0; k < 3; ++k) s = t.add(s, t.mul(a[3 * i + k], b[3 * k + j]));
            c[3 * i + j] = s;
        }
    return c;
}

}  // namespace

TEST_CASE("prime powers") {
    CHECK(prime_power(2) == std::pair{2, 1});
    CHECK(prime_power(8) == std::pair{2, 3});
    CHECK(prime_power(9) == std::pair{3, 2});
    CHECK_THROWS_AS(prime_power(6), FieldError);
    CHECK_THROWS_AS(prime_power(1), FieldError);
    CHECK(is_prime(13));
    CHECK_FALSE(is_prime(15));
}

TEST_CASE("fingerprints are stable") {
    const std::string f2 = make_tower(2, 1)->fingerprint();
    CHECK(f2 == make_tower(2, 1)->fingerprint());
    CHECK(f2.rfind("p=2;n=1;fq=", 0) == 0);
    CHECK(make_tower(2, 2)->fingerprint().rfind("p=2;n=2;", 0) == 0);
    std::set<std::string> all;
    for (auto [p, n] : {std::pair{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}}) all.insert(make_tower(p, n)->fingerprint());
    CHECK(all.size() == 7);
}

TEST_CASE("tower rejects large q") {
    CHECK_THROWS_AS(make_tower(11, 1), FieldError);
    TowerOptions o;
    o.max_q = 16;
    CHECK(make_tower(11, 1, o)->q() == 11);
}

TEST_CASE("base field axioms") {
    for (auto [p, n] : {std::pair{2, 1}, {3, 1}, {2, 2}, {5, 1}, {2, 3}, {3, 2}}) {
        auto t = make_tower(p, n);
        const int q = t->q();
        CAPTURE(q);
        for (int a = 0; a < q; ++a) {
            CHECK(t->add(static_cast<Elem>(a), t->neg(static_cast<Elem>(a))) == 0);
            if (a) CHECK(t->mul(static_cast<Elem>(a), t->inv(static_cast<Elem>(a))) == 1);
            for (int b = 0; b < q; ++b)
                for (int c = 0; c < q; ++c) {
                    const auto A = static_cast<Elem>(a), B = static_cast<Elem>(b), C = static_cast<Elem>(c);
                    CHECK(t->mul(A, t->add(B, C)) == t->add(t->mul(A, B), t->mul(A, C)));
                }
        }
        std::vector<int> hits(p, 0);
        for (int a = 0; a < q; ++a) ++hits[t->trace(static_cast<Elem>(a))];
        for (int h : hits) CHECK(h == q / p);
    }
}

TEST_CASE("generators, logs and norms") {
    for (auto [p, n] : {std::pair{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}}) {
        auto t = make_tower(p, n);
        CAPTURE(t->q());
        for (int d = 1; d <= 3; ++d) {
            const std::int64_t order = t->group_order(d);
            std::set<std::uint32_t> seen;
            for (std::int64_t k = 0; k < order; ++k) {
                const ExtElement x = t->from_dlog(d, k);
                CHECK(x.dlog() == k);
                seen.insert(x.code());
            }
            CHECK(static_cast<std::int64_t>(seen.size()) == order);
            const ExtElement g = t->generator(d);
            CHECK(t->norm(g) == t->from_dlog(1, t->norm_exponent(d)));
            for (std::int64_t k = 1; k < order; k += 5) {
                const ExtElement x = t->from_dlog(d, k), y = t->from_dlog(d, 3 * k + 1);
                CHECK(t->norm(x * y) == t->norm(x) * t->norm(y));
                CHECK(t->frobenius(x * y, 1) == t->frobenius(x, 1) * t->frobenius(y, 1));
                CHECK(t->frobenius(x, d) == x);
            }
            for (int a = 1; a < t->q(); ++a) CHECK(t->frobenius(t->lift(static_cast<Elem>(a), d), 1) == t->lift(static_cast<Elem>(a), d));
        }
    }
}

TEST_CASE("matrix embeddings are multiplicative") {
    auto t = make_tower(3, 1);
    for (std::int64_t a = 0; a < 26; a += 3)
        for (std::int64_t b = 1; b < 26; b += 7) {
            const ExtElement x = t->from_dlog(3, a), y = t->from_dlog(3, b);
            CHECK(mat_mul(*t, t->embed_cubic(x), t->embed_cubic(y)) == t->embed_cubic(x * y));
        }
    for (std::int64_t a = 0; a < 8; ++a)
        for (Elem c = 1; c < 3; ++c) {
            const ExtElement x = t->from_dlog(2, a), y = t->from_dlog(2, a + 3);
            CHECK(mat_mul(*t, t->embed_quadratic(x, c), t->embed_quadratic(y, c)) == t->embed_quadratic(x * y, t->mul(c, c)));
        }
}
