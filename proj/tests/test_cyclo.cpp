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

#include <cmath>
#include <complex>
#include <numeric>
#include <random>

#include "gl3/cyclo.hpp"

using namespace gl3;

namespace {

std::complex<double> eval_root(std::int64_t m, std::int64_t k) {
    const double a = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(m);
    return {std::cos(a), std::sin(a)};
}

CycValue random_value(const CyclotomicField& f, std::mt19937_64& rng) {
    std::vector<CycValue::Term> terms;
    const int n = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < n; ++i)
        terms.push_back({static_cast<std::uint32_t>(rng() % f.modulus()), static_cast<std::int64_t>(rng() % 7) - 3});
    return CycValue::from_terms(f, terms);
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<std::int64_t>{-1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<std::int64_t>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<std::int64_t>{1, -1, 1});
    const auto p105 = cyclotomic_polynomial(105);
    CHECK(p105.size() == 49);
    CHECK(std::find(p105.begin(), p105.end(), -2) != p105.end());
    for (std::int64_t n : {1, 2, 12, 30, 36, 105, 168})
        CHECK(static_cast<std::int64_t>(cyclotomic_polynomial(n).size()) == euler_phi(n) + 1);
}

TEST_CASE("roots of unity relations") {
    CyclotomicField f(12);
    CycValue sum(f, 0);
    for (int k = 0; k < 12; ++k) sum += CycValue::root(f, k);
    CHECK(sum.is_zero());
    CHECK(CycValue::root(f, 3) * CycValue::root(f, 3) == CycValue(f, -1));
    CHECK(CycValue::phase(f, {1, 4}) == CycValue::root(f, 3));
    CHECK_THROWS_AS(f.exponent({1, 5}), ArithmeticError);
    const CycValue sqrt3 = CycValue::root(f, 1) + CycValue::root(f, 11);
    CHECK(sqrt3 * sqrt3 == CycValue(f, 3));
    CHECK_FALSE(sqrt3.rational_integer().has_value());
    CHECK((sqrt3 * sqrt3).rational_integer() == 3);
}

TEST_CASE("exact arithmetic agrees with complex evaluation") {
    for (std::int64_t m : {7, 24, 105, 168}) {
        CyclotomicField f(m);
        std::mt19937_64 rng(static_cast<std::uint64_t>(m));
        for (int i = 0; i < 40; ++i) {
            const CycValue a = random_value(f, rng), b = random_value(f, rng);
            std::complex<double> za, zb;
            for (const auto& t : a.terms()) za += static_cast<double>(t.coeff) * eval_root(m, t.exp);
            for (const auto& t : b.terms()) zb += static_cast<double>(t.coeff) * eval_root(m, t.exp);
            CHECK(std::abs((a * b).to_complex() - za * zb) < 1e-9);
            CHECK(std::abs((a + b).canonical().to_complex() - (za + zb)) < 1e-9);
            CHECK(std::abs(a.conjugate().to_complex() - std::conj(za)) < 1e-9);
            CHECK((a * b - b * a).is_zero());
            CHECK(a * (b + a) == a * b + a * a);
        }
    }
}

TEST_CASE("division and accumulation") {
    CyclotomicField f(24);
    const CycValue x = CycValue::root(f, 5) * 6 + CycValue(f, 12);
    CHECK(x.exact_div_int(6) == CycValue::root(f, 5) + CycValue(f, 2));
    CHECK_THROWS_AS(x.exact_div_int(5), ArithmeticError);
    CHECK(x.div_int(4) * 4 == x);
    CHECK(CycValue(f, 3).div_int(2).denominator() == 2);

    CycAccumulator acc(f);
    CycValue direct(f, 0);
    for (int k = 0; k < 24; k += 5) {
        const CycValue a = CycValue::root(f, k), b = CycValue::root(f, 2 * k + 1);
        acc.add_product(a, b, 3, true);
        direct += 3 * (a * b.conjugate());
    }
    acc.add(CycValue(f, 1).div_int(3));
    direct += CycValue(f, 1).div_int(3);
    CHECK(acc.finish() == direct);
}
