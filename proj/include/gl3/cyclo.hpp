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

#ifndef GL3_CYCLO_HPP
#define GL3_CYCLO_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gl3 {

/// exp(2 pi i num / den).
struct Phase {
    std::int64_t num = 0;
    std::int64_t den = 1;
};

class ArithmeticError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// Q(zeta_M) presented as Q[x]/(Phi_M).  Holds Phi_M and a table of the
/// complex roots of unity used by the floating-point backend.
class CyclotomicField {
   public:
    explicit CyclotomicField(std::int64_t modulus);

    std::int64_t modulus() const noexcept { return modulus_; }
    /// phi(M) = deg Phi_M.
    std::int64_t degree() const noexcept { return degree_; }
    /// Dense coefficients of Phi_M, low degree first, length degree()+1.
    const std::vector<std::int64_t>& polynomial() const noexcept { return poly_; }
    /// Exponent k with zeta_M^k equal to the given phase; throws when the
    /// phase's order does not divide M.
    std::uint32_t exponent(Phase ph) const;
    std::complex<double> root(std::uint32_t k) const { return roots_[k]; }

    /// Reduces a dense vector indexed by exponents (length >= degree) modulo
    /// Phi_M in place and returns the first degree() entries.
    void reduce(std::vector<__int128>& dense) const;

   private:
    std::int64_t modulus_;
    std::int64_t degree_;
    std::vector<std::int64_t> poly_;
    std::vector<std::pair<std::int64_t, std::int64_t>> tail_;  // nonzero (j, c_j), j < degree
    std::vector<std::complex<double>> roots_;
};

/// Phi_n by recursive division of x^n - 1 by the lower cyclotomic polynomials.
std::vector<std::int64_t> cyclotomic_polynomial(std::int64_t n);
std::int64_t euler_phi(std::int64_t n);

/// Exact element of Q(zeta_M): a sparse combination sum c_k zeta_M^k with a
/// common positive denominator.  The sparse form is not unique; canonical()
/// gives the remainder modulo Phi_M, on which equality is decided.
class CycValue {
   public:
    struct Term {
        std::uint32_t exp;
        std::int64_t coeff;
        friend bool operator==(const Term&, const Term&) = default;
    };

    CycValue() = default;
    CycValue(const CyclotomicField& field, std::int64_t n);

    static CycValue root(const CyclotomicField& field, std::int64_t k);
    /// sum coeff * zeta_M^exp over the given terms, divided by den.
    static CycValue from_terms(const CyclotomicField& field, std::vector<Term> terms, std::int64_t den = 1);
    static CycValue phase(const CyclotomicField& field, Phase ph) { return root(field, field.exponent(ph)); }

    const CyclotomicField* field() const noexcept { return field_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::int64_t denominator() const noexcept { return den_; }

    CycValue& operator+=(const CycValue& rhs);
    CycValue& operator-=(const CycValue& rhs);
    CycValue& operator*=(const CycValue& rhs);
    CycValue& operator*=(std::int64_t s);
    CycValue operator-() const;
    friend CycValue operator+(CycValue a, const CycValue& b) { return a += b; }
    friend CycValue operator-(CycValue a, const CycValue& b) { return a -= b; }
    friend CycValue operator*(const CycValue& a, const CycValue& b);
    friend CycValue operator*(CycValue a, std::int64_t s) { return a *= s; }
    friend CycValue operator*(std::int64_t s, CycValue a) { return a *= s; }

    /// Complex conjugation, zeta^k -> zeta^{M-k}.
    CycValue conjugate() const;
    /// Remainder modulo Phi_M with the denominator reduced to lowest terms.
    CycValue canonical() const;
    bool is_zero() const;
    friend bool operator==(const CycValue& a, const CycValue& b) { return (a - b).is_zero(); }

    /// The value as a rational integer, if it is one.
    std::optional<std::int64_t> rational_integer() const;
    /// Exact division of every canonical coefficient by n; throws
    /// ArithmeticError when some coefficient is not divisible.
    CycValue exact_div_int(std::int64_t n) const;
    /// Division by a nonzero integer, producing rational coefficients.
    CycValue div_int(std::int64_t n) const;
    std::complex<double> to_complex() const;

   private:
    friend class CycAccumulator;
    void compact();
    void adopt(const CycValue& other);

    const CyclotomicField* field_ = nullptr;
    std::vector<Term> terms_;
    std::int64_t den_ = 1;
};

/// Dense accumulator for sums of many products, reduced once at the end.
class CycAccumulator {
   public:
    explicit CycAccumulator(const CyclotomicField& field);
    void add(const CycValue& v, std::int64_t scale = 1);
    /// Adds scale * a * conj(b) when conjugate_b, else scale * a * b.
    void add_product(const CycValue& a, const CycValue& b, std::int64_t scale, bool conjugate_b);
    CycValue finish() const;

   private:
    void rescale_to(std::int64_t den);

    const CyclotomicField* field_;
    std::vector<__int128> dense_;
    std::int64_t den_ = 1;
};

}  // namespace gl3

#endif  // GL3_CYCLO_HPP
