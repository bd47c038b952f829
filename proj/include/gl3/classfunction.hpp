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


#ifndef GL3_CLASSFUNCTION_HPP
#define GL3_CLASSFUNCTION_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "gl3/cyclo.hpp"
#include "gl3/group.hpp"

namespace gl3 {

/// A function on GL(3, F_q) constant on conjugacy classes, stored as one
/// exact value per class of a fixed canonical class list.
class ClassFunction {
   public:
    ClassFunction() = default;
    /// The zero function.
    ClassFunction(const ConjugacyClasses& classes, const CyclotomicField& field);
    ClassFunction(const ConjugacyClasses& classes, const CyclotomicField& field, std::vector<CycValue> values);

    const ConjugacyClasses& classes() const { return *classes_; }
    const CyclotomicField& field() const { return *field_; }
    std::size_t size() const noexcept { return values_.size(); }
    const CycValue& operator[](std::size_t i) const { return values_.at(i); }
    CycValue& operator[](std::size_t i) { return values_.at(i); }
    const std::vector<CycValue>& values() const noexcept { return values_; }

    ClassFunction& operator+=(const ClassFunction& rhs);
    ClassFunction& operator-=(const ClassFunction& rhs);
    /// Pointwise product, the character of the tensor product.
    ClassFunction& operator*=(const ClassFunction& rhs);
    ClassFunction& operator*=(std::int64_t s);
    friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
    friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
    friend ClassFunction operator*(ClassFunction a, const ClassFunction& b) { return a *= b; }
    friend ClassFunction operator*(ClassFunction a, std::int64_t s) { return a *= s; }
    friend ClassFunction operator*(std::int64_t s, ClassFunction a) { return a *= s; }

    ClassFunction conjugate() const;
    /// Every value replaced by its canonical form.
    ClassFunction canonical() const;
    /// Value at the identity class.
    const CycValue& degree() const { return values_.at(0); }

    /// Classes on which the two functions differ.
    std::vector<std::size_t> mismatches(const ClassFunction& other) const;
    bool equals(const ClassFunction& other) const { return mismatches(other).empty(); }

    std::vector<std::complex<double>> to_complex() const;

   private:
    void check_compatible(const ClassFunction& other) const;

    const ConjugacyClasses* classes_ = nullptr;
    const CyclotomicField* field_ = nullptr;
    std::vector<CycValue> values_;
};

/// <f, g> = (1/|G|) sum_t f(t) conj(g(t)), summed class by class.
CycValue inner(const ClassFunction& f, const ClassFunction& g);

}  // namespace gl3

#endif  // GL3_CLASSFUNCTION_HPP
