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


#include "gl3/classfunction.hpp"

namespace gl3 {

ClassFunction::ClassFunction(const ConjugacyClasses& classes, const CyclotomicField& field)
    : classes_(&classes), field_(&field), values_(classes.size(), CycValue(field, 0)) {}

ClassFunction::ClassFunction(const ConjugacyClasses& classes, const CyclotomicField& field, std::vector<CycValue> values)
    : classes_(&classes), field_(&field), values_(std::move(values)) {
    if (values_.size() != classes.size()) throw std::invalid_argument("class function has the wrong length");
}

void ClassFunction::check_compatible(const ClassFunction& other) const {
    if (classes_ != other.classes_ || field_ != other.field_)
        throw std::invalid_argument("class functions belong to different groups");
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& rhs) {
    check_compatible(rhs);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += rhs.values_[i];
    return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& rhs) {
    check_compatible(rhs);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= rhs.values_[i];
    return *this;
}

ClassFunction& ClassFunction::operator*=(const ClassFunction& rhs) {
    check_compatible(rhs);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] *= rhs.values_[i];
    return *this;
}

ClassFunction& ClassFunction::operator*=(std::int64_t s) {
    for (auto& v : values_) v *= s;
    return *this;
}

ClassFunction ClassFunction::conjugate() const {
    ClassFunction r = *this;
    for (auto& v : r.values_) v = v.conjugate();
    return r;
}

ClassFunction ClassFunction::canonical() const {
    ClassFunction r = *this;
    for (auto& v : r.values_) v = v.canonical();
    return r;
}

std::vector<std::size_t> ClassFunction::mismatches(const ClassFunction& other) const {
    check_compatible(other);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < values_.size(); ++i)
        if (!(values_[i] - other.values_[i]).is_zero()) out.push_back(i);
    return out;
}

std::vector<std::complex<double>> ClassFunction::to_complex() const {
    std::vector<std::complex<double>> out;
    out.reserve(values_.size());
    for (const auto& v : values_) out.push_back(v.to_complex());
    return out;
}

CycValue inner(const ClassFunction& f, const ClassFunction& g) {
    if (&f.classes() != &g.classes() || &f.field() != &g.field())
        throw std::invalid_argument("inner product of class functions on different groups");
    CycAccumulator acc(f.field());
    const auto& cl = f.classes();
    for (std::size_t i = 0; i < f.size(); ++i) acc.add_product(f[i], g[i], cl[i].size, true);
    return acc.finish().div_int(cl.group_order()).canonical();
}

}  // namespace gl3
