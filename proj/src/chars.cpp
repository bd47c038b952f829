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

#include "gl3/chars.hpp"

namespace gl3 {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

MultChar::MultChar(const FieldTower& tower, int degree, std::int64_t exponent)
    : tower_(&tower), degree_(degree), exponent_(0) {
    if (degree < 1 || degree > 3) throw FieldError("character degree must be 1, 2 or 3");
    exponent_ = mod(exponent, tower.group_order(degree));
}

Phase MultChar::operator()(const ExtElement& x) const {
    if (x.degree() != degree_) throw FieldError("character evaluated outside its domain");
    return at_dlog(x.dlog());
}

Phase MultChar::at_base(Elem a) const {
    if (degree_ != 1) throw FieldError("at_base needs a character of F_q^x");
    return at_dlog(tower_->dlog1(a));
}

Phase MultChar::at_dlog(std::int64_t k) const {
    const std::int64_t m = order();
    return {mod(exponent_ * mod(k, m), m), m};
}

MultChar MultChar::operator*(const MultChar& other) const {
    if (other.degree_ != degree_ || other.tower_ != tower_) throw FieldError("product of characters on different groups");
    return {*tower_, degree_, exponent_ + other.exponent_};
}

MultChar MultChar::inverse() const { return {*tower_, degree_, -exponent_}; }

MultChar MultChar::pow(std::int64_t k) const { return {*tower_, degree_, mod(exponent_ * mod(k, order()), order())}; }

AddChar::AddChar(const FieldTower& tower, Elem twist) : tower_(&tower), twist_(twist) {
    if (twist >= tower.q()) throw FieldError("additive character twist out of range");
}

Phase AddChar::operator()(Elem x) const { return {tower_->trace(tower_->mul(twist_, x)), tower_->p()}; }

MultChar char_frobenius(const MultChar& chi) {
    return {chi.tower(), chi.degree(), chi.exponent() * chi.tower().q()};
}

MultChar char_restrict(const MultChar& chi) {
    if (chi.degree() == 1) throw FieldError("restriction needs a character of an extension field");
    const FieldTower& t = chi.tower();
    const std::int64_t q1 = t.q() - 1;
    // g1 = g_d^s with s a multiple of (q^d-1)/(q-1); chi(g1) = zeta_{q-1}^{k s / ((q^d-1)/(q-1))}.
    const std::int64_t index = t.group_order(chi.degree()) / q1;
    const std::int64_t s = t.lift(t.exp1(1), chi.degree()).dlog();
    if (s % index != 0) throw FieldError("base-field generator does not lie in the norm-one complement");
    return {t, 1, mod(chi.exponent() * (s / index), q1)};
}

MultChar char_extend(const MultChar& alpha, int degree) {
    if (alpha.degree() != 1) throw FieldError("extension needs a character of F_q^x");
    if (degree == 1) return alpha;
    const FieldTower& t = alpha.tower();
    const std::int64_t q1 = t.q() - 1;
    const MultChar ext{t, degree, mod(alpha.exponent() * t.norm_exponent(degree), q1)};
    if (!(char_restrict(ext) == alpha)) throw FieldError("canonical extension does not restrict back");
    return ext;
}

MultChar char_inflate_norm(const MultChar& alpha, int degree) {
    if (alpha.degree() != 1) throw FieldError("norm inflation needs a character of F_q^x");
    if (degree == 1) return alpha;
    const FieldTower& t = alpha.tower();
    const std::int64_t index = t.group_order(degree) / (t.q() - 1);
    return {t, degree, alpha.exponent() * t.norm_exponent(degree) % (t.q() - 1) * index};
}

}  // namespace gl3
