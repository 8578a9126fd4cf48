/*
   Copyright 2026 The tensorcat Authors

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

#include <cmath>

#include "tensorcat/exactfield.hpp"

namespace tensorcat {

Embedding::Embedding(Field src, Field dst, Scalar image_of_generator)
    : src_(std::move(src)), dst_(std::move(dst)), img_(std::move(image_of_generator)) {
    if (src_.characteristic() != dst_.characteristic())
        fail(ErrorKind::NotAnEmbedding, "fields of different characteristic");
    require_same_field(dst_, img_.field());
    if (src_.is_prime_field()) {
        if (!img_.is_one()) fail(ErrorKind::NotAnEmbedding, "a prime field embeds only via 1 -> 1");
        return;
    }
    Poly m = Poly::from_rationals(dst_, src_.minpoly());
    if (!m.eval(img_).is_zero())
        fail(ErrorKind::NotAnEmbedding,
             img_.to_string() + " is not a root of " + m.to_string() + " in " + dst_.describe());
}

Scalar Embedding::operator()(const Scalar& x) const {
    require_same_field(src_, x.field());
    Scalar r = dst_.zero();
    Scalar pw = dst_.one();
    for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
        if (x.coeffs()[i] != 0) r += pw * dst_.from_rational(x.coeffs()[i]);
        if (i + 1 < x.coeffs().size()) pw *= img_;
    }
    return r;
}

Matrix Embedding::operator()(const Matrix& m) const {
    Matrix r(dst_, m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = (*this)(m(i, j));
    return r;
}

namespace {

int sign_at(const Poly& p, const Scalar& x) {
    Scalar v = p.eval(x);
    if (v.is_zero()) return 0;
    return v.coeffs()[0] > 0 ? 1 : -1;
}

int sign_changes(const std::vector<Poly>& chain, const Scalar& x) {
    int changes = 0, last = 0;
    for (const auto& p : chain) {
        int s = sign_at(p, x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

}  // namespace

std::optional<double> approximate(const Scalar& s) {
    const Field& k = s.field();
    if (k.is_finite()) return std::nullopt;
    if (k.is_prime_field()) return s.coeffs()[0].get_d();
    const Field q = k.prime_field();
    Poly m = Poly::from_rationals(q, k.minpoly());
    std::vector<Poly> chain{m, m.derivative()};
    while (chain.back().degree() > 0) {
        Poly r = chain[chain.size() - 2] % chain.back();
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    Rational bound = 1;
    for (const auto& c : m.coeffs()) bound += abs(c.coeffs()[0]);
    Scalar lo = q.from_rational(-bound), hi = q.from_rational(bound);
    const int top = sign_changes(chain, hi);
    if (sign_changes(chain, lo) == top) return std::nullopt;
    // Largest real root lies in (lo, hi] with no root above hi.
    for (int it = 0; it < 80; ++it) {
        Scalar mid = (lo + hi) * q.from_rational(Rational(1, 2));
        if (sign_changes(chain, mid) > top)
            lo = mid;
        else
            hi = mid;
    }
    double r = ((lo + hi) * q.from_rational(Rational(1, 2))).coeffs()[0].get_d();
    double v = 0, pw = 1;
    for (const auto& c : s.coeffs()) {
        v += c.get_d() * pw;
        pw *= r;
    }
    return v;
}

}  // namespace tensorcat
