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

#include <sstream>

#include "tensorcat/exactfield.hpp"

namespace tensorcat {

Poly::Poly(Field f, std::vector<Scalar> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) {
    for (const auto& c : c_) require_same_field(f_, c.field());
    trim();
}

Poly Poly::constant(const Scalar& c) { return Poly(c.field(), {c}); }

Poly Poly::monomial(const Scalar& c, std::size_t deg) {
    std::vector<Scalar> v(deg + 1, c.field().zero());
    v[deg] = c;
    return Poly(c.field(), std::move(v));
}

Poly Poly::from_rationals(const Field& f, const std::vector<Rational>& coeffs) {
    std::vector<Scalar> v;
    v.reserve(coeffs.size());
    for (const auto& c : coeffs) v.push_back(f.from_rational(c));
    return Poly(f, std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar Poly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : f_.zero(); }

Scalar Poly::lead() const { return c_.empty() ? f_.zero() : c_.back(); }

Poly Poly::monic() const {
    if (c_.empty()) return *this;
    return *this * lead().inv();
}

Poly Poly::derivative() const {
    std::vector<Scalar> v;
    for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(c_[i] * f_.from_int(static_cast<long>(i)));
    return Poly(f_, std::move(v));
}

Scalar Poly::eval(const Scalar& x) const {
    require_same_field(f_, x.field());
    Scalar r = f_.zero();
    for (std::size_t k = c_.size(); k-- > 0;) r = r * x + c_[k];
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    require_same_field(f_, o.f_);
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), f_.zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    require_same_field(f_, o.f_);
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), f_.zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    require_same_field(a.f_, b.f_);
    if (a.is_zero() || b.is_zero()) return Poly(a.f_);
    std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1, a.f_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(a.f_, std::move(r));
}

Poly Poly::operator*(const Scalar& s) const {
    std::vector<Scalar> v = c_;
    for (auto& x : v) x *= s;
    return Poly(f_, std::move(v));
}

Poly Poly::operator-() const { return *this * (-f_.one()); }

bool operator==(const Poly& a, const Poly& b) {
    require_same_field(a.f_, b.f_);
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        if (a.c_[i] != b.c_[i]) return false;
    return true;
}

std::string Poly::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        if (c_[k].is_zero()) continue;
        std::string c = c_[k].to_string();
        bool compound = c.find(' ') != std::string::npos;
        if (!first) out << " + ";
        first = false;
        if (k == 0) {
            out << (compound ? "(" + c + ")" : c);
            continue;
        }
        if (!c_[k].is_one()) out << (compound ? "(" + c + ")" : c) << "*";
        out << var;
        if (k > 1) out << "^" << k;
    }
    return out.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    require_same_field(a.field(), b.field());
    if (b.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
    const Field& f = a.field();
    std::vector<Scalar> r = a.coeffs();
    const auto& bc = b.coeffs();
    if (r.size() < bc.size()) return {Poly(f), a};
    std::vector<Scalar> q(r.size() - bc.size() + 1, f.zero());
    Scalar lead_inv = b.lead().inv();
    for (std::size_t k = r.size(); k-- >= bc.size();) {
        if (r[k].is_zero()) {
            if (k == 0) break;
            continue;
        }
        std::size_t shift = k + 1 - bc.size();
        Scalar c = r[k] * lead_inv;
        q[shift] = c;
        for (std::size_t i = 0; i < bc.size(); ++i) r[i + shift] -= c * bc[i];
        if (k == 0) break;
    }
    return {Poly(f, std::move(q)), Poly(f, std::move(r))};
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

std::tuple<Poly, Poly, Poly> ext_gcd(const Poly& a, const Poly& b) {
    const Field& f = a.field();
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(f.one()), s1(f);
    Poly t0(f), t1 = Poly::constant(f.one());
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        Poly s = s0 - q * s1;
        Poly t = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
        t0 = std::move(t1);
        t1 = std::move(t);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Scalar c = r0.lead().inv();
    return {r0 * c, s0 * c, t0 * c};
}

Poly powmod(const Poly& base, const Integer& e, const Poly& mod) {
    Poly result = Poly::constant(base.field().one()) % mod;
    Poly b = base % mod;
    Integer k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) result = (result * b) % mod;
        k >>= 1;
        if (k > 0) b = (b * b) % mod;
    }
    return result;
}

}  // namespace tensorcat
