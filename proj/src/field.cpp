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

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::NotAnEmbedding: return "NotAnEmbedding";
        case ErrorKind::InvalidField: return "InvalidField";
        case ErrorKind::DegreeTooLarge: return "DegreeTooLarge";
        case ErrorKind::ShapeMismatch: return "ShapeMismatch";
        case ErrorKind::ValidationFailure: return "ValidationFailure";
        case ErrorKind::SnakeUnsolvable: return "SnakeUnsolvable";
        case ErrorKind::CocycleObstruction: return "CocycleObstruction";
        case ErrorKind::NotSemisimple: return "NotSemisimple";
        case ErrorKind::UnsupportedField: return "UnsupportedField";
        case ErrorKind::SeparatingElementNotFound: return "SeparatingElementNotFound";
        case ErrorKind::PreconditionViolated: return "PreconditionViolated";
        case ErrorKind::NotFusion: return "NotFusion";
        case ErrorKind::InseparableExtension: return "InseparableExtension";
        case ErrorKind::Reducible: return "Reducible";
        case ErrorKind::UnknownEntry: return "UnknownEntry";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::OracleDisagreement: return "OracleDisagreement";
    }
    return "Unknown";
}

namespace detail {

struct FieldData {
    unsigned long p = 0;
    std::vector<Rational> minpoly;  // monic, low-to-high; empty for prime fields
    std::string gen = "a";

    std::size_t degree() const { return minpoly.empty() ? 1 : minpoly.size() - 1; }

    void norm(Rational& v) const {
        if (p == 0) {
            v.canonicalize();
            return;
        }
        Integer m(static_cast<unsigned long>(p));
        Integer num = v.get_num() % m;
        Integer den = v.get_den() % m;
        if (num < 0) num += m;
        if (den < 0) den += m;
        if (den == 0) fail(ErrorKind::DivisionByZero, "denominator divisible by the characteristic");
        if (den != 1) {
            Integer inv;
            mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
            num = (num * inv) % m;
        }
        v = Rational(num);
    }

    Rational inv(const Rational& v) const {
        if (v == 0) fail(ErrorKind::DivisionByZero, "inverse of zero");
        Rational r = 1 / v;
        norm(r);
        return r;
    }
};

}  // namespace detail

namespace {

using PV = std::vector<Rational>;  // prime-field polynomial, low-to-high

void trim(PV& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PV pmul(const detail::FieldData& d, const PV& a, const PV& b) {
    if (a.empty() || b.empty()) return {};
    PV r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    for (auto& x : r) d.norm(x);
    trim(r);
    return r;
}

PV psub(const detail::FieldData& d, const PV& a, const PV& b) {
    PV r(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    for (auto& x : r) d.norm(x);
    trim(r);
    return r;
}

// (q, r) with a = q b + r over the prime field.
std::pair<PV, PV> pdivmod(const detail::FieldData& d, PV a, const PV& b) {
    trim(a);
    PV q;
    if (a.size() < b.size()) return {q, a};
    q.assign(a.size() - b.size() + 1, Rational(0));
    Rational lead_inv = d.inv(b.back());
    while (!a.empty() && a.size() >= b.size()) {
        std::size_t shift = a.size() - b.size();
        Rational c = a.back() * lead_inv;
        d.norm(c);
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) {
            a[i + shift] -= c * b[i];
            d.norm(a[i + shift]);
        }
        trim(a);
    }
    trim(q);
    return {q, a};
}

// Reduce a polynomial modulo the monic minimal polynomial.
void reduce_mod_minpoly(const detail::FieldData& d, PV& a) {
    const std::size_t deg = d.degree();
    if (d.minpoly.empty()) return;
    for (std::size_t k = a.size(); k-- > deg;) {
        if (a[k] == 0) continue;
        Rational c = a[k];
        for (std::size_t i = 0; i < deg; ++i) {
            a[k - deg + i] -= c * d.minpoly[i];
            d.norm(a[k - deg + i]);
        }
        a[k] = 0;
    }
    trim(a);
}

}  // namespace

Field Field::rationals() {
    auto d = std::make_shared<detail::FieldData>();
    return Field(d);
}

Field Field::prime(unsigned long p) {
    if (p < 2) fail(ErrorKind::InvalidField, "characteristic must be 0 or prime");
    for (unsigned long q = 2; q * q <= p; ++q)
        if (p % q == 0) fail(ErrorKind::InvalidField, "characteristic " + std::to_string(p) + " is not prime");
    auto d = std::make_shared<detail::FieldData>();
    d->p = p;
    return Field(d);
}

Field Field::extension(unsigned long characteristic, std::vector<Rational> minpoly, std::string generator) {
    Field base = characteristic == 0 ? rationals() : prime(characteristic);
    auto d = std::make_shared<detail::FieldData>();
    d->p = characteristic;
    d->gen = std::move(generator);
    for (auto& c : minpoly) d->norm(c);
    trim(minpoly);
    if (minpoly.size() < 2) fail(ErrorKind::InvalidField, "minimal polynomial must have degree >= 1");
    if (minpoly.back() != 1) fail(ErrorKind::InvalidField, "minimal polynomial must be monic");
    if (minpoly.size() == 2) return base;  // degree one: the prime field itself
    Poly f = Poly::from_rationals(base, minpoly);
    if (!is_irreducible(f))
        fail(ErrorKind::InvalidField, "minimal polynomial " + f.to_string() + " is reducible");
    d->minpoly = std::move(minpoly);
    return Field(d);
}

unsigned long Field::characteristic() const noexcept { return d_->p; }
std::size_t Field::degree() const noexcept { return d_->degree(); }
const std::vector<Rational>& Field::minpoly() const noexcept { return d_->minpoly; }
const std::string& Field::generator_name() const noexcept { return d_->gen; }

Field Field::prime_field() const {
    if (is_prime_field()) return *this;
    return d_->p == 0 ? rationals() : prime(d_->p);
}

Integer Field::order() const {
    if (d_->p == 0) return 0;
    Integer q;
    mpz_ui_pow_ui(q.get_mpz_t(), d_->p, degree());
    return q;
}

Scalar Field::zero() const { return Scalar(*this, {}); }
Scalar Field::one() const { return Scalar(*this, {Rational(1)}); }
Scalar Field::from_int(long v) const { return Scalar(*this, {Rational(v)}); }
Scalar Field::from_rational(const Rational& v) const { return Scalar(*this, {v}); }
Scalar Field::generator() const {
    if (is_prime_field()) return one();
    return Scalar(*this, {Rational(0), Rational(1)});
}

Rational Field::reduce(const Rational& v) const {
    Rational r = v;
    d_->norm(r);
    return r;
}

std::string Field::describe() const {
    std::string base = d_->p == 0 ? "Q" : "F_" + std::to_string(d_->p);
    if (is_prime_field()) return base;
    Poly f = Poly::from_rationals(prime_field(), d_->minpoly);
    return base + "[" + d_->gen + "]/(" + f.to_string(d_->gen) + ")";
}

bool operator==(const Field& a, const Field& b) noexcept {
    if (a.d_ == b.d_) return true;
    return a.d_->p == b.d_->p && a.d_->minpoly == b.d_->minpoly;
}

void require_same_field(const Field& a, const Field& b) {
    if (a != b) fail(ErrorKind::FieldMismatch, "operands over " + a.describe() + " and " + b.describe());
}

// ---------------------------------------------------------------------------

Scalar::Scalar(Field f, std::vector<Rational> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) {
    const auto& d = *f_.d_;
    for (auto& x : c_) d.norm(x);
    if (c_.size() > d.degree()) reduce_mod_minpoly(d, c_);
    trim(c_);
    c_.resize(d.degree(), Rational(0));
}

bool Scalar::is_zero() const noexcept {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool Scalar::is_one() const noexcept {
    if (c_[0] != 1) return false;
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

bool Scalar::is_prime_element() const noexcept {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    for (auto& x : r.c_) {
        x = -x;
        f_.d_->norm(x);
    }
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    require_same_field(f_, o.f_);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        c_[i] += o.c_[i];
        f_.d_->norm(c_[i]);
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    require_same_field(f_, o.f_);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        c_[i] -= o.c_[i];
        f_.d_->norm(c_[i]);
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    require_same_field(f_, o.f_);
    const auto& d = *f_.d_;
    if (d.degree() == 1) {
        c_[0] *= o.c_[0];
        d.norm(c_[0]);
        return *this;
    }
    PV a = c_, b = o.c_;
    trim(a);
    trim(b);
    PV r = pmul(d, a, b);
    reduce_mod_minpoly(d, r);
    r.resize(d.degree(), Rational(0));
    c_ = std::move(r);
    return *this;
}

Scalar Scalar::inv() const {
    const auto& d = *f_.d_;
    if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero in " + f_.describe());
    if (d.degree() == 1) return Scalar(f_, {d.inv(c_[0])});
    // Extended Euclid on (minpoly, a): track s with s*a = r (mod minpoly).
    PV r0 = d.minpoly, r1 = c_;
    trim(r1);
    PV s0, s1{Rational(1)};
    while (r1.size() > 1) {
        auto [q, r] = pdivmod(d, r0, r1);
        PV s = psub(d, s0, pmul(d, q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    // r1 is a nonzero constant since minpoly is irreducible.
    Rational c = d.inv(r1[0]);
    for (auto& x : s1) x *= c;
    return Scalar(f_, s1);
}

Scalar Scalar::pow(const Integer& e) const {
    if (e < 0) return inv().pow(-e);
    Scalar result = f_.one(), base = *this;
    Integer k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) result *= base;
        k >>= 1;
        if (k > 0) base *= base;
    }
    return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
    require_same_field(a.f_, b.f_);
    return a.c_ == b.c_;
}

std::string Scalar::to_string() const {
    std::ostringstream out;
    bool first = true;
    const std::string& g = f_.generator_name();
    for (std::size_t k = c_.size(); k-- > 0;) {
        Rational c = c_[k];
        if (c == 0) continue;
        bool neg = f_.characteristic() == 0 && c < 0;
        if (neg) c = -c;
        if (first)
            out << (neg ? "-" : "");
        else
            out << (neg ? " - " : " + ");
        first = false;
        if (k == 0) {
            out << c.get_str();
        } else {
            if (c != 1) out << c.get_str() << "*";
            out << g;
            if (k > 1) out << "^" << k;
        }
    }
    if (first) return "0";
    return out.str();
}

Vec zero_vec(const Field& f, std::size_t n) { return Vec(n, f.zero()); }

bool is_zero_vec(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

}  // namespace tensorcat
