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

// Polynomial factorization.
//
//  - finite fields: square-free decomposition, distinct-degree splitting and
//    Cantor-Zassenhaus equal-degree splitting with a fixed seed;
//  - Q: monic integer rescaling, factorization modulo a good prime, Hensel
//    lifting along a binary factor tree and exhaustive recombination;
//  - number fields: Trager's norm method on top of the rational factorizer.

#include <algorithm>
#include <random>

#include "tensorcat/exactfield.hpp"

namespace tensorcat {

namespace {

constexpr std::uint64_t kSeed = 0x7e5c0f1a2b3d4c5eULL;

// Norm polynomials produced by Trager's method have degree deg(f) * [K:Q];
// they are allowed to be larger than user-facing rational inputs.
constexpr int kMaxNormDegree = 2 * kMaxRationalFactorDegree;

bool coeff_less(const Scalar& a, const Scalar& b) {
    const auto& x = a.coeffs();
    const auto& y = b.coeffs();
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != y[i]) return x[i] < y[i];
    return false;
}

bool poly_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t i = a.coeffs().size(); i-- > 0;) {
        const Scalar& x = a.coeffs()[i];
        const Scalar& y = b.coeffs()[i];
        if (x != y) return coeff_less(x, y);
    }
    return false;
}

Factorization normalize(Factorization fs) {
    std::sort(fs.begin(), fs.end(), [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
    Factorization out;
    for (auto& [p, m] : fs) {
        if (!out.empty() && out.back().first == p)
            out.back().second += m;
        else
            out.emplace_back(std::move(p), m);
    }
    return out;
}

// p(x + c)
Poly shift(const Poly& p, const Scalar& c) {
    const Field& f = p.field();
    Poly lin(f, {c, f.one()});
    Poly r(f);
    for (std::size_t k = p.coeffs().size(); k-- > 0;) r = r * lin + Poly::constant(p.coeffs()[k]);
    return r;
}

// ---------------------------------------------------------------------------
// Finite fields

Scalar random_scalar(const Field& f, std::mt19937_64& rng) {
    std::uniform_int_distribution<unsigned long> dist(0, f.characteristic() - 1);
    std::vector<Rational> c(f.degree());
    for (auto& x : c) x = Rational(dist(rng));
    return Scalar(f, std::move(c));
}

// Inverse of the Frobenius on a polynomial whose exponents are all multiples of p.
Poly pth_root(const Poly& c) {
    const Field& f = c.field();
    const unsigned long p = f.characteristic();
    Integer e;
    mpz_ui_pow_ui(e.get_mpz_t(), p, f.degree() - 1);
    std::vector<Scalar> r;
    for (std::size_t i = 0; i < c.coeffs().size(); i += p) r.push_back(c.coeffs()[i].pow(e));
    return Poly(f, std::move(r));
}

void squarefree_ff(const Poly& f, int mult, Factorization& out) {
    if (f.degree() <= 0) return;
    const int p = static_cast<int>(f.field().characteristic());
    Poly d = f.derivative();
    if (d.is_zero()) {
        squarefree_ff(pth_root(f), mult * p, out);
        return;
    }
    Poly c = gcd(f, d);
    Poly w = f / c;
    int i = 1;
    while (w.degree() > 0) {
        Poly y = gcd(w, c);
        Poly fac = w / y;
        if (fac.degree() > 0) out.emplace_back(fac.monic(), i * mult);
        w = y;
        c = c / y;
        ++i;
    }
    if (c.degree() > 0) squarefree_ff(pth_root(c.monic()), mult * p, out);
}

std::vector<std::pair<Poly, int>> distinct_degree(Poly f) {
    const Field& k = f.field();
    const Integer q = k.order();
    const Poly x = Poly::x(k);
    std::vector<std::pair<Poly, int>> out;
    Poly h = x % f;
    for (int i = 1; f.degree() >= 2 * i; ++i) {
        h = powmod(h, q, f);
        Poly g = gcd(h - x, f);
        if (g.degree() > 0) {
            out.emplace_back(g, i);
            f = f / g;
            h = h % f;
        }
    }
    if (f.degree() > 0) out.emplace_back(f.monic(), f.degree());
    return out;
}

void equal_degree(const Poly& g, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
    if (g.degree() == d) {
        out.push_back(g.monic());
        return;
    }
    const Field& k = g.field();
    const Integer q = k.order();
    const unsigned long p = k.characteristic();
    for (;;) {
        std::vector<Scalar> rc;
        for (int i = 0; i < g.degree(); ++i) rc.push_back(random_scalar(k, rng));
        Poly r(k, std::move(rc));
        if (r.degree() < 1) continue;
        Poly t(k);
        if (p != 2) {
            Integer qd;
            mpz_pow_ui(qd.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(d));
            t = powmod(r, (qd - 1) / 2, g) - Poly::constant(k.one());
        } else {
            // Absolute trace to F_2: r + r^2 + ... + r^(2^(m d - 1)), q = 2^m.
            const std::size_t steps = k.degree() * static_cast<std::size_t>(d);
            Poly acc = r % g, sq = acc;
            for (std::size_t j = 1; j < steps; ++j) {
                sq = (sq * sq) % g;
                acc += sq;
            }
            t = acc;
        }
        Poly s = gcd(g, t);
        if (s.degree() > 0 && s.degree() < g.degree()) {
            equal_degree(s, d, rng, out);
            equal_degree(g / s, d, rng, out);
            return;
        }
    }
}

Factorization factor_finite(const Poly& f) {
    std::mt19937_64 rng(kSeed);
    Factorization sq;
    squarefree_ff(f, 1, sq);
    Factorization out;
    for (const auto& [part, mult] : sq)
        for (const auto& [g, d] : distinct_degree(part)) {
            std::vector<Poly> irr;
            equal_degree(g, d, rng, irr);
            for (auto& h : irr) out.emplace_back(std::move(h), mult);
        }
    return normalize(std::move(out));
}

// ---------------------------------------------------------------------------
// Characteristic zero square-free decomposition (Yun).

Factorization yun(const Poly& f) {
    Factorization out;
    Poly d = f.derivative();
    Poly a0 = gcd(f, d);
    Poly b = f / a0;
    Poly c = d / a0;
    Poly e = c - b.derivative();
    for (int i = 1; b.degree() > 0; ++i) {
        Poly a = gcd(b, e);
        if (a.degree() > 0) out.emplace_back(a, i);
        b = b / a;
        c = e / a;
        e = c - b.derivative();
    }
    return out;
}

// ---------------------------------------------------------------------------
// Integer polynomials (low-to-high) for Hensel lifting.

using ZP = std::vector<Integer>;

void ztrim(ZP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ZP zmod(ZP a, const Integer& m) {
    for (auto& x : a) {
        x %= m;
        if (x < 0) x += m;
    }
    ztrim(a);
    return a;
}

ZP zsym(ZP a, const Integer& m) {
    a = zmod(std::move(a), m);
    Integer half = m / 2;
    for (auto& x : a)
        if (x > half) x -= m;
    ztrim(a);
    return a;
}

ZP zadd(const ZP& a, const ZP& b) {
    ZP r(std::max(a.size(), b.size()), Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    ztrim(r);
    return r;
}

ZP zsub(const ZP& a, const ZP& b) {
    ZP r(std::max(a.size(), b.size()), Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    ztrim(r);
    return r;
}

ZP zmul(const ZP& a, const ZP& b) {
    if (a.empty() || b.empty()) return {};
    ZP r(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    ztrim(r);
    return r;
}

// Division by a monic polynomial; exact over Z.
std::pair<ZP, ZP> zdivmod_monic(ZP a, const ZP& b) {
    ztrim(a);
    if (a.size() < b.size()) return {{}, a};
    ZP q(a.size() - b.size() + 1, Integer(0));
    for (std::size_t k = a.size(); k-- >= b.size();) {
        const std::size_t s = k + 1 - b.size();
        Integer c = a[k];
        q[s] = c;
        if (c != 0)
            for (std::size_t i = 0; i < b.size(); ++i) a[i + s] -= c * b[i];
        if (k == 0) break;
    }
    ztrim(a);
    ztrim(q);
    return {q, a};
}

std::pair<ZP, ZP> zdivmod_monic_mod(const ZP& a, const ZP& b, const Integer& m) {
    auto [q, r] = zdivmod_monic(zmod(a, m), zmod(b, m));
    return {zmod(q, m), zmod(r, m)};
}

Poly to_fp(const ZP& a, const Field& fp) {
    std::vector<Scalar> c;
    for (const auto& x : a) c.push_back(fp.from_rational(Rational(x)));
    return Poly(fp, std::move(c));
}

ZP from_fp(const Poly& a) {
    ZP r;
    for (const auto& c : a.coeffs()) r.push_back(c.coeffs()[0].get_num());
    ztrim(r);
    return r;
}

// Lift f = g h (mod p), g and h monic and coprime mod p, to modulus p^(2^steps).
std::pair<ZP, ZP> hensel_pair(const ZP& f, ZP g, ZP h, unsigned long p, int steps) {
    Field fp = Field::prime(p);
    auto [one, s_p, t_p] = ext_gcd(to_fp(g, fp), to_fp(h, fp));
    ZP s = from_fp(s_p), t = from_fp(t_p);
    Integer m(p);
    for (int k = 0; k < steps; ++k) {
        Integer m2 = m * m;
        ZP e = zmod(zsub(f, zmul(g, h)), m2);
        auto [q, r] = zdivmod_monic_mod(zmul(s, e), h, m2);
        ZP g2 = zmod(zadd(g, zadd(zmul(t, e), zmul(q, g))), m2);
        ZP h2 = zmod(zadd(h, r), m2);
        ZP b = zmod(zsub(zadd(zmul(s, g2), zmul(t, h2)), ZP{Integer(1)}), m2);
        auto [c, d] = zdivmod_monic_mod(zmul(s, b), h2, m2);
        s = zmod(zsub(s, d), m2);
        t = zmod(zsub(t, zadd(zmul(t, b), zmul(c, g2))), m2);
        g = std::move(g2);
        h = std::move(h2);
        m = m2;
    }
    return {g, h};
}

void hensel_tree(const ZP& f, const std::vector<ZP>& facs, unsigned long p, int steps, const Integer& mod,
                 std::vector<ZP>& out) {
    if (facs.size() == 1) {
        out.push_back(zmod(f, mod));
        return;
    }
    const Integer pp(p);
    const std::size_t half = facs.size() / 2;
    std::vector<ZP> left(facs.begin(), facs.begin() + static_cast<long>(half));
    std::vector<ZP> right(facs.begin() + static_cast<long>(half), facs.end());
    ZP a{Integer(1)}, b{Integer(1)};
    for (const auto& x : left) a = zmod(zmul(a, x), pp);
    for (const auto& x : right) b = zmod(zmul(b, x), pp);
    auto [la, lb] = hensel_pair(f, a, b, p, steps);
    hensel_tree(la, left, p, steps, mod, out);
    hensel_tree(lb, right, p, steps, mod, out);
}

bool is_prime_ul(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Factor a monic square-free integer polynomial.
std::vector<ZP> zassenhaus(const ZP& f) {
    const int n = static_cast<int>(f.size()) - 1;
    if (n <= 1) return {f};
    // Pick the good prime with the fewest modular factors among the first few.
    unsigned long best_p = 0;
    std::vector<ZP> best;
    int good = 0;
    for (unsigned long p = 3; good < 4 && p < 10000; p += 2) {
        if (!is_prime_ul(p)) continue;
        Field fp = Field::prime(p);
        Poly fm = to_fp(f, fp);
        if (gcd(fm, fm.derivative()).degree() != 0) continue;
        ++good;
        Factorization fs = factor_finite(fm);
        if (best_p == 0 || fs.size() < best.size()) {
            best_p = p;
            best.clear();
            for (const auto& [g, m] : fs) best.push_back(from_fp(g));
        }
        if (best.size() == 1) return {f};
    }
    if (best_p == 0) fail(ErrorKind::DegreeTooLarge, "no good reduction prime found");

    Integer norm2 = 0;
    for (const auto& c : f) norm2 += c * c;
    Integer bound = sqrt(norm2) + 1;
    bound <<= static_cast<unsigned long>(n);
    const Integer target = 2 * bound + 1;
    int steps = 0;
    Integer mod(best_p);
    while (mod < target) {
        mod *= mod;
        ++steps;
    }
    std::vector<ZP> lifted;
    hensel_tree(f, best, best_p, steps, mod, lifted);

    std::vector<ZP> out;
    std::vector<std::size_t> rem(lifted.size());
    for (std::size_t i = 0; i < rem.size(); ++i) rem[i] = i;
    ZP g = f;
    for (std::size_t s = 1; 2 * s <= rem.size();) {
        bool found = false;
        std::vector<std::size_t> idx(s);
        for (std::size_t i = 0; i < s; ++i) idx[i] = i;
        for (;;) {
            ZP cand{Integer(1)};
            for (auto i : idx) cand = zmod(zmul(cand, lifted[rem[i]]), mod);
            cand = zsym(cand, mod);
            auto [q, r] = zdivmod_monic(g, cand);
            if (r.empty()) {
                out.push_back(cand);
                g = q;
                std::vector<std::size_t> keep;
                for (std::size_t i = 0, j = 0; i < rem.size(); ++i) {
                    if (j < s && idx[j] == i) {
                        ++j;
                        continue;
                    }
                    keep.push_back(rem[i]);
                }
                rem = std::move(keep);
                found = true;
                break;
            }
            // next combination
            std::size_t k = s;
            while (k > 0 && idx[k - 1] == rem.size() - s + k - 1) --k;
            if (k == 0) break;
            ++idx[k - 1];
            for (std::size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!found) ++s;
    }
    if (g.size() > 1) out.push_back(g);
    return out;
}

Factorization factor_squarefree_rational(const Poly& f, int cap) {
    const int n = f.degree();
    if (n <= 1) return {{f.monic(), 1}};
    if (n > cap)
        fail(ErrorKind::DegreeTooLarge, "rational factorization limited to degree " + std::to_string(cap) +
                                            ", got " + std::to_string(n));
    const Field& q = f.field();
    Integer den = 1;
    for (const auto& c : f.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.coeffs()[0].get_den_mpz_t());
    // F(y) = den^n f(y / den) is monic with integer coefficients.
    ZP big(static_cast<std::size_t>(n) + 1);
    Integer pw = 1;
    for (int i = n; i >= 0; --i) {
        Rational c = f.coeffs()[static_cast<std::size_t>(i)].coeffs()[0] * Rational(pw);
        c.canonicalize();
        big[static_cast<std::size_t>(i)] = c.get_num();
        pw *= den;
    }
    Factorization out;
    for (const auto& g : zassenhaus(big)) {
        const std::size_t m = g.size() - 1;
        std::vector<Scalar> c;
        for (std::size_t i = 0; i <= m; ++i) {
            // coefficient of x^i in g(den x) / den^m
            Integer dm;
            mpz_pow_ui(dm.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(m - i));
            c.push_back(q.from_rational(Rational(g[i], dm)));
        }
        out.emplace_back(Poly(q, std::move(c)).monic(), 1);
    }
    return out;
}

Factorization factor_rational(const Poly& f, int cap) {
    Factorization out;
    for (const auto& [part, mult] : yun(f))
        for (auto& [g, m] : factor_squarefree_rational(part, cap)) out.emplace_back(std::move(g), mult * m);
    return normalize(std::move(out));
}

// ---------------------------------------------------------------------------
// Number fields

Rational element_norm(const Scalar& x) {
    const Field& k = x.field();
    const Field q = k.prime_field();
    const std::size_t d = k.degree();
    Matrix m(q, d, d);
    Scalar col = x;
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < d; ++i) m(i, j) = q.from_rational(col.coeffs()[i]);
        col *= k.generator();
    }
    return determinant(std::move(m)).coeffs()[0];
}

// Norm_{K/Q} of g in K[x], by evaluation at integers and Newton interpolation.
Poly poly_norm(const Poly& g) {
    const Field& k = g.field();
    const Field q = k.prime_field();
    const std::size_t deg = static_cast<std::size_t>(g.degree()) * k.degree();
    std::vector<Rational> xs, ys;
    for (std::size_t i = 0; i <= deg; ++i) {
        xs.emplace_back(static_cast<long>(i));
        ys.push_back(element_norm(g.eval(k.from_int(static_cast<long>(i)))));
    }
    // divided differences in place
    for (std::size_t j = 1; j <= deg; ++j)
        for (std::size_t i = deg; i >= j; --i) {
            ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - j]);
            if (i == j) break;
        }
    Poly r = Poly::constant(q.from_rational(ys[deg]));
    for (std::size_t i = deg; i-- > 0;) {
        r = r * Poly(q, {q.from_rational(-xs[i]), q.one()});
        r += Poly::constant(q.from_rational(ys[i]));
    }
    return r;
}

Poly lift_to(const Poly& p, const Field& k) {
    std::vector<Scalar> c;
    for (const auto& x : p.coeffs()) c.push_back(k.from_rational(x.coeffs()[0]));
    return Poly(k, std::move(c));
}

Factorization factor_squarefree_number_field(const Poly& f) {
    if (f.degree() <= 1) return {{f.monic(), 1}};
    const Field& k = f.field();
    for (long s = 0; s <= 40; s = s > 0 ? -s : 1 - s) {
        Scalar shift_by = k.generator() * k.from_int(s);
        Poly g = shift(f, -shift_by);  // g(x) = f(x - s a)
        Poly n = poly_norm(g);
        if (gcd(n, n.derivative()).degree() > 0) continue;
        Factorization nf = factor_squarefree_rational(n.monic(), kMaxNormDegree);
        if (nf.size() == 1) return {{f.monic(), 1}};
        Factorization out;
        for (const auto& [ni, m] : nf) {
            Poly h = gcd(g, lift_to(ni, k));
            out.emplace_back(shift(h, shift_by).monic(), 1);
        }
        return out;
    }
    fail(ErrorKind::DegreeTooLarge, "no square-free norm shift found");
}

}  // namespace

Factorization factor(const Poly& f) {
    if (f.is_zero()) fail(ErrorKind::PreconditionViolated, "cannot factor the zero polynomial");
    if (f.degree() == 0) return {};
    Poly m = f.monic();
    const Field& k = f.field();
    if (k.is_finite()) return factor_finite(m);
    if (k.is_prime_field()) return factor_rational(m, kMaxRationalFactorDegree);
    Factorization out;
    for (const auto& [part, mult] : yun(m))
        for (auto& [g, e] : factor_squarefree_number_field(part)) out.emplace_back(std::move(g), mult * e);
    return normalize(std::move(out));
}

bool is_irreducible(const Poly& f) {
    if (f.degree() < 1) return false;
    if (f.degree() == 1) return true;
    Factorization fs = factor(f);
    return fs.size() == 1 && fs[0].second == 1;
}

std::vector<Rational> find_irreducible(unsigned long p, std::size_t degree) {
    Field fp = Field::prime(p);
    if (degree == 1) return {Rational(0), Rational(1)};
    Integer count;
    mpz_ui_pow_ui(count.get_mpz_t(), p, degree);
    for (Integer n = 0; n < count; ++n) {
        std::vector<Rational> c(degree + 1);
        Integer r = n;
        for (std::size_t i = 0; i < degree; ++i) {
            Integer digit = r % p;
            c[i] = Rational(digit);
            r /= p;
        }
        c[degree] = 1;
        if (c[0] == 0) continue;
        if (is_irreducible(Poly::from_rationals(fp, c))) return c;
    }
    fail(ErrorKind::InvalidField, "no irreducible polynomial found");
}

std::vector<Scalar> generator_images(const Field& src, const Field& dst) {
    if (src.characteristic() != dst.characteristic())
        fail(ErrorKind::NotAnEmbedding, "fields of different characteristic");
    if (src.is_prime_field()) return {dst.one()};
    Poly m = Poly::from_rationals(dst, src.minpoly());
    std::vector<Scalar> roots;
    for (const auto& [g, mult] : factor(m))
        if (g.degree() == 1) roots.push_back(-g.coeffs()[0]);
    return roots;
}

}  // namespace tensorcat
