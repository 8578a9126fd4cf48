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

#include "tensorcat/artin.hpp"

#include <algorithm>
#include <cstdlib>

namespace tensorcat {

const char* to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::False: return "false";
        case Verdict::True: return "true";
        case Verdict::Undetermined: return "undetermined";
    }
    return "?";
}

std::size_t search_budget() {
    if (const char* s = std::getenv("TENSORCAT_BUDGET")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(s, &end, 10);
        if (end != s && *end == '\0' && v > 0) return v;
    }
    return kDefaultSearchBudget;
}

// ---------------------------------------------------------------------------
// Algebras and modules

OrdAlgebra::OrdAlgebra(Field f, std::size_t n) : field(std::move(f)), dim(n), unit(zero_vec(field, n)) {
    left.assign(n, Matrix(field, n, n));
}

OrdAlgebra OrdAlgebra::from_products(const Field& f, std::size_t n,
                                     const std::function<Vec(std::size_t, std::size_t)>& prod, Vec unit) {
    OrdAlgebra e(f, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec p = prod(i, j);
            for (std::size_t l = 0; l < n; ++l) e.left[i](l, j) = p[l];
        }
    e.unit = std::move(unit);
    return e;
}

Vec OrdAlgebra::basis(std::size_t i) const {
    Vec v = zero_vec(field, dim);
    v[i] = field.one();
    return v;
}

Matrix OrdAlgebra::left_mult(const Vec& x) const {
    Matrix m(field, dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        if (!x[i].is_zero()) m += left[i] * x[i];
    return m;
}

Matrix OrdAlgebra::right_mult(const Vec& x) const {
    Matrix m(field, dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
        Vec c = left[j] * x;  // e_j x
        for (std::size_t l = 0; l < dim; ++l) m(l, j) = c[l];
    }
    return m;
}

Vec OrdAlgebra::mul(const Vec& x, const Vec& y) const { return left_mult(x) * y; }

bool OrdAlgebra::is_commutative() const {
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j)
            if (left[i].col(j) != left[j].col(i)) return false;
    return true;
}

void validate(const OrdAlgebra& e) {
    if (e.left.size() != e.dim || e.unit.size() != e.dim) fail(ErrorKind::ShapeMismatch, "algebra: inconsistent dimension");
    for (std::size_t i = 0; i < e.dim; ++i)
        for (std::size_t j = 0; j < e.dim; ++j)
            if (e.left[i] * e.left[j] != e.left_mult(e.left[i].col(j)))
                fail(ErrorKind::ValidationFailure, "algebra: associativity fails at (" + std::to_string(i) + "," +
                                                       std::to_string(j) + ")");
    Matrix one = Matrix::identity(e.field, e.dim);
    if (e.left_mult(e.unit) != one || e.right_mult(e.unit) != one)
        fail(ErrorKind::ValidationFailure, "algebra: unit law fails");
}

Matrix action_of(const OrdAlgebra& e, const OrdModule& m, const Vec& x) {
    Matrix r(e.field, m.dim, m.dim);
    for (std::size_t i = 0; i < e.dim; ++i)
        if (!x[i].is_zero()) r += m.act[i] * x[i];
    return r;
}

void validate(const OrdAlgebra& e, const OrdModule& m) {
    if (m.act.size() != e.dim) fail(ErrorKind::ShapeMismatch, "module: one action matrix per basis element expected");
    for (std::size_t i = 0; i < e.dim; ++i)
        for (std::size_t j = 0; j < e.dim; ++j)
            if (action_of(e, m, e.left[i].col(j)) != m.act[j] * m.act[i])
                fail(ErrorKind::ValidationFailure, "module: action fails at (" + std::to_string(i) + "," +
                                                       std::to_string(j) + ")");
    if (action_of(e, m, e.unit) != Matrix::identity(e.field, m.dim))
        fail(ErrorKind::ValidationFailure, "module: unit acts nontrivially");
}

OrdModule regular_module(const OrdAlgebra& e) {
    OrdModule m;
    m.dim = e.dim;
    for (std::size_t i = 0; i < e.dim; ++i) m.act.push_back(e.right_mult(e.basis(i)));
    return m;
}

// ---------------------------------------------------------------------------
// Examples

OrdAlgebra cyclic_group_algebra(const Field& f, std::size_t n) {
    Vec unit = zero_vec(f, n);
    unit[0] = f.one();
    return OrdAlgebra::from_products(
        f, n,
        [&](std::size_t i, std::size_t j) {
            Vec v = zero_vec(f, n);
            v[(i + j) % n] = f.one();
            return v;
        },
        unit);
}

OrdAlgebra matrix_algebra(const Field& f, std::size_t n) {
    Vec unit = zero_vec(f, n * n);
    for (std::size_t i = 0; i < n; ++i) unit[i * n + i] = f.one();
    return OrdAlgebra::from_products(
        f, n * n,
        [&](std::size_t x, std::size_t y) {
            Vec v = zero_vec(f, n * n);
            if (x % n == y / n) v[(x / n) * n + y % n] = f.one();
            return v;
        },
        unit);
}

OrdAlgebra upper_triangular(const Field& f, std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> idx;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) idx.emplace_back(i, j);
    const std::size_t d = idx.size();
    auto find = [&](std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < d; ++k)
            if (idx[k] == std::make_pair(i, j)) return k;
        return d;
    };
    Vec unit = zero_vec(f, d);
    for (std::size_t i = 0; i < n; ++i) unit[find(i, i)] = f.one();
    return OrdAlgebra::from_products(
        f, d,
        [&](std::size_t x, std::size_t y) {
            Vec v = zero_vec(f, d);
            if (idx[x].second == idx[y].first) v[find(idx[x].first, idx[y].second)] = f.one();
            return v;
        },
        unit);
}

OrdAlgebra quaternion_algebra(const Field& f, const Scalar& a, const Scalar& b) {
    // basis 1, i, j, k = ij; e_x e_y = c[x][y] e_{x xor y}
    const Scalar one = f.one();
    const Scalar c[4][4] = {{one, one, one, one}, {one, a, one, a}, {one, -one, b, -b}, {one, -a, b, -(a * b)}};
    Vec unit = zero_vec(f, 4);
    unit[0] = one;
    OrdAlgebra e = OrdAlgebra::from_products(
        f, 4,
        [&](std::size_t x, std::size_t y) {
            Vec v = zero_vec(f, 4);
            v[x ^ y] = c[x][y];
            return v;
        },
        unit);
    return e;
}

OrdAlgebra quotient_algebra(const Poly& f) {
    const Field& k = f.field();
    if (f.degree() < 1) fail(ErrorKind::PreconditionViolated, "quotient_algebra: degree at least 1 expected");
    const std::size_t n = static_cast<std::size_t>(f.degree());
    Vec unit = zero_vec(k, n);
    unit[0] = k.one();
    return OrdAlgebra::from_products(
        k, n,
        [&](std::size_t i, std::size_t j) {
            Poly r = Poly::monomial(k.one(), i + j) % f;
            Vec v = zero_vec(k, n);
            for (std::size_t l = 0; l < r.coeffs().size(); ++l) v[l] = r.coeffs()[l];
            return v;
        },
        unit);
}

OrdAlgebra product(const OrdAlgebra& a, const OrdAlgebra& b) {
    require_same_field(a.field, b.field);
    const std::size_t n = a.dim + b.dim;
    Vec unit = a.unit;
    unit.insert(unit.end(), b.unit.begin(), b.unit.end());
    return OrdAlgebra::from_products(
        a.field, n,
        [&](std::size_t i, std::size_t j) {
            Vec v = zero_vec(a.field, n);
            if (i < a.dim && j < a.dim) {
                Vec p = a.left[i].col(j);
                std::copy(p.begin(), p.end(), v.begin());
            } else if (i >= a.dim && j >= a.dim) {
                Vec p = b.left[i - a.dim].col(j - a.dim);
                std::copy(p.begin(), p.end(), v.begin() + static_cast<long>(a.dim));
            }
            return v;
        },
        unit);
}

// ---------------------------------------------------------------------------
// Radical and center

namespace {

/// A basis of the span of vs, taken from the nonzero rows of the RREF.
std::vector<Vec> span_basis(const Field& f, const std::vector<Vec>& vs, std::size_t n) {
    if (vs.empty()) return {};
    Rref r = rref(Matrix::from_rows(f, vs, n));
    std::vector<Vec> out;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) out.push_back(r.reduced.row(i));
    return out;
}

Vec combine(const Field& f, const std::vector<Vec>& basis, const Vec& c, std::size_t n) {
    Vec v = zero_vec(f, n);
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (!c[k].is_zero())
            for (std::size_t l = 0; l < n; ++l) v[l] += c[k] * basis[k][l];
    return v;
}

Vec axpy(const Vec& x, const Scalar& a, const Vec& y) {
    Vec r = x;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += a * y[i];
    return r;
}

/// Trace form kernel; the radical in characteristic zero.
std::vector<Vec> radical_char0(const OrdAlgebra& e) {
    Vec tr;
    for (const Matrix& l : e.left) tr.push_back(l.trace());
    Matrix t(e.field, e.dim, e.dim);
    for (std::size_t i = 0; i < e.dim; ++i)
        for (std::size_t j = 0; j < e.dim; ++j) {
            Scalar s = e.field.zero();
            for (std::size_t l = 0; l < e.dim; ++l) s += e.left[i](l, j) * tr[l];
            t(j, i) = s;
        }
    return kernel(t);
}

using IntMatrix = std::vector<std::vector<Integer>>;

IntMatrix int_mul(const IntMatrix& a, const IntMatrix& b, const Integer& mod) {
    const std::size_t n = a.size();
    IntMatrix c(n, std::vector<Integer>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    for (auto& row : c)
        for (auto& x : row) x %= mod;
    return c;
}

/// Generalized trace g_i(x) = (Tr(L^(p^i)) mod p^(i+1)) / p^i for an integer lift
/// L of left multiplication by x over F_p.
Scalar generalized_trace(const OrdAlgebra& e, const Vec& x, unsigned i) {
    const unsigned long p = e.field.characteristic();
    Integer pi, mod;
    mpz_ui_pow_ui(pi.get_mpz_t(), p, i);
    mod = pi * p;
    Matrix l = e.left_mult(x);
    const std::size_t n = e.dim;
    IntMatrix base(n, std::vector<Integer>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) base[r][c] = l(r, c).coeffs()[0].get_num();
    IntMatrix acc(n, std::vector<Integer>(n, 0));
    for (std::size_t r = 0; r < n; ++r) acc[r][r] = 1;
    Integer ex = pi;
    while (ex > 0) {
        if (ex % 2 == 1) acc = int_mul(acc, base, mod);
        ex /= 2;
        if (ex > 0) base = int_mul(base, base, mod);
    }
    Integer tr = 0;
    for (std::size_t r = 0; r < n; ++r) tr += acc[r][r];
    tr %= mod;
    if (tr % pi != 0) fail(ErrorKind::OracleDisagreement, "radical: generalized trace not divisible by p^i");
    return e.field.from_rational(Rational(Integer(tr / pi)));
}

std::vector<Vec> radical_prime_char(const OrdAlgebra& e) {
    const unsigned long p = e.field.characteristic();
    unsigned last = 0;
    for (Integer pw = p; pw <= e.dim; pw *= p) ++last;
    std::vector<Vec> ideal;
    for (std::size_t k = 0; k < e.dim; ++k) ideal.push_back(e.basis(k));
    for (unsigned i = 0; i <= last && !ideal.empty(); ++i) {
        Matrix m(e.field, e.dim, ideal.size());
        for (std::size_t k = 0; k < ideal.size(); ++k)
            for (std::size_t j = 0; j < e.dim; ++j) m(j, k) = generalized_trace(e, e.mul(ideal[k], e.basis(j)), i);
        std::vector<Vec> next;
        for (const Vec& c : kernel(m)) next.push_back(combine(e.field, ideal, c, e.dim));
        ideal = span_basis(e.field, next, e.dim);
    }
    return ideal;
}

/// Views an algebra over F_q as an algebra over F_p; index m * d + r holds e_m t^r.
OrdAlgebra restrict_to_prime(const OrdAlgebra& e) {
    const Field& k = e.field;
    const Field p = k.prime_field();
    const std::size_t d = k.degree(), n = e.dim;
    auto expand = [&](const Vec& v) {
        Vec out = zero_vec(p, n * d);
        for (std::size_t m = 0; m < n; ++m)
            for (std::size_t r = 0; r < d; ++r) out[m * d + r] = p.from_rational(v[m].coeffs()[r]);
        return out;
    };
    std::vector<Scalar> tp;
    for (std::size_t r = 0; r < 2 * d; ++r) tp.push_back(k.generator().pow(r));
    return OrdAlgebra::from_products(
        p, n * d,
        [&](std::size_t x, std::size_t y) {
            Vec prod = e.left[x / d].col(y / d);
            for (auto& s : prod) s *= tp[x % d + y % d];
            return expand(prod);
        },
        expand(e.unit));
}

}  // namespace

std::vector<Vec> radical(const OrdAlgebra& e) {
    if (e.dim == 0) return {};
    if (e.field.characteristic() == 0) return span_basis(e.field, radical_char0(e), e.dim);
    if (e.field.is_prime_field()) return radical_prime_char(e);
    const std::size_t d = e.field.degree();
    std::vector<Vec> back;
    for (const Vec& v : radical_prime_char(restrict_to_prime(e))) {
        Vec w;
        for (std::size_t m = 0; m < e.dim; ++m) {
            std::vector<Rational> c(d);
            for (std::size_t r = 0; r < d; ++r) c[r] = v[m * d + r].coeffs()[0];
            w.push_back(Scalar(e.field, c));
        }
        back.push_back(w);
    }
    return span_basis(e.field, back, e.dim);
}

bool is_semisimple(const OrdAlgebra& e) { return radical(e).empty(); }

std::vector<Vec> center(const OrdAlgebra& e) {
    Matrix m(e.field, e.dim * e.dim, e.dim);
    for (std::size_t i = 0; i < e.dim; ++i)
        for (std::size_t k = 0; k < e.dim; ++k)
            for (std::size_t l = 0; l < e.dim; ++l) m(i * e.dim + l, k) = e.left[k](l, i) - e.left[i](l, k);
    return span_basis(e.field, kernel(m), e.dim);
}

Poly minimal_polynomial(const OrdAlgebra& e, const Vec& x, const Vec& one) {
    std::vector<Vec> powers{one};
    while (true) {
        Vec next = e.mul(x, powers.back());
        Matrix m = Matrix::from_columns(e.field, powers, e.dim);
        if (auto c = solve(m, next)) {
            std::vector<Scalar> coeffs;
            for (const Scalar& s : *c) coeffs.push_back(-s);
            coeffs.push_back(e.field.one());
            return Poly(e.field, coeffs);
        }
        powers.push_back(next);
    }
}

namespace {

Vec eval_at(const OrdAlgebra& e, const Poly& f, const Vec& x, const Vec& one) {
    Vec r = zero_vec(e.field, e.dim);
    for (int i = f.degree(); i >= 0; --i) r = axpy(e.mul(x, r), f.coeff(static_cast<std::size_t>(i)), one);
    return r;
}

Vec power(const OrdAlgebra& e, const Vec& x, Integer n) {
    Vec acc = e.unit, base = x;
    while (n > 0) {
        if (n % 2 == 1) acc = e.mul(acc, base);
        n /= 2;
        if (n > 0) base = e.mul(base, base);
    }
    return acc;
}

/// Splits the idempotent `one` along the coprime factors of the minimal
/// polynomial of w in one E one. Returns the pieces, or just `one`.
std::vector<Vec> split_by(const OrdAlgebra& e, const Vec& w, const Vec& one, Poly* minpoly = nullptr) {
    Poly f = minimal_polynomial(e, w, one);
    if (minpoly) *minpoly = f;
    Factorization fs = factor(f);
    if (fs.size() < 2) return {one};
    std::vector<Vec> out;
    for (const auto& [fi, mult] : fs) {
        Poly q = Poly::monomial(e.field.one(), 0);
        for (int k = 0; k < mult; ++k) q = q * fi;
        Poly g = f / q;
        auto [d, s, t] = ext_gcd(g, q);
        (void)t;
        Poly eidem = (s * g) % f;
        out.push_back(eval_at(e, eidem, w, one));
    }
    return out;
}

/// Calls visit on the basis vectors, then on v_a + b v_b and v_a + b v_b + c v_c
/// with b, c in [-3, 3] nonzero. Stops when visit returns true or the budget
/// is spent; returns whether visit accepted a candidate.
bool search_candidates(const Field& f, const std::vector<Vec>& basis, const std::function<bool(const Vec&)>& visit) {
    std::size_t budget = search_budget();
    auto spend = [&]() { return budget-- > 0; };
    const std::size_t n = basis.size();
    for (std::size_t a = 0; a < n; ++a) {
        if (!spend()) return false;
        if (visit(basis[a])) return true;
    }
    const long coeffs[] = {1, -1, 2, -2, 3, -3};
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (long cb : coeffs) {
                if (!spend()) return false;
                if (visit(axpy(basis[a], f.from_int(cb), basis[b]))) return true;
            }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c)
                for (long cb : coeffs)
                    for (long cc : coeffs) {
                        if (!spend()) return false;
                        if (visit(axpy(axpy(basis[a], f.from_int(cb), basis[b]), f.from_int(cc), basis[c]))) return true;
                    }
    return false;
}

}  // namespace

std::vector<Vec> central_idempotents(const OrdAlgebra& e) {
    if (e.dim == 0) return {};
    if (!is_semisimple(e)) fail(ErrorKind::NotSemisimple, "central_idempotents: the algebra has a nonzero radical");
    const std::vector<Vec> z = center(e);
    std::vector<Vec> idems{e.unit};
    if (e.field.is_finite()) {
        // Frobenius fixed points of the center form k^r, one coordinate per block.
        Coordinates zc(e.field, z, e.dim);
        Matrix frob(e.field, z.size(), z.size());
        for (std::size_t k = 0; k < z.size(); ++k) {
            Vec c = zc.of_checked(power(e, z[k], e.field.order()));
            for (std::size_t l = 0; l < z.size(); ++l) frob(l, k) = c[l] - (l == k ? e.field.one() : e.field.zero());
        }
        for (const Vec& c : kernel(frob)) {
            Vec b = combine(e.field, z, c, e.dim);
            std::vector<Vec> next;
            for (const Vec& one : idems)
                for (Vec& piece : split_by(e, e.mul(b, one), one)) next.push_back(std::move(piece));
            idems = std::move(next);
        }
        return idems;
    }
    // Characteristic zero: a block is done once some element generates it.
    std::vector<bool> done{false};
    auto block_dim = [&](const Vec& one) {
        std::vector<Vec> vs;
        for (const Vec& v : z) vs.push_back(e.mul(v, one));
        return span_basis(e.field, vs, e.dim).size();
    };
    auto all_done = [&]() { return std::all_of(done.begin(), done.end(), [](bool b) { return b; }); };
    bool ok = search_candidates(e.field, z, [&](const Vec& cand) {
        std::vector<Vec> next;
        std::vector<bool> next_done;
        for (std::size_t i = 0; i < idems.size(); ++i) {
            if (done[i]) {
                next.push_back(idems[i]);
                next_done.push_back(true);
                continue;
            }
            Poly f(e.field);
            std::vector<Vec> pieces;
            try {
                pieces = split_by(e, e.mul(cand, idems[i]), idems[i], &f);
            } catch (const Error& err) {
                if (err.kind() != ErrorKind::DegreeTooLarge) throw;
                pieces = {idems[i]};
            }
            if (pieces.size() > 1) {
                for (Vec& p : pieces) {
                    next.push_back(std::move(p));
                    next_done.push_back(false);
                }
            } else {
                next.push_back(idems[i]);
                next_done.push_back(f.degree() == static_cast<int>(block_dim(idems[i])));
            }
        }
        idems = std::move(next);
        done = std::move(next_done);
        return all_done();
    });
    if (!ok)
        fail(ErrorKind::SeparatingElementNotFound,
             "central_idempotents: no generating element found for every block within the search budget");
    return idems;
}

// ---------------------------------------------------------------------------
// Idempotents

std::pair<OrdAlgebra, std::vector<Vec>> corner(const OrdAlgebra& e, const Vec& idem) {
    std::vector<Vec> vs;
    for (std::size_t k = 0; k < e.dim; ++k) vs.push_back(e.mul(e.mul(idem, e.basis(k)), idem));
    std::vector<Vec> basis = span_basis(e.field, vs, e.dim);
    Coordinates co(e.field, basis, e.dim);
    OrdAlgebra r = OrdAlgebra::from_products(
        e.field, basis.size(), [&](std::size_t i, std::size_t j) { return co.of_checked(e.mul(basis[i], basis[j])); },
        co.of_checked(idem));
    return {std::move(r), std::move(basis)};
}

namespace {

std::size_t right_ideal_dim(const OrdAlgebra& r, const Vec& w) {
    std::vector<Vec> vs;
    for (std::size_t k = 0; k < r.dim; ++k) vs.push_back(r.mul(w, r.basis(k)));
    return span_basis(r.field, vs, r.dim).size();
}

/// A nonzero non-unit, from the candidate search or from a reducible minimal
/// polynomial of a candidate.
std::optional<Vec> find_zero_divisor(const OrdAlgebra& r) {
    std::vector<Vec> basis;
    for (std::size_t k = 0; k < r.dim; ++k) basis.push_back(r.basis(k));
    std::optional<Vec> found;
    search_candidates(r.field, basis, [&](const Vec& w) {
        if (is_zero_vec(w)) return false;
        if (right_ideal_dim(r, w) < r.dim) {
            found = w;
            return true;
        }
        try {
            Poly f = minimal_polynomial(r, w, r.unit);
            Factorization fs = factor(f);
            if (fs.size() > 1 || fs[0].second > 1) {
                found = eval_at(r, fs[0].first, w, r.unit);
                return true;
            }
        } catch (const Error& err) {
            if (err.kind() != ErrorKind::DegreeTooLarge) throw;
        }
        return false;
    });
    return found;
}

/// The idempotent f with f R = w R in a semisimple algebra: the left identity
/// of the right ideal, found by a linear solve.
Vec idempotent_of_right_ideal(const OrdAlgebra& r, const Vec& w) {
    std::vector<Vec> vs;
    for (std::size_t k = 0; k < r.dim; ++k) vs.push_back(r.mul(w, r.basis(k)));
    std::vector<Vec> ideal = span_basis(r.field, vs, r.dim);
    const std::size_t m = ideal.size();
    Matrix a(r.field, m * r.dim, m);
    Vec rhs;
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t k = 0; k < m; ++k) {
            Vec p = r.mul(ideal[k], ideal[j]);
            for (std::size_t l = 0; l < r.dim; ++l) a(j * r.dim + l, k) = p[l];
        }
        rhs.insert(rhs.end(), ideal[j].begin(), ideal[j].end());
    }
    auto c = solve(a, rhs);
    if (!c) fail(ErrorKind::NotSemisimple, "right ideal without a left identity");
    return combine(r.field, ideal, *c, r.dim);
}

Rational scalar_part(const OrdAlgebra& r, const Vec& x, bool& is_scalar) {
    std::size_t idx = 0;
    while (r.unit[idx].is_zero()) ++idx;
    Scalar lambda = x[idx] / r.unit[idx];
    Vec check = r.unit;
    for (auto& s : check) s *= lambda;
    is_scalar = check == x;
    return lambda.coeffs()[0];
}

/// Decides whether a noncommutative simple algebra with no zero divisor in the
/// search is a division algebra. Only quaternion algebras over Q are decided.
Verdict division_noncommutative(const OrdAlgebra& r) {
    if (r.field.is_finite()) return Verdict::False;  // finite division rings commute
    if (r.dim != 4 || !r.field.is_prime_field() || center(r).size() != 1) return Verdict::Undetermined;
    Matrix tr(r.field, 1, 4);
    for (std::size_t k = 0; k < 4; ++k) tr(0, k) = r.left[k].trace();
    std::vector<Vec> pure = kernel(tr);
    bool scalar = false;
    std::optional<Vec> i;
    Rational a;
    for (const Vec& v : pure) {
        a = scalar_part(r, r.mul(v, v), scalar);
        if (!scalar) return Verdict::Undetermined;
        if (a == 0) return Verdict::False;
        i = v;
        break;
    }
    if (!i) return Verdict::Undetermined;
    Matrix anti(r.field, 4, pure.size());
    for (std::size_t k = 0; k < pure.size(); ++k) {
        Vec s = axpy(r.mul(*i, pure[k]), r.field.one(), r.mul(pure[k], *i));
        for (std::size_t l = 0; l < 4; ++l) anti(l, k) = s[l];
    }
    std::vector<Vec> ks = kernel(anti);
    if (ks.empty()) return Verdict::Undetermined;
    Vec j = combine(r.field, pure, ks[0], 4);
    Rational b = scalar_part(r, r.mul(j, j), scalar);
    if (!scalar) return Verdict::Undetermined;
    if (b == 0) return Verdict::False;
    return verdict(!conic_has_rational_point(a, b));
}

/// Complete orthogonal primitive idempotents of a simple algebra.
std::vector<Vec> split_simple(const OrdAlgebra& r) {
    if (r.dim == 0) return {};
    if (r.is_commutative()) return {r.unit};
    std::optional<Vec> w = find_zero_divisor(r);
    if (!w) {
        if (division_noncommutative(r) == Verdict::True) return {r.unit};
        fail(ErrorKind::SeparatingElementNotFound,
             "primitive_idempotents: no zero divisor found in a block of dimension " + std::to_string(r.dim));
    }
    Vec f = idempotent_of_right_ideal(r, *w);
    std::vector<Vec> out;
    Vec rest = axpy(r.unit, -r.field.one(), f);
    for (const Vec& part : {f, rest}) {
        auto [s, basis] = corner(r, part);
        for (const Vec& x : split_simple(s)) out.push_back(combine(r.field, basis, x, r.dim));
    }
    return out;
}

std::vector<Vec> primitive_semisimple(const OrdAlgebra& e) {
    std::vector<Vec> out;
    for (const Vec& c : central_idempotents(e)) {
        auto [s, basis] = corner(e, c);
        for (const Vec& x : split_simple(s)) out.push_back(combine(e.field, basis, x, e.dim));
    }
    return out;
}

}  // namespace

std::vector<Vec> primitive_idempotents(const OrdAlgebra& e) {
    if (e.dim == 0) return {};
    std::vector<Vec> rad = radical(e);
    if (rad.empty()) return primitive_semisimple(e);
    // Work in E / rad on the non-pivot coordinates, then lift.
    Rref rr = rref(Matrix::from_rows(e.field, rad, e.dim));
    std::vector<bool> is_pivot(e.dim, false);
    for (std::size_t p : rr.pivots) is_pivot[p] = true;
    std::vector<std::size_t> comp;
    for (std::size_t k = 0; k < e.dim; ++k)
        if (!is_pivot[k]) comp.push_back(k);
    auto reduce = [&](Vec v) {
        for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
            Scalar c = v[rr.pivots[i]];
            if (!c.is_zero()) v = axpy(v, -c, rr.reduced.row(i));
        }
        Vec q;
        for (std::size_t k : comp) q.push_back(v[k]);
        return q;
    };
    auto lift = [&](const Vec& q) {
        Vec v = zero_vec(e.field, e.dim);
        for (std::size_t i = 0; i < comp.size(); ++i) v[comp[i]] = q[i];
        return v;
    };
    OrdAlgebra quotient = OrdAlgebra::from_products(
        e.field, comp.size(), [&](std::size_t i, std::size_t j) { return reduce(e.left[comp[i]].col(comp[j])); },
        reduce(e.unit));
    std::vector<Vec> qs = primitive_semisimple(quotient);
    std::vector<Vec> out;
    Vec sum = zero_vec(e.field, e.dim);
    const Scalar one = e.field.one();
    for (std::size_t k = 0; k < qs.size(); ++k) {
        Vec rest = axpy(e.unit, -one, sum);
        Vec x = rest;
        if (k + 1 < qs.size()) {
            x = e.mul(e.mul(rest, lift(qs[k])), rest);
            // x <- 3x^2 - 2x^3 doubles the nilpotency order of x^2 - x
            for (int it = 0;; ++it) {
                Vec x2 = e.mul(x, x);
                if (x2 == x) break;
                if (it > 64) fail(ErrorKind::OracleDisagreement, "idempotent lifting does not converge");
                Vec x3 = e.mul(x2, x);
                Vec next = zero_vec(e.field, e.dim);
                next = axpy(next, e.field.from_int(3), x2);
                x = axpy(next, e.field.from_int(-2), x3);
            }
        }
        out.push_back(x);
        sum = axpy(sum, one, x);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Modules

std::vector<Matrix> module_hom(const OrdAlgebra& e, const OrdModule& m, const OrdModule& n) {
    const std::size_t rows = n.dim, cols = m.dim;
    // phi act_m[i] = act_n[i] phi, phi(r, c) at index r * cols + c
    Matrix sys(e.field, e.dim * rows * cols, rows * cols);
    for (std::size_t i = 0; i < e.dim; ++i)
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) {
                const std::size_t eq = (i * rows + r) * cols + c;
                for (std::size_t k = 0; k < cols; ++k) sys(eq, r * cols + k) += m.act[i](k, c);
                for (std::size_t k = 0; k < rows; ++k) sys(eq, k * cols + c) -= n.act[i](r, k);
            }
    std::vector<Matrix> out;
    for (const Vec& v : kernel(sys)) {
        Matrix phi(e.field, rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) phi(r, c) = v[r * cols + c];
        out.push_back(phi);
    }
    return out;
}

std::pair<OrdAlgebra, std::vector<Matrix>> endomorphism_algebra(const OrdAlgebra& e, const OrdModule& m) {
    std::vector<Matrix> basis = module_hom(e, m, m);
    std::vector<Vec> flat;
    for (const Matrix& b : basis) flat.push_back(b.entries());
    Coordinates co(e.field, flat, m.dim * m.dim);
    OrdAlgebra end = OrdAlgebra::from_products(
        e.field, basis.size(),
        [&](std::size_t i, std::size_t j) { return co.of_checked((basis[i] * basis[j]).entries()); },
        co.of_checked(Matrix::identity(e.field, m.dim).entries()));
    return {std::move(end), std::move(basis)};
}

OrdModule submodule(const OrdModule& m, const std::vector<Vec>& basis) {
    OrdModule s;
    s.dim = basis.size();
    if (basis.empty()) {
        s.act.assign(m.act.size(), Matrix(m.act.empty() ? Field::rationals() : m.act[0].field(), 0, 0));
        return s;
    }
    const Field& f = basis[0][0].field();
    Coordinates co(f, basis, m.dim);
    for (const Matrix& a : m.act) {
        std::vector<Vec> cols;
        for (const Vec& b : basis) cols.push_back(co.of_checked(a * b));
        s.act.push_back(Matrix::from_columns(f, cols, s.dim));
    }
    return s;
}

namespace {

bool radical_annihilates(const OrdAlgebra& e, const OrdModule& m) {
    for (const Vec& r : radical(e))
        if (!action_of(e, m, r).is_zero()) return false;
    return true;
}

}  // namespace

Verdict module_is_simple(const OrdAlgebra& e, const OrdModule& m) {
    if (m.dim == 0) return Verdict::False;
    // M rad is a proper submodule by Nakayama.
    if (!radical_annihilates(e, m)) return Verdict::False;
    return is_division(endomorphism_algebra(e, m).first);
}

std::vector<std::pair<OrdModule, int>> decompose_module(const OrdAlgebra& e, const OrdModule& m) {
    std::vector<std::pair<OrdModule, int>> out;
    if (m.dim == 0) return out;
    if (!radical_annihilates(e, m)) fail(ErrorKind::NotSemisimple, "decompose_module: the radical acts nontrivially");
    auto [end, mats] = endomorphism_algebra(e, m);
    for (const Vec& f : primitive_idempotents(end)) {
        Matrix proj(e.field, m.dim, m.dim);
        for (std::size_t k = 0; k < mats.size(); ++k)
            if (!f[k].is_zero()) proj += mats[k] * f[k];
        std::vector<Vec> cols;
        for (std::size_t c = 0; c < m.dim; ++c) cols.push_back(proj.col(c));
        OrdModule s = submodule(m, span_basis(e.field, cols, m.dim));
        bool merged = false;
        for (auto& [t, mult] : out)
            if (!module_hom(e, s, t).empty() && !module_hom(e, t, s).empty()) {
                ++mult;
                merged = true;
                break;
            }
        if (!merged) out.emplace_back(std::move(s), 1);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Division and separability

Verdict is_division(const OrdAlgebra& e) {
    if (e.dim == 0) return Verdict::False;
    if (!is_semisimple(e)) return Verdict::False;
    try {
        if (central_idempotents(e).size() > 1) return Verdict::False;
    } catch (const Error& err) {
        if (err.kind() != ErrorKind::SeparatingElementNotFound) throw;
        return Verdict::Undetermined;
    }
    if (e.is_commutative()) return Verdict::True;
    if (e.field.is_finite()) return Verdict::False;
    if (find_zero_divisor(e)) return Verdict::False;
    return division_noncommutative(e);
}

namespace {

Integer squarefree_part(Integer n) {
    Integer out = 1;
    if (n < 0) {
        out = -1;
        n = -n;
    }
    for (Integer p = 2; p * p <= n; ++p) {
        int k = 0;
        while (n % p == 0) {
            n /= p;
            ++k;
        }
        if (k % 2) out *= p;
    }
    return out * n;
}

std::vector<Integer> prime_divisors(Integer n) {
    std::vector<Integer> ps;
    if (n < 0) n = -n;
    for (Integer p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    if (n > 1) ps.push_back(n);
    return ps;
}

int hilbert_symbol(const Integer& a, const Integer& b, const Integer& p) {
    Integer u = a, v = b;
    int alpha = 0, beta = 0;
    while (u % p == 0) {
        u /= p;
        ++alpha;
    }
    while (v % p == 0) {
        v /= p;
        ++beta;
    }
    auto mod2 = [](const Integer& x) {
        Integer r = x % 2;
        return r < 0 ? -r : r;
    };
    if (p == 2) {
        auto eps = [&](const Integer& x) { return mod2(Integer((x - 1) / 2)); };
        auto omega = [&](const Integer& x) { return mod2(Integer((x * x - 1) / 8)); };
        Integer ex = eps(u) * eps(v) + alpha * omega(v) + beta * omega(u);
        return mod2(ex) == 0 ? 1 : -1;
    }
    int s = 1;
    if (alpha % 2 && beta % 2 && mod2(Integer((p - 1) / 2)) == 1) s = -s;
    if (beta % 2) s *= mpz_legendre(u.get_mpz_t(), p.get_mpz_t());
    if (alpha % 2) s *= mpz_legendre(v.get_mpz_t(), p.get_mpz_t());
    return s;
}

}  // namespace

bool conic_has_rational_point(const Rational& a, const Rational& b) {
    if (a == 0 || b == 0) return true;
    const Integer sa = squarefree_part(Integer(a.get_num() * a.get_den()));
    const Integer sb = squarefree_part(Integer(b.get_num() * b.get_den()));
    if (sa < 0 && sb < 0) return false;
    std::vector<Integer> ps = prime_divisors(Integer(2 * sa * sb));
    for (const Integer& p : ps)
        if (hilbert_symbol(sa, sb, p) != 1) return false;
    return true;
}

bool is_separable_over_k(const OrdAlgebra& e) {
    const std::size_t n = e.dim;
    if (n == 0) return true;
    // p = sum p_ij e_i (x) e_j with e_k p = p e_k for all k and m(p) = 1
    Matrix sys(e.field, n * n * n + n, n * n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const std::size_t var = i * n + j;
                for (std::size_t l = 0; l < n; ++l) {
                    sys((k * n + l) * n + j, var) += e.left[k](l, i);   // (e_k e_i) (x) e_j
                    sys((k * n + i) * n + l, var) -= e.left[j](l, k);   // e_i (x) (e_j e_k)
                }
            }
    Vec rhs = zero_vec(e.field, n * n * n + n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l) sys(n * n * n + l, i * n + j) += e.left[i](l, j);
    for (std::size_t l = 0; l < n; ++l) rhs[n * n * n + l] = e.unit[l];
    return solve(sys, rhs).has_value();
}

bool is_separable_field_ext(const Poly& f) {
    if (!is_irreducible(f)) fail(ErrorKind::Reducible, "is_separable_field_ext: " + f.to_string() + " is reducible");
    return gcd(f, f.derivative()).degree() == 0;
}

}  // namespace tensorcat
