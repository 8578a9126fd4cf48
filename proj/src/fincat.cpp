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

#include "tensorcat/fincat.hpp"

#include <algorithm>
#include <sstream>

namespace tensorcat {

int Obj::total() const {
    int t = 0;
    for (int m : mult) t += m;
    return t;
}

bool Obj::is_zero() const {
    return std::all_of(mult.begin(), mult.end(), [](int m) { return m == 0; });
}

// ---------------------------------------------------------------------------
// CategoryPres

std::size_t CategoryPres::dual_l(std::size_t a) const {
    for (std::size_t b = 0; b < rank(); ++b)
        if (dual_r[b] == a) return b;
    fail(ErrorKind::ValidationFailure, "dualR is not a bijection");
}

bool CategoryPres::is_unit(std::size_t a) const { return std::binary_search(units.begin(), units.end(), a); }

std::optional<std::size_t> CategoryPres::index_of(const std::string& label) const {
    for (std::size_t a = 0; a < rank(); ++a)
        if (labels[a] == label) return a;
    return std::nullopt;
}

std::size_t CategoryPres::index_checked(const std::string& label) const {
    auto a = index_of(label);
    if (!a) fail(ErrorKind::ParseError, "unknown label '" + label + "'");
    return *a;
}

std::vector<std::array<std::size_t, 3>> CategoryPres::f_rows(std::size_t a, std::size_t b, std::size_t c,
                                                             std::size_t d) const {
    std::vector<std::array<std::size_t, 3>> r;
    for (std::size_t e = 0; e < rank(); ++e)
        for (int mu = 0; mu < N(a, b, e); ++mu)
            for (int nu = 0; nu < N(e, c, d); ++nu)
                r.push_back({e, static_cast<std::size_t>(mu), static_cast<std::size_t>(nu)});
    return r;
}

std::vector<std::array<std::size_t, 3>> CategoryPres::f_cols(std::size_t a, std::size_t b, std::size_t c,
                                                             std::size_t d) const {
    std::vector<std::array<std::size_t, 3>> r;
    for (std::size_t f = 0; f < rank(); ++f)
        for (int rho = 0; rho < N(b, c, f); ++rho)
            for (int sigma = 0; sigma < N(a, f, d); ++sigma)
                r.push_back({f, static_cast<std::size_t>(rho), static_cast<std::size_t>(sigma)});
    return r;
}

Matrix CategoryPres::f_matrix(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const {
    auto it = F.find({a, b, c, d});
    if (it != F.end()) return it->second;
    return Matrix::identity(field, f_rows(a, b, c, d).size());
}

// ---------------------------------------------------------------------------
// Mor

bool Mor::is_zero() const {
    return std::all_of(blocks.begin(), blocks.end(), [](const Matrix& m) { return m.is_zero(); });
}

Mor Mor::operator*(const Scalar& s) const {
    Mor r = *this;
    for (auto& b : r.blocks) b = b * s;
    return r;
}

Mor operator+(const Mor& f, const Mor& g) {
    if (f.src != g.src || f.dst != g.dst) fail(ErrorKind::ShapeMismatch, "sum of non-parallel morphisms");
    Mor r = f;
    for (std::size_t a = 0; a < r.blocks.size(); ++a) r.blocks[a] += g.blocks[a];
    return r;
}

Mor operator-(const Mor& f, const Mor& g) {
    if (f.src != g.src || f.dst != g.dst) fail(ErrorKind::ShapeMismatch, "difference of non-parallel morphisms");
    Mor r = f;
    for (std::size_t a = 0; a < r.blocks.size(); ++a) r.blocks[a] -= g.blocks[a];
    return r;
}

bool operator==(const Mor& f, const Mor& g) {
    if (f.src != g.src || f.dst != g.dst) return false;
    for (std::size_t a = 0; a < f.blocks.size(); ++a)
        if (f.blocks[a] != g.blocks[a]) return false;
    return true;
}

// ---------------------------------------------------------------------------
// TensorBasis

TensorBasis::TensorBasis(const CategoryPres& c, const Obj& x, const Obj& y)
    : L_(c.rank()), ymult_(y.mult), base_(L_ * L_, 0), stride_(L_ * L_, 0), pre_(L_ * L_ * L_, 0), n_(c.fusion) {
    obj_.mult.assign(L_, 0);
    for (std::size_t cc = 0; cc < L_; ++cc) {
        std::size_t running = 0;
        for (std::size_t a = 0; a < L_; ++a) {
            std::size_t stride = 0;
            for (std::size_t b = 0; b < L_; ++b) {
                pre_[(a * L_ + b) * L_ + cc] = stride;
                stride += static_cast<std::size_t>(y[b] * c.N(a, b, cc));
            }
            stride_[a * L_ + cc] = stride;
            base_[a * L_ + cc] = running;
            running += static_cast<std::size_t>(x[a]) * stride;
        }
        obj_.mult[cc] = static_cast<int>(running);
    }
}

std::size_t TensorBasis::index(std::size_t c, std::size_t a, std::size_t i, std::size_t b, std::size_t j,
                               std::size_t mu) const {
    const std::size_t n = static_cast<std::size_t>(n_[(a * L_ + b) * L_ + c]);
    return base_[a * L_ + c] + i * stride_[a * L_ + c] + pre_[(a * L_ + b) * L_ + c] + j * n + mu;
}

// ---------------------------------------------------------------------------
// Objects

Obj zero_obj(const CategoryPres& c) { return Obj{std::vector<int>(c.rank(), 0)}; }

Obj unit_obj(const CategoryPres& c) {
    Obj o = zero_obj(c);
    for (auto e : c.units) o.mult[e] = 1;
    return o;
}

Obj simple_obj(const CategoryPres& c, std::size_t a) {
    Obj o = zero_obj(c);
    o.mult.at(a) = 1;
    return o;
}

Obj dsum(const Obj& x, const Obj& y) {
    Obj o = x;
    for (std::size_t a = 0; a < o.mult.size(); ++a) o.mult[a] += y.mult[a];
    return o;
}

Obj scale(const Obj& x, int n) {
    Obj o = x;
    for (auto& m : o.mult) m *= n;
    return o;
}

Obj tensor_obj(const CategoryPres& c, const Obj& x, const Obj& y) {
    const std::size_t L = c.rank();
    Obj o = zero_obj(c);
    for (std::size_t a = 0; a < L; ++a) {
        if (x[a] == 0) continue;
        for (std::size_t b = 0; b < L; ++b) {
            if (y[b] == 0) continue;
            for (std::size_t cc = 0; cc < L; ++cc) o.mult[cc] += x[a] * y[b] * c.N(a, b, cc);
        }
    }
    return o;
}

Obj dual_r(const CategoryPres& c, const Obj& x) {
    Obj o = zero_obj(c);
    for (std::size_t a = 0; a < c.rank(); ++a) o.mult[c.dual_r[a]] = x[a];
    return o;
}

Obj dual_l(const CategoryPres& c, const Obj& x) {
    Obj o = zero_obj(c);
    for (std::size_t a = 0; a < c.rank(); ++a) o.mult[c.dual_l(a)] = x[a];
    return o;
}

int hom_dim(const Obj& x, const Obj& y) {
    int d = 0;
    for (std::size_t a = 0; a < x.mult.size(); ++a) d += x[a] * y[a];
    return d;
}

std::string to_string(const CategoryPres& c, const Obj& x) {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (std::size_t a = 0; a < c.rank(); ++a) {
        if (x[a] == 0) continue;
        if (!first) out << ", ";
        first = false;
        out << c.labels[a] << ":" << x[a];
    }
    out << "}";
    return out.str();
}

// ---------------------------------------------------------------------------
// Morphisms

Mor zero_mor(const CategoryPres& c, const Obj& x, const Obj& y) {
    Mor m{x, y, {}};
    for (std::size_t a = 0; a < c.rank(); ++a)
        m.blocks.emplace_back(c.field, static_cast<std::size_t>(y[a]), static_cast<std::size_t>(x[a]));
    return m;
}

Mor id(const CategoryPres& c, const Obj& x) {
    Mor m{x, x, {}};
    for (std::size_t a = 0; a < c.rank(); ++a)
        m.blocks.push_back(Matrix::identity(c.field, static_cast<std::size_t>(x[a])));
    return m;
}

Mor compose(const Mor& f, const Mor& g) {
    if (g.dst != f.src) fail(ErrorKind::ShapeMismatch, "composition through different objects");
    Mor m{g.src, f.dst, {}};
    for (std::size_t a = 0; a < f.blocks.size(); ++a) m.blocks.push_back(f.blocks[a] * g.blocks[a]);
    return m;
}

Mor dsum(const CategoryPres& c, const Mor& f, const Mor& g) {
    Mor m = zero_mor(c, dsum(f.src, g.src), dsum(f.dst, g.dst));
    for (std::size_t a = 0; a < c.rank(); ++a) {
        const Matrix& x = f.blocks[a];
        const Matrix& y = g.blocks[a];
        for (std::size_t i = 0; i < x.rows(); ++i)
            for (std::size_t j = 0; j < x.cols(); ++j) m.blocks[a](i, j) = x(i, j);
        for (std::size_t i = 0; i < y.rows(); ++i)
            for (std::size_t j = 0; j < y.cols(); ++j) m.blocks[a](x.rows() + i, x.cols() + j) = y(i, j);
    }
    return m;
}

Mor tensor_mor(const CategoryPres& c, const Mor& f, const Mor& g) {
    const std::size_t L = c.rank();
    TensorBasis sb(c, f.src, g.src), db(c, f.dst, g.dst);
    Mor m = zero_mor(c, sb.obj(), db.obj());
    for (std::size_t cc = 0; cc < L; ++cc)
        for (std::size_t a = 0; a < L; ++a) {
            const Matrix& fa = f.blocks[a];
            if (fa.rows() == 0 || fa.cols() == 0) continue;
            for (std::size_t b = 0; b < L; ++b) {
                const int n = c.N(a, b, cc);
                const Matrix& gb = g.blocks[b];
                if (n == 0 || gb.rows() == 0 || gb.cols() == 0) continue;
                for (std::size_t i = 0; i < fa.cols(); ++i)
                    for (std::size_t i2 = 0; i2 < fa.rows(); ++i2) {
                        const Scalar& x = fa(i2, i);
                        if (x.is_zero()) continue;
                        for (std::size_t j = 0; j < gb.cols(); ++j)
                            for (std::size_t j2 = 0; j2 < gb.rows(); ++j2) {
                                const Scalar& y = gb(j2, j);
                                if (y.is_zero()) continue;
                                Scalar v = x * y;
                                for (int mu = 0; mu < n; ++mu)
                                    m.blocks[cc](db.index(cc, a, i2, b, j2, static_cast<std::size_t>(mu)),
                                                 sb.index(cc, a, i, b, j, static_cast<std::size_t>(mu))) = v;
                            }
                    }
            }
        }
    return m;
}

namespace {

Mor associator_impl(const CategoryPres& c, const Obj& x, const Obj& y, const Obj& z, bool inverse) {
    const std::size_t L = c.rank();
    TensorBasis xy(c, x, y), yz(c, y, z);
    TensorBasis left(c, xy.obj(), z), right(c, x, yz.obj());
    Mor m = inverse ? zero_mor(c, right.obj(), left.obj()) : zero_mor(c, left.obj(), right.obj());
    for (std::size_t d = 0; d < L; ++d)
        for (std::size_t a = 0; a < L; ++a) {
            if (x[a] == 0) continue;
            for (std::size_t b = 0; b < L; ++b) {
                if (y[b] == 0) continue;
                for (std::size_t cc = 0; cc < L; ++cc) {
                    if (z[cc] == 0) continue;
                    auto rows = c.f_rows(a, b, cc, d);
                    if (rows.empty()) continue;
                    auto cols = c.f_cols(a, b, cc, d);
                    Matrix fm = c.f_matrix(a, b, cc, d);
                    if (inverse) {
                        auto inv = tensorcat::inverse(fm);
                        if (!inv) fail(ErrorKind::ValidationFailure, "singular F-symbol");
                        fm = *inv;
                    }
                    for (std::size_t i = 0; i < static_cast<std::size_t>(x[a]); ++i)
                        for (std::size_t j = 0; j < static_cast<std::size_t>(y[b]); ++j)
                            for (std::size_t l = 0; l < static_cast<std::size_t>(z[cc]); ++l) {
                                std::vector<std::size_t> li, ri;
                                for (const auto& [e, mu, nu] : rows)
                                    li.push_back(left.index(d, e, xy.index(e, a, i, b, j, mu), cc, l, nu));
                                for (const auto& [f, rho, sigma] : cols)
                                    ri.push_back(right.index(d, a, i, f, yz.index(f, b, j, cc, l, rho), sigma));
                                // forward: M[col s][row r] = F(r, s); inverse: M'[row r][col s] = F^{-1}(s, r)
                                for (std::size_t r = 0; r < rows.size(); ++r)
                                    for (std::size_t s = 0; s < cols.size(); ++s) {
                                        if (inverse)
                                            m.blocks[d](li[r], ri[s]) = fm(s, r);
                                        else
                                            m.blocks[d](ri[s], li[r]) = fm(r, s);
                                    }
                            }
                }
            }
        }
    return m;
}

}  // namespace

Mor associator(const CategoryPres& c, const Obj& x, const Obj& y, const Obj& z) {
    return associator_impl(c, x, y, z, false);
}

Mor associator_inv(const CategoryPres& c, const Obj& x, const Obj& y, const Obj& z) {
    return associator_impl(c, x, y, z, true);
}

std::vector<Mor> hom_basis(const CategoryPres& c, const Obj& x, const Obj& y) {
    std::vector<Mor> out;
    for (std::size_t a = 0; a < c.rank(); ++a)
        for (std::size_t r = 0; r < static_cast<std::size_t>(y[a]); ++r)
            for (std::size_t s = 0; s < static_cast<std::size_t>(x[a]); ++s) {
                Mor m = zero_mor(c, x, y);
                m.blocks[a](r, s) = c.field.one();
                out.push_back(std::move(m));
            }
    return out;
}

Vec flatten(const Mor& f) {
    Vec v;
    for (const auto& b : f.blocks) v.insert(v.end(), b.entries().begin(), b.entries().end());
    return v;
}

Mor unflatten(const CategoryPres& c, const Obj& x, const Obj& y, const Vec& v) {
    Mor m = zero_mor(c, x, y);
    std::size_t k = 0;
    for (auto& b : m.blocks)
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) = v.at(k++);
    if (k != v.size()) fail(ErrorKind::ShapeMismatch, "coordinate vector does not match Hom space");
    return m;
}

Mor inclusion_first(const CategoryPres& c, const Obj& x, const Obj& y) {
    Mor m = zero_mor(c, x, dsum(x, y));
    for (std::size_t a = 0; a < c.rank(); ++a)
        for (std::size_t i = 0; i < static_cast<std::size_t>(x[a]); ++i) m.blocks[a](i, i) = c.field.one();
    return m;
}

Mor inclusion_second(const CategoryPres& c, const Obj& x, const Obj& y) {
    Mor m = zero_mor(c, y, dsum(x, y));
    for (std::size_t a = 0; a < c.rank(); ++a)
        for (std::size_t i = 0; i < static_cast<std::size_t>(y[a]); ++i)
            m.blocks[a](static_cast<std::size_t>(x[a]) + i, i) = c.field.one();
    return m;
}

Mor projection_first(const CategoryPres& c, const Obj& x, const Obj& y) {
    Mor m = zero_mor(c, dsum(x, y), x);
    for (std::size_t a = 0; a < c.rank(); ++a)
        for (std::size_t i = 0; i < static_cast<std::size_t>(x[a]); ++i) m.blocks[a](i, i) = c.field.one();
    return m;
}

Mor projection_second(const CategoryPres& c, const Obj& x, const Obj& y) {
    Mor m = zero_mor(c, dsum(x, y), y);
    for (std::size_t a = 0; a < c.rank(); ++a)
        for (std::size_t i = 0; i < static_cast<std::size_t>(y[a]); ++i)
            m.blocks[a](i, static_cast<std::size_t>(x[a]) + i) = c.field.one();
    return m;
}

ImageSplit split_idempotent(const CategoryPres& c, const Mor& idem) {
    const Obj& x = idem.src;
    Obj im = zero_obj(c);
    std::vector<Matrix> inc, proj;
    for (std::size_t l = 0; l < c.rank(); ++l) {
        const std::size_t n = static_cast<std::size_t>(x[l]);
        std::vector<Vec> cols;
        for (std::size_t k = 0; k < n; ++k) cols.push_back(idem.blocks[l].col(k));
        std::vector<Vec> basis;
        if (n > 0) {
            Rref r = rref(Matrix::from_rows(c.field, cols, n));
            for (std::size_t i = 0; i < r.pivots.size(); ++i) basis.push_back(r.reduced.row(i));
        }
        im.mult[l] = static_cast<int>(basis.size());
        if (basis.empty()) {
            inc.emplace_back(c.field, n, 0);
            proj.emplace_back(c.field, 0, n);
            continue;
        }
        inc.push_back(Matrix::from_columns(c.field, basis, n));
        Coordinates co(c.field, basis, n);
        std::vector<Vec> pc;
        for (const Vec& v : cols) pc.push_back(co.of_checked(v));
        proj.push_back(Matrix::from_columns(c.field, pc, basis.size()));
    }
    return ImageSplit{im, Mor{im, x, std::move(inc)}, Mor{x, im, std::move(proj)}};
}

// ---------------------------------------------------------------------------
// Duality

namespace {

// Left duality coefficients of a: (u'_a, v'_a), normalized.
std::pair<Vec, Vec> left_data(const CategoryPres& c, std::size_t a) {
    const std::size_t b = c.dual_l(a);
    Vec u = c.cup[b], v = c.cap[b];
    auto it = std::find_if(u.begin(), u.end(), [](const Scalar& s) { return !s.is_zero(); });
    if (it == u.end()) fail(ErrorKind::SnakeUnsolvable, "zero coevaluation for " + c.labels[b]);
    Scalar lead = *it;
    Scalar inv = lead.inv();
    for (auto& s : u) s *= inv;
    for (auto& s : v) s *= lead;
    return {u, v};
}

// Places coefficient vectors per copy: pairs (first label, second label) with
// shared copy index.
Mor place_coev(const CategoryPres& c, const Obj& left, const Obj& right, const Obj& x,
               const std::vector<std::size_t>& first, const std::vector<std::size_t>& second,
               const std::vector<Vec>& coeffs) {
    TensorBasis tb(c, left, right);
    Mor m = zero_mor(c, unit_obj(c), tb.obj());
    for (std::size_t a = 0; a < c.rank(); ++a)
        for (std::size_t i = 0; i < static_cast<std::size_t>(x[a]); ++i) {
            std::size_t k = 0;
            for (auto e : c.units)
                for (int mu = 0; mu < c.N(first[a], second[a], e); ++mu, ++k)
                    m.blocks[e](tb.index(e, first[a], i, second[a], i, static_cast<std::size_t>(mu)), 0) =
                        coeffs[a].at(k);
        }
    return m;
}

Mor place_ev(const CategoryPres& c, const Obj& left, const Obj& right, const Obj& x,
             const std::vector<std::size_t>& first, const std::vector<std::size_t>& second,
             const std::vector<Vec>& coeffs) {
    TensorBasis tb(c, left, right);
    Mor m = zero_mor(c, tb.obj(), unit_obj(c));
    for (std::size_t a = 0; a < c.rank(); ++a)
        for (std::size_t i = 0; i < static_cast<std::size_t>(x[a]); ++i) {
            std::size_t k = 0;
            for (auto e : c.units)
                for (int mu = 0; mu < c.N(first[a], second[a], e); ++mu, ++k)
                    m.blocks[e](0, tb.index(e, first[a], i, second[a], i, static_cast<std::size_t>(mu))) =
                        coeffs[a].at(k);
        }
    return m;
}

std::vector<std::size_t> identity_labels(const CategoryPres& c) {
    std::vector<std::size_t> v(c.rank());
    for (std::size_t a = 0; a < c.rank(); ++a) v[a] = a;
    return v;
}

std::vector<std::size_t> dual_l_labels(const CategoryPres& c) {
    std::vector<std::size_t> v(c.rank());
    for (std::size_t a = 0; a < c.rank(); ++a) v[a] = c.dual_l(a);
    return v;
}

}  // namespace

Mor coev_r(const CategoryPres& c, const Obj& x) {
    return place_coev(c, dual_r(c, x), x, x, c.dual_r, identity_labels(c), c.cup);
}

Mor ev_r(const CategoryPres& c, const Obj& x) {
    return place_ev(c, x, dual_r(c, x), x, identity_labels(c), c.dual_r, c.cap);
}

Mor coev_l(const CategoryPres& c, const Obj& x) {
    std::vector<Vec> u;
    for (std::size_t a = 0; a < c.rank(); ++a) u.push_back(x[a] ? left_data(c, a).first : Vec{});
    return place_coev(c, x, dual_l(c, x), x, identity_labels(c), dual_l_labels(c), u);
}

Mor ev_l(const CategoryPres& c, const Obj& x) {
    std::vector<Vec> v;
    for (std::size_t a = 0; a < c.rank(); ++a) v.push_back(x[a] ? left_data(c, a).second : Vec{});
    return place_ev(c, dual_l(c, x), x, x, dual_l_labels(c), identity_labels(c), v);
}

Mor mate_right(const CategoryPres& c, const Mor& h, const Obj& x, const Obj& y) {
    const Obj yl = dual_l(c, y);
    Mor step1 = tensor_mor(c, id(c, x), coev_l(c, y));
    step1.src = x;  // X (x) 1 = X
    Mor step2 = associator_inv(c, x, y, yl);
    Mor step3 = tensor_mor(c, h, id(c, yl));
    return compose(step3, compose(step2, step1));
}

Mor unmate_right(const CategoryPres& c, const Mor& k, const Obj& z, const Obj& y) {
    const Obj yl = dual_l(c, y);
    Mor step1 = tensor_mor(c, k, id(c, y));
    Mor step2 = associator(c, z, yl, y);
    Mor step3 = tensor_mor(c, id(c, z), ev_l(c, y));
    Mor r = compose(step3, compose(step2, step1));
    r.dst = z;
    return r;
}

Mor mate_left(const CategoryPres& c, const Mor& h, const Obj& x, const Obj& y) {
    const Obj xr = dual_r(c, x);
    Mor step1 = tensor_mor(c, coev_r(c, x), id(c, y));
    step1.src = y;  // 1 (x) Y = Y
    Mor step2 = associator(c, xr, x, y);
    Mor step3 = tensor_mor(c, id(c, xr), h);
    return compose(step3, compose(step2, step1));
}

Mor unmate_left(const CategoryPres& c, const Mor& k, const Obj& x, const Obj& z) {
    const Obj xr = dual_r(c, x);
    Mor step1 = tensor_mor(c, id(c, x), k);
    Mor step2 = associator_inv(c, x, xr, z);
    Mor step3 = tensor_mor(c, ev_r(c, x), id(c, z));
    Mor r = compose(step3, compose(step2, step1));
    r.dst = z;
    return r;
}

// ---------------------------------------------------------------------------
// Validation

namespace {

struct Violation {
    std::string what;
};

[[noreturn]] void violation(const std::string& what) { throw Violation{what}; }

std::string quad(const CategoryPres& c, std::size_t a, std::size_t b, std::size_t d, std::size_t e) {
    return "(" + c.labels[a] + "," + c.labels[b] + "," + c.labels[d] + "," + c.labels[e] + ")";
}

void check_structure(const CategoryPres& c) {
    const std::size_t L = c.rank();
    if (L == 0) violation("no labels");
    for (std::size_t a = 0; a < L; ++a)
        for (std::size_t b = a + 1; b < L; ++b)
            if (c.labels[a] == c.labels[b]) violation("duplicate label " + c.labels[a]);
    if (c.units.empty()) violation("no unit components");
    for (std::size_t k = 0; k < c.units.size(); ++k) {
        if (c.units[k] >= L) violation("unit component out of range");
        if (k > 0 && c.units[k] <= c.units[k - 1]) violation("unit components must be sorted and distinct");
    }
    if (c.dual_r.size() != L) violation("dualR must list every label");
    std::vector<bool> seen(L, false);
    for (auto b : c.dual_r) {
        if (b >= L || seen[b]) violation("dualR is not a bijection");
        seen[b] = true;
    }
    if (c.fusion.size() != L * L * L) violation("fusion table has the wrong size");
    for (int n : c.fusion)
        if (n < 0) violation("negative fusion multiplicity");
    if (c.cup.size() != L || c.cap.size() != L) violation("cup/cap data must list every label");
}

void check_units(const CategoryPres& c) {
    const std::size_t L = c.rank();
    for (auto ei : c.units)
        for (auto ej : c.units)
            for (auto el : c.units)
                if (c.N(ei, ej, el) != ((ei == ej && ej == el) ? 1 : 0))
                    violation("unit components are not orthogonal idempotents at (" + c.labels[ei] + "," +
                              c.labels[ej] + "," + c.labels[el] + ")");
    for (std::size_t a = 0; a < L; ++a)
        for (std::size_t b = 0; b < L; ++b) {
            int left = 0, right = 0;
            for (auto e : c.units) {
                left += c.N(e, a, b);
                right += c.N(a, e, b);
            }
            const int want = a == b ? 1 : 0;
            if (left != want || right != want)
                violation("unit law fails for label " + c.labels[a] + " into " + c.labels[b]);
        }
    for (std::size_t a = 0; a < L; ++a) {
        int nr = 0, nl = 0;
        for (auto e : c.units) {
            nr += c.N(c.dual_r[a], a, e);
            nl += c.N(a, c.dual_r[a], e);
        }
        if (nr == 0 || nl == 0) violation("dualR(" + c.labels[a] + ") does not pair with " + c.labels[a]);
        if (c.cup[a].size() != static_cast<std::size_t>(nr))
            violation("cup for " + c.labels[a] + " has " + std::to_string(c.cup[a].size()) + " entries, expected " +
                      std::to_string(nr));
        if (c.cap[a].size() != static_cast<std::size_t>(nl))
            violation("cap for " + c.labels[a] + " has " + std::to_string(c.cap[a].size()) + " entries, expected " +
                      std::to_string(nl));
        for (const auto& s : c.cup[a]) require_same_field(c.field, s.field());
        for (const auto& s : c.cap[a]) require_same_field(c.field, s.field());
    }
}

void check_fusion_associativity(const CategoryPres& c) {
    const std::size_t L = c.rank();
    for (std::size_t a = 0; a < L; ++a)
        for (std::size_t b = 0; b < L; ++b)
            for (std::size_t cc = 0; cc < L; ++cc)
                for (std::size_t d = 0; d < L; ++d) {
                    int lhs = 0, rhs = 0;
                    for (std::size_t e = 0; e < L; ++e) {
                        lhs += c.N(a, b, e) * c.N(e, cc, d);
                        rhs += c.N(b, cc, e) * c.N(a, e, d);
                    }
                    if (lhs != rhs) violation("fusion rules are not associative at " + quad(c, a, b, cc, d));
                }
}

void check_f_blocks(const CategoryPres& c) {
    for (const auto& [key, m] : c.F) {
        const auto [a, b, cc, d] = key;
        if (std::max({a, b, cc, d}) >= c.rank()) violation("F block with label out of range");
        require_same_field(c.field, m.field());
        const std::size_t nr = c.f_rows(a, b, cc, d).size(), nc = c.f_cols(a, b, cc, d).size();
        if (m.rows() != nr || m.cols() != nc)
            violation("F block " + quad(c, a, b, cc, d) + " has shape " + std::to_string(m.rows()) + "x" +
                      std::to_string(m.cols()) + ", expected " + std::to_string(nr) + "x" + std::to_string(nc));
        if (nr == 0) continue;
        if (!inverse(m)) violation("F block " + quad(c, a, b, cc, d) + " is singular");
        if ((c.is_unit(a) || c.is_unit(b) || c.is_unit(cc)) && m != Matrix::identity(c.field, nr))
            violation("F block " + quad(c, a, b, cc, d) + " has a unit factor but is not the identity");
    }
}

std::size_t check_pentagons(const CategoryPres& c) {
    const std::size_t L = c.rank();
    std::size_t count = 0;
    for (std::size_t a = 0; a < L; ++a)
        for (std::size_t b = 0; b < L; ++b)
            for (std::size_t cc = 0; cc < L; ++cc)
                for (std::size_t d = 0; d < L; ++d) {
                    Obj x = simple_obj(c, a), y = simple_obj(c, b), z = simple_obj(c, cc), w = simple_obj(c, d);
                    Obj xy = tensor_obj(c, x, y), zw = tensor_obj(c, z, w), yz = tensor_obj(c, y, z);
                    if (tensor_obj(c, xy, zw).is_zero()) continue;
                    Mor p1 = compose(associator(c, x, y, zw), associator(c, xy, z, w));
                    Mor p2 = compose(tensor_mor(c, id(c, x), associator(c, y, z, w)),
                                     compose(associator(c, x, yz, w), tensor_mor(c, associator(c, x, y, z), id(c, w))));
                    ++count;
                    if (p1 != p2) violation("pentagon fails at " + quad(c, a, b, cc, d));
                }
    return count;
}

std::size_t check_snakes(const CategoryPres& c) {
    std::size_t count = 0;
    for (std::size_t a = 0; a < c.rank(); ++a) {
        Obj x = simple_obj(c, a);
        Obj xr = dual_r(c, x), xl = dual_l(c, x);
        // x -> x (x) (x^R (x) x) -> (x (x) x^R) (x) x -> x
        Mor s1 = tensor_mor(c, id(c, x), coev_r(c, x));
        s1.src = x;
        Mor t1 = compose(tensor_mor(c, ev_r(c, x), id(c, x)), compose(associator_inv(c, x, xr, x), s1));
        t1.dst = x;
        if (t1 != id(c, x)) violation("first snake equation fails for " + c.labels[a]);
        // x^R -> (x^R (x) x) (x) x^R -> x^R (x) (x (x) x^R) -> x^R
        Mor s2 = tensor_mor(c, coev_r(c, x), id(c, xr));
        s2.src = xr;
        Mor t2 = compose(tensor_mor(c, id(c, xr), ev_r(c, x)), compose(associator(c, xr, x, xr), s2));
        t2.dst = xr;
        if (t2 != id(c, xr)) violation("second snake equation fails for " + c.labels[a]);
        // left duality, same shapes with x^L (x) x -> 1 and 1 -> x (x) x^L
        Mor s3 = tensor_mor(c, coev_l(c, x), id(c, x));
        s3.src = x;
        Mor t3 = compose(tensor_mor(c, id(c, x), ev_l(c, x)), compose(associator(c, x, xl, x), s3));
        t3.dst = x;
        if (t3 != id(c, x)) violation("left snake equation fails for " + c.labels[a]);
        count += 3;
    }
    return count;
}

}  // namespace

ValidationReport validate_category(const CategoryPres& c) {
    ValidationReport r;
    try {
        check_structure(c);
        check_units(c);
        check_fusion_associativity(c);
        check_f_blocks(c);
        r.pentagons = check_pentagons(c);
        r.snakes = check_snakes(c);
    } catch (const Violation& v) {
        r.ok = false;
        r.failure = v.what;
    } catch (const Error& e) {
        r.ok = false;
        r.failure = e.what();
    }
    return r;
}

void require_valid(const CategoryPres& c) {
    ValidationReport r = validate_category(c);
    if (!r.ok) fail(ErrorKind::ValidationFailure, c.name.empty() ? r.failure : c.name + ": " + r.failure);
}

CategoryPres scalar_extend(const CategoryPres& c, const Embedding& e) {
    require_same_field(c.field, e.source());
    CategoryPres r(e.target());
    r.name = c.name;
    r.labels = c.labels;
    r.units = c.units;
    r.dual_r = c.dual_r;
    r.fusion = c.fusion;
    for (const auto& [k, m] : c.F) r.F.emplace(k, e(m));
    for (const auto& v : c.cup) {
        Vec w;
        for (const auto& s : v) w.push_back(e(s));
        r.cup.push_back(std::move(w));
    }
    for (const auto& v : c.cap) {
        Vec w;
        for (const auto& s : v) w.push_back(e(s));
        r.cap.push_back(std::move(w));
    }
    return r;
}

Mor embed_mor(const Mor& f, const Embedding& e) {
    Mor r{f.src, f.dst, {}};
    for (const auto& b : f.blocks) r.blocks.push_back(e(b));
    return r;
}

}  // namespace tensorcat
