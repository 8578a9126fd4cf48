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

#include "tensorcat/exactfield.hpp"

namespace tensorcat {

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : f_(std::move(f)), r_(rows), c_(cols), e_(rows * cols, f_.zero()) {}

Matrix Matrix::identity(const Field& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
    return m;
}

Matrix Matrix::from_rows(const Field& f, const std::vector<Vec>& rows, std::size_t cols) {
    Matrix m(f, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) fail(ErrorKind::ShapeMismatch, "row length mismatch");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::from_columns(const Field& f, const std::vector<Vec>& cols, std::size_t rows) {
    Matrix m(f, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) fail(ErrorKind::ShapeMismatch, "column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

Vec Matrix::row(std::size_t i) const { return Vec(e_.begin() + i * c_, e_.begin() + (i + 1) * c_); }

Vec Matrix::col(std::size_t j) const {
    Vec v;
    v.reserve(r_);
    for (std::size_t i = 0; i < r_; ++i) v.push_back((*this)(i, j));
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(f_, c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

Scalar Matrix::trace() const {
    if (r_ != c_) fail(ErrorKind::ShapeMismatch, "trace of a non-square matrix");
    Scalar t = f_.zero();
    for (std::size_t i = 0; i < r_; ++i) t += (*this)(i, i);
    return t;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    require_same_field(f_, o.f_);
    if (r_ != o.r_ || c_ != o.c_) fail(ErrorKind::ShapeMismatch, "matrix sum shape mismatch");
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    require_same_field(f_, o.f_);
    if (r_ != o.r_ || c_ != o.c_) fail(ErrorKind::ShapeMismatch, "matrix difference shape mismatch");
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    require_same_field(a.f_, b.f_);
    if (a.c_ != b.r_)
        fail(ErrorKind::ShapeMismatch, "matrix product " + std::to_string(a.r_) + "x" + std::to_string(a.c_) +
                                           " by " + std::to_string(b.r_) + "x" + std::to_string(b.c_));
    Matrix m(a.f_, a.r_, b.c_);
    for (std::size_t i = 0; i < a.r_; ++i)
        for (std::size_t k = 0; k < a.c_; ++k) {
            const Scalar& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.c_; ++j) {
                const Scalar& y = b(k, j);
                if (!y.is_zero()) m(i, j) += x * y;
            }
        }
    return m;
}

Matrix Matrix::operator*(const Scalar& s) const {
    Matrix m = *this;
    for (auto& x : m.e_) x *= s;
    return m;
}

Vec Matrix::operator*(const Vec& v) const {
    if (v.size() != c_) fail(ErrorKind::ShapeMismatch, "matrix-vector shape mismatch");
    Vec r = zero_vec(f_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) {
            const Scalar& x = (*this)(i, j);
            if (!x.is_zero() && !v[j].is_zero()) r[i] += x * v[j];
        }
    return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
    require_same_field(a.f_, b.f_);
    if (a.r_ != b.r_ || a.c_ != b.c_) return false;
    for (std::size_t k = 0; k < a.e_.size(); ++k)
        if (a.e_[k] != b.e_[k]) return false;
    return true;
}

// ---------------------------------------------------------------------------

Rref rref(Matrix a) {
    const std::size_t rows = a.rows(), cols = a.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a(p, c).is_zero()) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
        Scalar inv = a(r, c).inv();
        for (std::size_t j = c; j < cols; ++j)
            if (!a(r, j).is_zero()) a(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            Scalar factor = a(i, c);
            for (std::size_t j = c; j < cols; ++j)
                if (!a(r, j).is_zero()) a(i, j) -= factor * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& a) { return rref(a).pivots.size(); }

std::vector<Vec> kernel(const Matrix& a) {
    Rref r = rref(a);
    const Field& f = a.field();
    const std::size_t cols = a.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto p : r.pivots) is_pivot[p] = true;
    std::vector<Vec> out;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vec v = zero_vec(f, cols);
        v[free] = f.one();
        for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.reduced(i, free);
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
    if (b.size() != a.rows()) fail(ErrorKind::ShapeMismatch, "right-hand side length mismatch");
    const Field& f = a.field();
    Matrix aug(f, a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    Rref r = rref(std::move(aug));
    if (!r.pivots.empty() && r.pivots.back() == a.cols()) return std::nullopt;
    Vec x = zero_vec(f, a.cols());
    for (std::size_t i = 0; i < r.pivots.size(); ++i) x[r.pivots[i]] = r.reduced(i, a.cols());
    return x;
}

std::optional<Matrix> inverse(const Matrix& a) {
    if (a.rows() != a.cols()) fail(ErrorKind::ShapeMismatch, "inverse of a non-square matrix");
    const std::size_t n = a.rows();
    const Field& f = a.field();
    Matrix aug(f, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = f.one();
    }
    Rref r = rref(std::move(aug));
    if (r.pivots.size() < n || r.pivots[n - 1] != n - 1) return std::nullopt;
    Matrix inv(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
    return inv;
}

Scalar determinant(Matrix a) {
    if (a.rows() != a.cols()) fail(ErrorKind::ShapeMismatch, "determinant of a non-square matrix");
    const std::size_t n = a.rows();
    const Field& f = a.field();
    Scalar det = f.one();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c).is_zero()) ++p;
        if (p == n) return f.zero();
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
            det = -det;
        }
        det *= a(c, c);
        Scalar inv = a(c, c).inv();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a(i, c).is_zero()) continue;
            Scalar factor = a(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) a(i, j) -= factor * a(c, j);
        }
    }
    return det;
}

// ---------------------------------------------------------------------------

Coordinates::Coordinates(const Field& f, const std::vector<Vec>& basis, std::size_t ambient)
    : f_(f), n_(basis.size()), ambient_(ambient), basis_(basis) {
    if (n_ == 0) return;
    // Rows of the (ambient x n) matrix picked by the RREF of its transpose give
    // an invertible n x n restriction.
    Matrix bt = Matrix::from_rows(f, basis, ambient);
    Rref r = rref(bt);
    if (r.pivots.size() != n_) fail(ErrorKind::ValidationFailure, "coordinate basis is linearly dependent");
    rows_ = r.pivots;
    Matrix sub(f, n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t k = 0; k < n_; ++k) sub(i, k) = basis[k][rows_[i]];
    inv_ = inverse(sub);
}

std::optional<Vec> Coordinates::of(const Vec& v) const {
    if (v.size() != ambient_) fail(ErrorKind::ShapeMismatch, "coordinate vector length mismatch");
    if (n_ == 0) {
        if (!is_zero_vec(v)) return std::nullopt;
        return Vec{};
    }
    Vec rhs;
    rhs.reserve(n_);
    for (auto r : rows_) rhs.push_back(v[r]);
    Vec x = *inv_ * rhs;
    // Verify membership in the span.
    Vec back = zero_vec(f_, ambient_);
    for (std::size_t k = 0; k < n_; ++k) {
        if (x[k].is_zero()) continue;
        for (std::size_t i = 0; i < ambient_; ++i)
            if (!basis_[k][i].is_zero()) back[i] += x[k] * basis_[k][i];
    }
    for (std::size_t i = 0; i < ambient_; ++i)
        if (back[i] != v[i]) return std::nullopt;
    return x;
}

Vec Coordinates::of_checked(const Vec& v) const {
    auto x = of(v);
    if (!x) fail(ErrorKind::ValidationFailure, "vector lies outside the expected span");
    return *x;
}

}  // namespace tensorcat
