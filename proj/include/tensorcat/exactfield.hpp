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

/**
 * @file exactfield.hpp
 * @brief Exact arithmetic over Q, F_p and simple extensions k0[t]/(f).
 *
 * A Field is a cheap shared handle. Scalars carry their field and a vector of
 * prime-field coefficients with respect to the power basis 1, t, ..., t^(d-1).
 * Prime-field elements are GMP rationals; in characteristic p they are kept as
 * integer residues in [0, p).
 *
 * Only one extension layer over the prime field exists. Towers have to be
 * given by a primitive element.
 */

#ifndef TENSORCAT_EXACTFIELD_HPP
#define TENSORCAT_EXACTFIELD_HPP

#include <gmpxx.h>

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "tensorcat/error.hpp"

namespace tensorcat {

using Rational = mpq_class;
using Integer = mpz_class;

class Scalar;

namespace detail {
struct FieldData;
}

class Field {
   public:
    static Field rationals();
    static Field prime(unsigned long p);
    /// k0[t]/(minpoly) over the prime field of characteristic `characteristic`.
    /// minpoly is given low-to-high and must be monic and irreducible; this is
    /// verified by factorization and raises InvalidField otherwise.
    static Field extension(unsigned long characteristic, std::vector<Rational> minpoly,
                           std::string generator = "a");

    unsigned long characteristic() const noexcept;
    std::size_t degree() const noexcept;
    bool is_prime_field() const noexcept { return degree() == 1; }
    bool is_finite() const noexcept { return characteristic() != 0; }
    /// Empty for a prime field.
    const std::vector<Rational>& minpoly() const noexcept;
    const std::string& generator_name() const noexcept;
    Field prime_field() const;
    /// Number of elements; only meaningful for finite fields.
    Integer order() const;

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long v) const;
    Scalar from_rational(const Rational& v) const;
    /// The class of t; equals one() for a prime field.
    Scalar generator() const;
    /// Canonical prime-field representative of v.
    Rational reduce(const Rational& v) const;

    std::string describe() const;

    friend bool operator==(const Field& a, const Field& b) noexcept;
    friend bool operator!=(const Field& a, const Field& b) noexcept { return !(a == b); }

   private:
    friend class Scalar;
    explicit Field(std::shared_ptr<const detail::FieldData> d) : d_(std::move(d)) {}
    std::shared_ptr<const detail::FieldData> d_;
};

class Scalar {
   public:
    /// coeffs are reduced into canonical form; length must be <= degree.
    Scalar(Field f, std::vector<Rational> coeffs);

    const Field& field() const noexcept { return f_; }
    const std::vector<Rational>& coeffs() const noexcept { return c_; }
    bool is_zero() const noexcept;
    bool is_one() const noexcept;
    /// True when the element lies in the prime field.
    bool is_prime_element() const noexcept;

    Scalar inv() const;
    Scalar pow(const Integer& e) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o) { return *this *= o.inv(); }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Polynomial form in the generator, e.g. "a + 2" or "1/2".
    std::string to_string() const;

   private:
    Field f_;
    std::vector<Rational> c_;
};

using Vec = std::vector<Scalar>;

void require_same_field(const Field& a, const Field& b);

// ---------------------------------------------------------------------------
// Univariate polynomials over a Field.

class Poly {
   public:
    explicit Poly(Field f) : f_(std::move(f)) {}
    /// Coefficients low-to-high; trailing zeros are trimmed.
    Poly(Field f, std::vector<Scalar> coeffs);
    static Poly constant(const Scalar& c);
    static Poly monomial(const Scalar& c, std::size_t deg);
    static Poly x(const Field& f) { return monomial(f.one(), 1); }
    static Poly from_rationals(const Field& f, const std::vector<Rational>& coeffs);

    const Field& field() const noexcept { return f_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    const std::vector<Scalar>& coeffs() const noexcept { return c_; }
    Scalar coeff(std::size_t i) const;
    Scalar lead() const;

    Poly monic() const;
    Poly derivative() const;
    Scalar eval(const Scalar& x) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator*(const Scalar& s) const;
    Poly operator-() const;
    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    std::string to_string(const std::string& var = "t") const;

   private:
    void trim();
    Field f_;
    std::vector<Scalar> c_;
};

/// (quotient, remainder) with deg r < deg b. b must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
inline Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }
inline Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
/// Monic gcd; gcd(f, 0) = monic(f); gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
/// Returns (g, s, t) with s a + t b = g monic gcd.
std::tuple<Poly, Poly, Poly> ext_gcd(const Poly& a, const Poly& b);
Poly powmod(const Poly& base, const Integer& e, const Poly& mod);

using Factorization = std::vector<std::pair<Poly, int>>;

/// Complete factorization into monic irreducibles over the polynomial's field,
/// sorted by (degree, coefficients). The leading coefficient is dropped.
Factorization factor(const Poly& f);
bool is_irreducible(const Poly& f);
/// Maximal degree the rational factorizer accepts (higher raises DegreeTooLarge).
inline constexpr int kMaxRationalFactorDegree = 12;

// ---------------------------------------------------------------------------
// Dense matrices.

class Matrix {
   public:
    Matrix(Field f, std::size_t rows, std::size_t cols);
    static Matrix identity(const Field& f, std::size_t n);
    static Matrix from_rows(const Field& f, const std::vector<Vec>& rows, std::size_t cols);
    static Matrix from_columns(const Field& f, const std::vector<Vec>& cols, std::size_t rows);

    const Field& field() const noexcept { return f_; }
    std::size_t rows() const noexcept { return r_; }
    std::size_t cols() const noexcept { return c_; }
    Scalar& operator()(std::size_t i, std::size_t j) { return e_[i * c_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return e_[i * c_ + j]; }
    const std::vector<Scalar>& entries() const noexcept { return e_; }

    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;
    Matrix transpose() const;
    bool is_zero() const;
    Scalar trace() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    Matrix operator*(const Scalar& s) const;
    Vec operator*(const Vec& v) const;
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

   private:
    Field f_;
    std::size_t r_, c_;
    std::vector<Scalar> e_;
};

struct Rref {
    Matrix reduced;
    std::vector<std::size_t> pivots;  ///< pivot column of each nonzero row
};

/// Reduced row echelon form; the pivot is the first nonzero entry in the column.
Rref rref(Matrix a);
std::size_t rank(const Matrix& a);
/// Basis of {v : A v = 0}, one vector per free column, in column order.
std::vector<Vec> kernel(const Matrix& a);
/// A particular solution of A x = b, or nullopt when infeasible.
std::optional<Vec> solve(const Matrix& a, const Vec& b);
std::optional<Matrix> inverse(const Matrix& a);
Scalar determinant(Matrix a);

/// Expresses vectors in the span of a fixed linearly independent family.
class Coordinates {
   public:
    Coordinates(const Field& f, const std::vector<Vec>& basis, std::size_t ambient);
    std::size_t size() const noexcept { return n_; }
    /// Coordinates of v, or nullopt if v is outside the span.
    std::optional<Vec> of(const Vec& v) const;
    Vec of_checked(const Vec& v) const;

   private:
    Field f_;
    std::size_t n_, ambient_;
    std::vector<Vec> basis_;
    std::vector<std::size_t> rows_;  // ambient coordinates where basis restriction is invertible
    std::optional<Matrix> inv_;
};

Vec zero_vec(const Field& f, std::size_t n);
bool is_zero_vec(const Vec& v);

// ---------------------------------------------------------------------------
// Field embeddings.

/// A ring homomorphism src -> dst fixed by the image of src's generator.
class Embedding {
   public:
    /// Raises NotAnEmbedding unless `image_of_generator` is a root of src's
    /// minimal polynomial in dst (and characteristics agree).
    Embedding(Field src, Field dst, Scalar image_of_generator);
    static Embedding identity(const Field& f) { return Embedding(f, f, f.generator()); }

    const Field& source() const noexcept { return src_; }
    const Field& target() const noexcept { return dst_; }
    const Scalar& image_of_generator() const noexcept { return img_; }
    Scalar operator()(const Scalar& x) const;
    Matrix operator()(const Matrix& m) const;

   private:
    Field src_, dst_;
    Scalar img_;
};

/// Roots in `dst` of src's minimal polynomial, found by factorization.
std::vector<Scalar> generator_images(const Field& src, const Field& dst);

/// Smallest (lexicographic) monic irreducible of the given degree over F_p.
std::vector<Rational> find_irreducible(unsigned long p, std::size_t degree);

/// Decimal approximation of a scalar, evaluating the generator at the largest
/// real root of its minimal polynomial. nullopt if there is no real root.
std::optional<double> approximate(const Scalar& s);

}  // namespace tensorcat

#endif
