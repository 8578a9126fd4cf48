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
 * @file artin.hpp
 * @brief Finite-dimensional associative algebras over exact fields.
 *
 * Elements are coordinate vectors in a fixed basis e_0, ..., e_{n-1}.
 * left[i] is the matrix of y -> e_i y, so column j holds e_i e_j. Modules are
 * right modules: act[i] is the matrix of v -> v e_i, hence
 * act(e_i e_j) = act[j] act[i].
 */

#ifndef TENSORCAT_ARTIN_HPP
#define TENSORCAT_ARTIN_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "tensorcat/exactfield.hpp"

namespace tensorcat {

enum class Verdict { False, True, Undetermined };
const char* to_string(Verdict v) noexcept;
inline Verdict verdict(bool b) { return b ? Verdict::True : Verdict::False; }

/// Candidate budget for deterministic searches; TENSORCAT_BUDGET overrides.
std::size_t search_budget();
inline constexpr std::size_t kDefaultSearchBudget = 4096;

struct OrdAlgebra {
    Field field;
    std::size_t dim = 0;
    std::vector<Matrix> left;
    Vec unit;

    OrdAlgebra(Field f, std::size_t n);
    /// Builds left[] from products prod(i, j) = e_i e_j.
    static OrdAlgebra from_products(const Field& f, std::size_t n, const std::function<Vec(std::size_t, std::size_t)>& prod,
                                    Vec unit);
    Vec basis(std::size_t i) const;
    Vec mul(const Vec& x, const Vec& y) const;
    Matrix left_mult(const Vec& x) const;
    Matrix right_mult(const Vec& x) const;
    bool is_commutative() const;
};

/// Associativity and both unit laws; throws ValidationFailure.
void validate(const OrdAlgebra& e);

struct OrdModule {
    std::size_t dim = 0;
    std::vector<Matrix> act;
};

void validate(const OrdAlgebra& e, const OrdModule& m);
Matrix action_of(const OrdAlgebra& e, const OrdModule& m, const Vec& x);
OrdModule regular_module(const OrdAlgebra& e);

// Examples

OrdAlgebra cyclic_group_algebra(const Field& f, std::size_t n);
/// Matrix units E_ij at index i * n + j.
OrdAlgebra matrix_algebra(const Field& f, std::size_t n);
OrdAlgebra upper_triangular(const Field& f, std::size_t n);
/// (a, b) with i^2 = a, j^2 = b, ij = -ji; basis 1, i, j, ij.
OrdAlgebra quaternion_algebra(const Field& f, const Scalar& a, const Scalar& b);
/// k[t]/(f) in the power basis.
OrdAlgebra quotient_algebra(const Poly& f);
OrdAlgebra product(const OrdAlgebra& a, const OrdAlgebra& b);

// Structure

std::vector<Vec> radical(const OrdAlgebra& e);
bool is_semisimple(const OrdAlgebra& e);
std::vector<Vec> center(const OrdAlgebra& e);
/// Minimal polynomial of x inside the algebra with unit `one`.
Poly minimal_polynomial(const OrdAlgebra& e, const Vec& x, const Vec& one);
/// Primitive central idempotents; requires a semisimple algebra.
std::vector<Vec> central_idempotents(const OrdAlgebra& e);
/// A complete set of orthogonal primitive idempotents, lifted through the
/// radical when the algebra is not semisimple.
std::vector<Vec> primitive_idempotents(const OrdAlgebra& e);
/// e E e with its basis written in E.
std::pair<OrdAlgebra, std::vector<Vec>> corner(const OrdAlgebra& e, const Vec& idem);

// Modules

std::vector<Matrix> module_hom(const OrdAlgebra& e, const OrdModule& m, const OrdModule& n);
/// End_E(M) with composition as product; basis elements are matrices.
std::pair<OrdAlgebra, std::vector<Matrix>> endomorphism_algebra(const OrdAlgebra& e, const OrdModule& m);
/// The submodule spanned by the columns of `basis`.
OrdModule submodule(const OrdModule& m, const std::vector<Vec>& basis);
Verdict module_is_simple(const OrdAlgebra& e, const OrdModule& m);
std::vector<std::pair<OrdModule, int>> decompose_module(const OrdAlgebra& e, const OrdModule& m);

// Division and separability

Verdict is_division(const OrdAlgebra& e);
/// Hilbert symbol (a, b) over Q is 1 iff z^2 = a x^2 + b y^2 has a nonzero solution.
bool conic_has_rational_point(const Rational& a, const Rational& b);
bool is_separable_over_k(const OrdAlgebra& e);
/// gcd(f, f') = 1 for irreducible f; throws Reducible otherwise.
bool is_separable_field_ext(const Poly& f);

}  // namespace tensorcat

#endif
