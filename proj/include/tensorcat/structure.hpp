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
 * @file structure.hpp
 * @brief Semisimplicity, division and separability of internal algebras.
 *
 * Module-theoretic questions about A are transported to the ordinary algebra
 * End_A(P) of a projective generator P, where they are decided exactly.
 * Separability is decided from its definition (a bimodule section of the
 * multiplication) and cross-checked by the bimodule, beta, alpha and
 * dimension criteria.
 */

#ifndef TENSORCAT_STRUCTURE_HPP
#define TENSORCAT_STRUCTURE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tensorcat/modcat.hpp"

namespace tensorcat {

/// Hom_C(1, A) with the convolution product m(f (x) g).
struct GlobalSections {
    OrdAlgebra algebra;
    std::vector<Mor> basis;
};
GlobalSections global_sections(const AlgebraPres& a);

/// RMod_A(C) is semisimple.
bool is_semisimple_algebra(const AlgebraPres& a);
/// Semisimple and not Morita equivalent to a nontrivial product.
bool is_simple_algebra(const AlgebraPres& a);
/// A is a simple object of RMod_A(C).
Verdict is_division_algebra(const AlgebraPres& a);
/// m: A (x) A -> A has an A-bimodule section.
bool is_separable(const AlgebraPres& a);
/// The bimodule category is semisimple.
bool bimodule_criterion(const AlgebraPres& a);

/// Right module A^L, the dual of the left regular module.
ModulePres left_dual_module(const AlgebraPres& a);

/// beta(g) = m (id (x) g) m' for g in Hom_A(A^L, A), m' the right mate of m.
Mor beta(const AlgebraPres& a, const Mor& g);
struct BetaSearch {
    Verdict verdict = Verdict::Undetermined;
    std::optional<Mor> witness;   ///< g with beta(g) invertible, over search_field
    std::string search_field;     ///< last field searched, an extension if escalated
    std::size_t evaluations = 0;
    std::size_t budget = 0;
};
/// Searches Hom_A(A^L, A) for g with beta(g) invertible: basis elements,
/// small integer combinations, then an exhaustive grid whose failure proves
/// nonexistence. Undetermined when the budget runs out first.
BetaSearch separability_beta(const AlgebraPres& a, std::size_t budget = search_budget());

/// alpha(f, g) = ev_l (f (x) g) coev_l on 1.
Mor alpha(const AlgebraPres& a, const Mor& f, const Mor& g);
/// Some alpha(f, g) is nonzero. Requires a division algebra.
bool separability_alpha_division(const AlgebraPres& a);
/// alpha(f, f^{-1}) at the unit component carrying A. Requires a division
/// algebra with dim Hom(1, A) = 1.
Scalar dim_division_algebra(const AlgebraPres& a);

struct MatrixDecomposition {
    std::vector<ModulePres> summands;          ///< pairwise distinct simple summands x_i of A
    std::vector<int> multiplicity;             ///< of x_i in A as a right module
    std::vector<AlgebraPres> division_blocks;  ///< A_ii = [x_i, x_i] as a corner e A e
    std::vector<std::vector<Obj>> homs;        ///< [x_i, x_j]
    std::vector<std::vector<std::size_t>> classes;  ///< components of [x_i, x_j] != 0
    Obj reconstructed;                         ///< sum of m_i m_j [x_i, x_j]
};
/// Requires a semisimple algebra; throws NotSemisimple otherwise.
MatrixDecomposition matrix_decomposition(const AlgebraPres& a);

/// Labels a with 1_i (x) a = a = a (x) 1_i for the first unit component i.
std::vector<std::size_t> diagonal_labels(const CategoryPres& c);
/// Sum of dim_division_algebra(internal_end(a)) over the diagonal labels.
Scalar global_dimension(const Cat& c);
/// The Drinfeld center is semisimple iff the global dimension is nonzero.
bool center_semisimple_verdict(const Cat& c);

/// [x, x] for the indecomposable summands x of the free modules a (x) A, as
/// corners of the conjugate algebras. Each simple module occurs.
std::vector<AlgebraPres> simple_module_ends(const AlgebraPres& a);

/// Separability over k of End_A(x) for each simple module x.
std::vector<bool> endomorphism_separability(const AlgebraPres& a);

/// Scalar extension of the category and the algebra along e. Raises
/// InseparableExtension if the target field is not separable over the source.
std::pair<Cat, AlgebraPres> base_extend_algebra(const AlgebraPres& a, const Embedding& e);

struct AnalysisReport {
    std::string category;
    std::string algebra;
    std::string field;
    Obj carrier;
    bool semisimple = false;
    bool simple = false;
    Verdict division = Verdict::Undetermined;
    bool separable = false;
    bool bimodule_semisimple = false;
    BetaSearch beta;
    std::optional<bool> alpha;
    std::optional<Scalar> dim;
    std::optional<MatrixDecomposition> decomposition;
    std::vector<OrdAlgebra> endomorphism_algebras;  ///< End_A(x) per simple module
    std::vector<bool> endomorphism_separable;
    std::optional<Scalar> global_dim;
    std::optional<bool> center_semisimple;
    /// criterion -> "agree" or "skipped: reason"
    std::vector<std::pair<std::string, std::string>> oracles;
};

/// Runs every criterion and raises OracleDisagreement if two that must agree
/// do not.
AnalysisReport analyze(const AlgebraPres& a, bool with_global_dim = true);

}  // namespace tensorcat

#endif
