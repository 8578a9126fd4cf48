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
 * @file modcat.hpp
 * @brief Modules and bimodules over an algebra internal to a category.
 *
 * A right module acts by X (x) A -> X, a left module by A (x) X -> X. Every
 * Hom space is computed as the kernel of a linear map on Hom_C(X, Y), except
 * the bimodule End of a free bimodule, which uses the free-bimodule adjunction.
 */

#ifndef TENSORCAT_MODCAT_HPP
#define TENSORCAT_MODCAT_HPP

#include <vector>

#include "tensorcat/algebra.hpp"
#include "tensorcat/artin.hpp"

namespace tensorcat {

enum class Side { Left, Right };

struct ModulePres {
    Obj carrier;
    Mor action;
    Side side = Side::Right;
};

/// A-A bimodule: left A (x) X -> X, right X (x) A -> X.
struct BimodulePres {
    Obj carrier;
    Mor left;
    Mor right;
};

ValidationReport validate_module(const AlgebraPres& a, const ModulePres& m);
ValidationReport validate_bimodule(const AlgebraPres& a, const BimodulePres& m);

/// A as a right (or left) module over itself.
ModulePres regular_module(const AlgebraPres& a, Side side = Side::Right);
/// x (x) A with action id (x) m after the associator.
ModulePres free_module(const AlgebraPres& a, const Obj& x);
/// x (x) M for a right module M; the C-module action on RMod_A(C).
ModulePres act_on(const AlgebraPres& a, const Obj& x, const ModulePres& m);
ModulePres module_sum(const AlgebraPres& a, const ModulePres& x, const ModulePres& y);
/// The sum of the free modules on all simple labels; a projective generator.
ModulePres projective_generator(const AlgebraPres& a);

/// Basis of the module maps x -> y (same side).
std::vector<Mor> hom_A(const AlgebraPres& a, const ModulePres& x, const ModulePres& y);

struct RelTensor {
    Obj obj;
    Mor projection;  ///< x (x) y -> obj, the coequalizer
};

/// x (x)_A y for a right module x and a left module y.
RelTensor rel_tensor(const AlgebraPres& a, const ModulePres& x, const ModulePres& y);

/// A right module x gives a left module on x^R, a left module gives a right
/// module on x^L, by bending the action with evaluation and coevaluation.
ModulePres module_dual(const AlgebraPres& a, const ModulePres& x);

/// [x, y] = (x (x)_A y^R)^L for right modules x, y.
Obj internal_hom(const AlgebraPres& a, const ModulePres& x, const ModulePres& y);

/// The image of an idempotent module endomorphism as a module.
ModulePres image_module(const AlgebraPres& a, const ModulePres& m, const Mor& idem);

struct EndAlgebra {
    OrdAlgebra algebra;
    std::vector<Mor> basis;  ///< product e_i e_j = e_i o e_j
};

EndAlgebra end_algebra(const AlgebraPres& a, const ModulePres& p);
EndAlgebra end_algebra(const AlgebraPres& a, const std::vector<ModulePres>& ps);
/// Hom_A(P, M) as a right End(P)-module by precomposition.
OrdModule hom_module(const AlgebraPres& a, const EndAlgebra& e, const ModulePres& p, const ModulePres& m);

struct SimpleModules {
    /// Pairwise non-isomorphic simple modules, or indecomposable projectives
    /// when A is not semisimple.
    std::vector<ModulePres> modules;
    /// Multiplicity of each module as a summand of A.
    std::vector<int> multiplicity_in_A;
    bool semisimple = true;
};

SimpleModules simple_modules(const AlgebraPres& a);

// Bimodules

BimodulePres regular_bimodule(const AlgebraPres& a);
/// (A (x) x) (x) A with the outer actions.
BimodulePres free_bimodule(const AlgebraPres& a, const Obj& x);
BimodulePres bimodule_sum(const AlgebraPres& a, const BimodulePres& x, const BimodulePres& y);
std::vector<Mor> hom_bimod(const AlgebraPres& a, const BimodulePres& x, const BimodulePres& y);
/// End of the sum of free bimodules on all simple labels.
EndAlgebra bimod_end_algebra(const AlgebraPres& a);

}  // namespace tensorcat

#endif
