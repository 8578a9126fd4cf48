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
 * @file catalog.hpp
 * @brief Built-in example categories and algebras.
 *
 * All categories use u_a = 1 as coevaluation; the evaluation v_a is then
 * fixed by the first snake equation. Every generator validates its output.
 */

#ifndef TENSORCAT_CATALOG_HPP
#define TENSORCAT_CATALOG_HPP

#include <functional>
#include <string>
#include <vector>

#include "tensorcat/algebra.hpp"
#include "tensorcat/fincat.hpp"

namespace tensorcat::catalog {

/// Q(phi) with phi^2 = phi + 1.
Field golden_field();
/// Q(s) with s^2 = 2.
Field sqrt2_field();
/// F_4 = F_2[a]/(a^2 + a + 1).
Field f4_field();

CategoryPres vec(const Field& f);
/// Vec_{Z/n}^omega with omega(a,b,c) = zeta^(twist * a * [b + c >= n]) for a
/// primitive n-th root of unity zeta in f (needed only when twist != 0).
CategoryPres pointed(std::size_t n, long twist, const Field& f);
/// Untwisted Z/p-graded vector spaces over F_p.
CategoryPres graded_char_p(unsigned long p);
/// Fibonacci over Q(phi), F^{ttt}_t = [[phi^-1, 1], [phi^-1, -phi^-1]].
CategoryPres fibonacci();
/// Ising over Q(s), s^2 = 2.
CategoryPres ising();
/// The n x n multi-fusion category with simples e_ij and unit sum_i e_ii.
CategoryPres matrix_multifusion(std::size_t n, const Field& f);

/// Sets cap[a] from cup[a] so that the first snake equation holds on every
/// simple. Requires multiplicity-free duality pairings.
void solve_caps(CategoryPres& c);

// Algebras

/// Regular algebra of the subgroup of Z/n of the given order; raises
/// CocycleObstruction when the cocycle does not restrict trivially.
AlgebraPres regular_pointed(const Cat& c, std::size_t n, std::size_t subgroup_order);
/// The ordinary group algebra k[Z/n] in Vec, carrier n * 1.
AlgebraPres ordinary_group_algebra(const Cat& vec_category, std::size_t n);

struct CatalogEntry {
    std::string name;
    std::string description;
    std::function<Cat()> category;
    /// Empty for category-only entries.
    std::function<AlgebraPres(const Cat&)> algebra;
};

/// Every named entry. Pair names look like "vec_z2_f2:regular".
const std::vector<CatalogEntry>& entries();
const CatalogEntry& lookup(const std::string& name);

}  // namespace tensorcat::catalog

#endif
