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

#ifndef TENSORCAT_ALGEBRA_HPP
#define TENSORCAT_ALGEBRA_HPP

#include <optional>
#include <string>

#include "tensorcat/fincat.hpp"

namespace tensorcat {

/// An algebra internal to a category. mult is written in the tensor basis of
/// carrier (x) carrier; unit starts at the unit object.
struct AlgebraPres {
    Cat cat;
    Obj carrier;
    Mor mult;
    Mor unit;
    std::string name;
};

/// Associativity m(m x id) = m(id x m) alpha and both unit laws, exactly.
ValidationReport validate_algebra(const AlgebraPres& a);
void require_valid(const AlgebraPres& a);

/// The unit object with the identity multiplication.
AlgebraPres trivial_algebra(const Cat& c);
/// a (x) a^L, multiplying with the left evaluation, unit the left coevaluation.
AlgebraPres internal_end(const Cat& c, const Obj& a);
/// a (x) (A (x) a^L), the internal end of the free module a (x) A. For A the
/// unit this is internal_end(a).
AlgebraPres conjugate_algebra(const AlgebraPres& a, const Obj& x);
/// The image of b -> e b e for an idempotent e: 1 -> A, with the restricted
/// multiplication and unit e.
AlgebraPres corner_algebra(const AlgebraPres& a, const Mor& e);
AlgebraPres direct_sum(const AlgebraPres& a, const AlgebraPres& b);
/// Pushes all structure constants along e into the already extended category.
AlgebraPres embed_algebra(const AlgebraPres& a, const Cat& extended, const Embedding& e);

/// Locates the first entry where two parallel morphisms differ.
std::optional<std::string> first_difference(const CategoryPres& c, const Mor& f, const Mor& g);

}  // namespace tensorcat

#endif
