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

// Algebra objects: validation, internal endomorphisms, catalog pairs.

#include "doctest.h"
#include "tensorcat/catalog.hpp"

using namespace tensorcat;
namespace cat = tensorcat::catalog;

TEST_CASE("every catalog algebra validates") {
    for (const auto& e : cat::entries()) {
        if (!e.algebra) continue;
        Cat c = e.category();
        AlgebraPres a = e.algebra(c);
        ValidationReport r = validate_algebra(a);
        INFO(e.name << ": " << r.failure);
        CHECK(r.ok);
    }
}

TEST_CASE("internal_end on every simple") {
    std::vector<Cat> cats = {std::make_shared<const CategoryPres>(cat::fibonacci()),
                             std::make_shared<const CategoryPres>(cat::ising()),
                             std::make_shared<const CategoryPres>(cat::pointed(2, 1, Field::rationals())),
                             std::make_shared<const CategoryPres>(cat::pointed(3, 0, Field::rationals())),
                             std::make_shared<const CategoryPres>(cat::matrix_multifusion(2, Field::rationals())),
                             std::make_shared<const CategoryPres>(cat::graded_char_p(3))};
    for (const Cat& c : cats)
        for (std::size_t i = 0; i < c->rank(); ++i) {
            Obj a = simple_obj(*c, i);
            AlgebraPres e = internal_end(c, a);
            ValidationReport r = validate_algebra(e);
            INFO(c->name << " " << c->labels[i] << ": " << r.failure);
            CHECK(r.ok);
            // Hom(1, a a^L) = End(a) as vector spaces.
            CHECK(hom_dim(unit_obj(*c), e.carrier) == hom_dim(a, a));
        }
}

TEST_CASE("internal_end of a composite object") {
    Cat c = std::make_shared<const CategoryPres>(cat::fibonacci());
    AlgebraPres e = internal_end(c, Obj{{1, 1}});
    CHECK(validate_algebra(e).ok);
    CHECK(hom_dim(unit_obj(*c), e.carrier) == 2);
}

TEST_CASE("direct sums of algebras validate") {
    Cat c = std::make_shared<const CategoryPres>(cat::ising());
    AlgebraPres s = direct_sum(trivial_algebra(c), internal_end(c, simple_obj(*c, 2)));
    CHECK(validate_algebra(s).ok);
}

TEST_CASE("corrupted structure constants are rejected") {
    Cat c = std::make_shared<const CategoryPres>(cat::vec(Field::rationals()));
    AlgebraPres a = cat::ordinary_group_algebra(c, 3);
    REQUIRE(validate_algebra(a).ok);
    // zero g * g = g2; then (g g) g2 = 0 but g (g g2) = g
    a.mult.blocks[0](2, 4) = c->field.zero();
    ValidationReport r = validate_algebra(a);
    CHECK(!r.ok);
    CHECK(r.failure.find("associativity") != std::string::npos);
    CHECK_THROWS_AS(require_valid(a), Error);

    AlgebraPres u = trivial_algebra(c);
    u.unit = u.unit * c->field.from_int(2);
    CHECK(validate_algebra(u).failure.find("unit") != std::string::npos);
}

TEST_CASE("regular algebra of a twisted subgroup is obstructed") {
    Cat c = std::make_shared<const CategoryPres>(cat::pointed(2, 1, Field::rationals()));
    try {
        cat::regular_pointed(c, 2, 2);
        FAIL("expected CocycleObstruction");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::CocycleObstruction);
    }
    Cat d = std::make_shared<const CategoryPres>(cat::pointed(4, 0, Field::rationals()));
    CHECK(validate_algebra(cat::regular_pointed(d, 4, 2)).ok);
}

TEST_CASE("catalog lookup") {
    CHECK(cat::lookup("fibonacci").name == "fibonacci");
    CHECK_THROWS_AS(cat::lookup("nonsense"), Error);
}

TEST_CASE("conjugate algebras validate") {
    for (const auto& e : cat::entries()) {
        if (!e.algebra) continue;
        Cat c = e.category();
        AlgebraPres a = e.algebra(c);
        for (std::size_t l = 0; l < c->rank(); ++l) {
            AlgebraPres b = conjugate_algebra(a, simple_obj(*c, l));
            ValidationReport r = validate_algebra(b);
            INFO(e.name << " " << c->labels[l] << ": " << r.failure);
            CHECK(r.ok);
            CHECK(b.carrier == tensor_obj(*c, simple_obj(*c, l), tensor_obj(*c, a.carrier, dual_l(*c, simple_obj(*c, l)))));
        }
    }
    Cat fib = std::make_shared<const CategoryPres>(cat::fibonacci());
    Obj tau = simple_obj(*fib, 1);
    AlgebraPres b = conjugate_algebra(trivial_algebra(fib), tau);
    AlgebraPres e = internal_end(fib, tau);
    CHECK(b.carrier == e.carrier);
    CHECK(b.unit == e.unit);
}

TEST_CASE("corner algebras") {
    for (const auto& e : cat::entries()) {
        if (!e.algebra) continue;
        Cat c = e.category();
        AlgebraPres a = e.algebra(c);
        AlgebraPres full = corner_algebra(a, a.unit);
        CHECK(full.carrier == a.carrier);
        CHECK(validate_algebra(full).ok);
    }
    // The corner of a diagonal idempotent in a 2x2 matrix algebra is the base field.
    const auto& entry = cat::lookup("vec_q:end_2");
    Cat c = entry.category();
    AlgebraPres m = entry.algebra(c);
    std::vector<Mor> sections = hom_basis(*c, unit_obj(*c), m.carrier);
    REQUIRE(sections.size() == 4);
    bool found = false;
    for (const Mor& s : sections) {
        Mor sq = compose(m.mult, tensor_mor(*c, s, s));
        sq.src = s.src;
        if (sq == s && !(s == m.unit)) {
            AlgebraPres k = corner_algebra(m, s);
            CHECK(validate_algebra(k).ok);
            CHECK(k.carrier.total() == 1);
            found = true;
        }
    }
    CHECK(found);
}
