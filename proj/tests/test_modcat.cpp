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

// Modules over internal algebras: Hom solvers, relative tensor, duals, internal hom.

#include <random>

#include "doctest.h"
#include "tensorcat/catalog.hpp"
#include "tensorcat/modcat.hpp"

using namespace tensorcat;
namespace cat = tensorcat::catalog;

namespace {

AlgebraPres pair(const std::string& name) {
    const cat::CatalogEntry& e = cat::lookup(name);
    return e.algebra(e.category());
}

std::vector<AlgebraPres> corpus() {
    std::vector<AlgebraPres> out;
    for (const auto& e : cat::entries())
        if (e.algebra) out.push_back(e.algebra(e.category()));
    return out;
}

bool in_span(const CategoryPres& c, const std::vector<Mor>& basis, const Mor& m) {
    if (basis.empty()) return m.is_zero();
    std::vector<Vec> cols;
    for (const Mor& b : basis) cols.push_back(flatten(b));
    Vec target = flatten(m);
    return solve(Matrix::from_columns(c.field, cols, target.size()), target).has_value();
}

}  // namespace

TEST_CASE("free module examples") {
    AlgebraPres triv = pair("vec_q:trivial");
    ModulePres f1 = free_module(triv, unit_obj(*triv.cat));
    CHECK(f1.carrier == triv.carrier);
    CHECK(f1.action == triv.mult);

    AlgebraPres reg = pair("vec_z2_q:regular");
    CHECK(free_module(reg, simple_obj(*reg.cat, 1)).carrier == Obj{{1, 1}});

    Cat fib = std::make_shared<const CategoryPres>(cat::fibonacci());
    AlgebraPres end_tau = internal_end(fib, simple_obj(*fib, 1));
    ModulePres ft = free_module(end_tau, simple_obj(*fib, 1));
    CHECK(ft.carrier == Obj{{1, 2}});
    CHECK(validate_module(end_tau, ft).ok);
}

TEST_CASE("module validation") {
    for (const AlgebraPres& a : corpus()) {
        INFO(a.cat->name << ":" << a.name);
        CHECK(validate_module(a, regular_module(a)).ok);
        CHECK(validate_module(a, regular_module(a, Side::Left)).ok);
        CHECK(validate_module(a, projective_generator(a)).ok);
        CHECK(validate_bimodule(a, regular_bimodule(a)).ok);
        CHECK(validate_bimodule(a, free_bimodule(a, simple_obj(*a.cat, a.cat->rank() - 1))).ok);
    }
    AlgebraPres reg = pair("vec_z3_q:regular");
    ModulePres bad = regular_module(reg);
    bad.action = bad.action * reg.cat->field.from_int(2);
    CHECK(!validate_module(reg, bad).ok);
}

TEST_CASE("hom_A examples") {
    AlgebraPres reg = pair("vec_z2_q:regular");
    ModulePres a = regular_module(reg);
    CHECK(hom_A(reg, a, a).size() == 1);
    CHECK(hom_A(reg, a, a).size() == static_cast<std::size_t>(hom_dim(unit_obj(*reg.cat), reg.carrier)));
    for (const AlgebraPres& alg : corpus()) {
        ModulePres x = projective_generator(alg);
        CHECK(in_span(*alg.cat, hom_A(alg, x, x), id(*alg.cat, x.carrier)));
    }
}

TEST_CASE("free modules represent Hom out of objects") {
    for (const AlgebraPres& a : corpus()) {
        const CategoryPres& c = *a.cat;
        std::vector<ModulePres> targets{regular_module(a), module_dual(a, regular_module(a, Side::Left))};
        for (std::size_t l = 0; l < c.rank(); ++l) targets.push_back(free_module(a, simple_obj(c, l)));
        for (std::size_t l = 0; l < c.rank(); ++l) {
            Obj x = simple_obj(c, l);
            ModulePres fx = free_module(a, x);
            for (const ModulePres& y : targets) {
                INFO(c.name << ":" << a.name << " label " << c.labels[l]);
                CHECK(hom_A(a, fx, y).size() == static_cast<std::size_t>(hom_dim(x, y.carrier)));
            }
        }
    }
}

TEST_CASE("end_algebra examples") {
    AlgebraPres triv = pair("vec_q:trivial");
    EndAlgebra e = end_algebra(triv, regular_module(triv));
    CHECK(e.algebra.dim == 1);
    AlgebraPres reg = pair("vec_z2_q:regular");
    std::vector<ModulePres> ps{free_module(reg, simple_obj(*reg.cat, 0)), free_module(reg, simple_obj(*reg.cat, 1))};
    EndAlgebra e2 = end_algebra(reg, ps);
    CHECK(e2.algebra.dim == 4);
    CHECK_NOTHROW(validate(e2.algebra));
    for (const AlgebraPres& a : corpus()) CHECK_NOTHROW(validate(end_algebra(a, projective_generator(a)).algebra));
}

TEST_CASE("hom_module is a module over the endomorphism algebra") {
    for (const AlgebraPres& a : corpus()) {
        ModulePres p = projective_generator(a);
        EndAlgebra e = end_algebra(a, p);
        OrdModule m = hom_module(a, e, p, regular_module(a));
        CHECK_NOTHROW(validate(e.algebra, m));
    }
}

TEST_CASE("relative tensor product") {
    for (const AlgebraPres& a : corpus()) {
        INFO(a.cat->name << ":" << a.name);
        RelTensor t = rel_tensor(a, regular_module(a), regular_module(a, Side::Left));
        CHECK(t.obj == a.carrier);
        // the projection coequalizes the two actions
        const CategoryPres& c = *a.cat;
        Mor lhs = compose(t.projection, tensor_mor(c, a.mult, id(c, a.carrier)));
        Mor rhs = compose(t.projection, compose(tensor_mor(c, id(c, a.carrier), a.mult),
                                                associator(c, a.carrier, a.carrier, a.carrier)));
        CHECK(lhs == rhs);
    }
    AlgebraPres triv = pair("fibonacci:trivial");
    const CategoryPres& fc = *triv.cat;
    Obj tau = simple_obj(fc, 1);
    ModulePres x = free_module(triv, tau);
    ModulePres y = module_dual(triv, free_module(triv, tau));
    CHECK(rel_tensor(triv, x, y).obj == tensor_obj(fc, x.carrier, y.carrier));

    AlgebraPres reg = pair("vec_z2_q:regular");
    CHECK(rel_tensor(reg, regular_module(reg), module_dual(reg, regular_module(reg))).obj.total() == 2);
}

TEST_CASE("module duals") {
    AlgebraPres triv = pair("vec_q:trivial");
    CHECK(module_dual(triv, regular_module(triv, Side::Left)).carrier == triv.carrier);
    for (const AlgebraPres& a : corpus()) {
        const CategoryPres& c = *a.cat;
        INFO(c.name << ":" << a.name);
        for (std::size_t l = 0; l < c.rank(); ++l) {
            Obj x = simple_obj(c, l);
            ModulePres fx = free_module(a, x);
            ModulePres d = module_dual(a, fx);
            CHECK(d.side == Side::Left);
            CHECK(d.carrier == tensor_obj(c, dual_r(c, a.carrier), dual_r(c, x)));
            CHECK(validate_module(a, d).ok);
            ModulePres dd = module_dual(a, d);
            CHECK(dd.carrier == fx.carrier);
            CHECK(validate_module(a, dd).ok);
        }
        ModulePres al = module_dual(a, regular_module(a, Side::Left));
        CHECK(al.carrier == dual_l(c, a.carrier));
        CHECK(validate_module(a, al).ok);
    }
}

TEST_CASE("internal hom identities") {
    for (const AlgebraPres& a : corpus()) {
        const CategoryPres& c = *a.cat;
        INFO(c.name << ":" << a.name);
        ModulePres al = module_dual(a, regular_module(a, Side::Left));
        std::vector<ModulePres> xs{regular_module(a), al};
        for (std::size_t l = 0; l < c.rank(); ++l) xs.push_back(free_module(a, simple_obj(c, l)));
        for (const ModulePres& x : xs) {
            CHECK(internal_hom(a, regular_module(a), x) == x.carrier);
            CHECK(internal_hom(a, x, al) == dual_l(c, x.carrier));
        }
    }
}

TEST_CASE("internal hom adjunction on random instances") {
    std::mt19937 rng(41);
    std::vector<AlgebraPres> all = corpus();
    for (int it = 0; it < 20; ++it) {
        const AlgebraPres& a = all[rng() % all.size()];
        const CategoryPres& c = *a.cat;
        Obj s = simple_obj(c, rng() % c.rank());
        ModulePres x = free_module(a, simple_obj(c, rng() % c.rank()));
        ModulePres y = rng() % 2 ? regular_module(a) : free_module(a, simple_obj(c, rng() % c.rank()));
        INFO(c.name << ":" << a.name);
        CHECK(static_cast<std::size_t>(hom_dim(s, internal_hom(a, x, y))) == hom_A(a, act_on(a, s, x), y).size());
    }
}

TEST_CASE("simple modules") {
    SimpleModules t = simple_modules(pair("vec_q:trivial"));
    REQUIRE(t.modules.size() == 1);
    CHECK(t.multiplicity_in_A == std::vector<int>{1});

    SimpleModules r = simple_modules(pair("vec_z2_q:regular"));
    REQUIRE(r.modules.size() == 1);
    CHECK(r.modules[0].carrier == Obj{{1, 1}});
    CHECK(r.semisimple);

    SimpleModules m = simple_modules(pair("vec_q:end_2"));
    REQUIRE(m.modules.size() == 1);
    CHECK(m.multiplicity_in_A == std::vector<int>{2});
    CHECK(m.modules[0].carrier == Obj{{2}});

    SimpleModules s = simple_modules(pair("vec_q:trivial_sum"));
    CHECK(s.modules.size() == 2);

    SimpleModules g = simple_modules(pair("vec_f2:group_z2"));
    CHECK(!g.semisimple);
    CHECK(g.modules.size() == 1);

    for (const AlgebraPres& a : corpus()) {
        SimpleModules sm = simple_modules(a);
        for (const ModulePres& x : sm.modules) CHECK(validate_module(a, x).ok);
    }
}

TEST_CASE("bimodule endomorphism algebra") {
    CHECK(bimod_end_algebra(pair("vec_q:trivial")).algebra.dim == 1);
    CHECK(is_semisimple(bimod_end_algebra(pair("vec_z2_q:regular")).algebra));
    CHECK(!is_semisimple(bimod_end_algebra(pair("vec_f2:group_z2")).algebra));
    CHECK(!is_semisimple(bimod_end_algebra(pair("vec_z2_f2:regular")).algebra));
}
