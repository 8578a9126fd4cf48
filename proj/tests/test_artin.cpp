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

// Ordinary algebras: radical, idempotents, modules, division, separability.

#include <functional>

#include "doctest.h"
#include "tensorcat/artin.hpp"
#include "tensorcat/catalog.hpp"

using namespace tensorcat;

namespace {

Field f2() { return Field::prime(2); }

Vec vec(const Field& f, std::initializer_list<long> xs) {
    Vec v;
    for (long x : xs) v.push_back(f.from_int(x));
    return v;
}

/// Every element of a small algebra over a finite field.
std::vector<Vec> all_elements(const OrdAlgebra& e) {
    std::vector<Scalar> field_elems;
    const Field& f = e.field;
    const unsigned long p = f.characteristic();
    const std::size_t d = f.degree();
    std::vector<std::size_t> digits(d, 0);
    for (;;) {
        std::vector<Rational> c;
        for (std::size_t k = 0; k < d; ++k) c.push_back(Rational(static_cast<long>(digits[k])));
        field_elems.emplace_back(f, c);
        std::size_t k = 0;
        while (k < d && ++digits[k] == p) digits[k++] = 0;
        if (k == d) break;
    }
    std::vector<Vec> out;
    std::vector<std::size_t> idx(e.dim, 0);
    for (;;) {
        Vec v;
        for (std::size_t k = 0; k < e.dim; ++k) v.push_back(field_elems[idx[k]]);
        out.push_back(v);
        std::size_t k = 0;
        while (k < e.dim && ++idx[k] == field_elems.size()) idx[k++] = 0;
        if (k == e.dim) break;
    }
    return out;
}

bool nilpotent(const OrdAlgebra& e, const Vec& x) {
    Vec p = x;
    for (std::size_t k = 0; k < e.dim; ++k) p = e.mul(p, x);
    return is_zero_vec(p);
}

/// rad E = { x : x y is nilpotent for every y }.
std::size_t brute_radical_size(const OrdAlgebra& e) {
    std::vector<Vec> els = all_elements(e);
    std::size_t count = 0;
    for (const Vec& x : els) {
        bool in = true;
        for (const Vec& y : els)
            if (!nilpotent(e, e.mul(x, y))) {
                in = false;
                break;
            }
        count += in;
    }
    return count;
}

std::size_t span_dim(const Field& f, const std::vector<Vec>& vs, std::size_t n) {
    if (vs.empty()) return 0;
    return rank(Matrix::from_rows(f, vs, n));
}

void check_idempotents(const OrdAlgebra& e, const std::vector<Vec>& es) {
    Vec sum = zero_vec(e.field, e.dim);
    for (std::size_t i = 0; i < es.size(); ++i) {
        CHECK(!is_zero_vec(es[i]));
        for (std::size_t j = 0; j < es.size(); ++j) {
            Vec p = e.mul(es[i], es[j]);
            if (i == j)
                CHECK(p == es[i]);
            else
                CHECK(is_zero_vec(p));
        }
        for (std::size_t l = 0; l < e.dim; ++l) sum[l] += es[i][l];
    }
    CHECK(sum == e.unit);
}

std::vector<OrdAlgebra> small_finite_algebras() {
    Field f3 = Field::prime(3);
    Field f4 = catalog::f4_field();
    return {cyclic_group_algebra(f2(), 2),
            cyclic_group_algebra(f2(), 3),
            cyclic_group_algebra(f2(), 4),
            cyclic_group_algebra(f3, 3),
            cyclic_group_algebra(f3, 2),
            upper_triangular(f2(), 2),
            matrix_algebra(f2(), 2),
            product(cyclic_group_algebra(f2(), 2), cyclic_group_algebra(f2(), 1)),
            quotient_algebra(Poly(f2(), vec(f2(), {0, 0, 0, 1}))),
            quotient_algebra(Poly(f3, vec(f3, {0, 0, 1, 1}))),
            cyclic_group_algebra(f4, 2),
            upper_triangular(f3, 2)};
}

}  // namespace

TEST_CASE("example algebras validate") {
    Field q = Field::rationals();
    for (const OrdAlgebra& e : small_finite_algebras()) CHECK_NOTHROW(validate(e));
    CHECK_NOTHROW(validate(matrix_algebra(q, 3)));
    CHECK_NOTHROW(validate(quaternion_algebra(q, q.from_int(-1), q.from_int(-1))));
    CHECK_NOTHROW(validate(upper_triangular(q, 3)));
    OrdAlgebra bad = cyclic_group_algebra(q, 2);
    bad.left[1](1, 0) = q.from_int(2);  // g * 1 = 2g
    CHECK_THROWS_AS(validate(bad), Error);
    OrdAlgebra m2 = matrix_algebra(q, 2);
    CHECK_NOTHROW(validate(m2, regular_module(m2)));
}

TEST_CASE("radical examples") {
    Field q = Field::rationals();
    CHECK(radical(product(cyclic_group_algebra(q, 1), cyclic_group_algebra(q, 1))).empty());
    std::vector<Vec> r = radical(cyclic_group_algebra(f2(), 2));
    REQUIRE(r.size() == 1);
    CHECK(r[0] == vec(f2(), {1, 1}));
    CHECK(radical(upper_triangular(q, 2)).size() == 1);
    CHECK(radical(upper_triangular(q, 3)).size() == 3);
    CHECK(radical(matrix_algebra(q, 2)).empty());
    CHECK(radical(cyclic_group_algebra(q, 6)).empty());
    CHECK(!is_semisimple(cyclic_group_algebra(f2(), 2)));
    CHECK(is_semisimple(cyclic_group_algebra(f2(), 3)));
}

TEST_CASE("radical agrees with brute force over small finite fields") {
    for (const OrdAlgebra& e : small_finite_algebras()) {
        std::size_t d = radical(e).size();
        Integer expected = 1;
        for (std::size_t k = 0; k < d; ++k) expected *= e.field.order();
        CHECK(Integer(static_cast<unsigned long>(brute_radical_size(e))) == expected);
    }
}

TEST_CASE("radical is a nilpotent ideal") {
    Field q = Field::rationals();
    std::vector<OrdAlgebra> es = small_finite_algebras();
    es.push_back(upper_triangular(q, 3));
    es.push_back(quotient_algebra(Poly(q, vec(q, {0, 0, 1, 1}))));
    for (const OrdAlgebra& e : es) {
        std::vector<Vec> r = radical(e);
        const std::size_t d = r.size();
        for (const Vec& x : r)
            for (std::size_t k = 0; k < e.dim; ++k) {
                std::vector<Vec> ext = r;
                ext.push_back(e.mul(x, e.basis(k)));
                CHECK(span_dim(e.field, ext, e.dim) == d);
                ext.back() = e.mul(e.basis(k), x);
                CHECK(span_dim(e.field, ext, e.dim) == d);
            }
        // rad^(d+1) = 0
        std::vector<Vec> pw = r;
        for (std::size_t k = 0; k < d && !pw.empty(); ++k) {
            std::vector<Vec> next;
            for (const Vec& a : pw)
                for (const Vec& b : r) {
                    Vec p = e.mul(a, b);
                    if (!is_zero_vec(p)) next.push_back(p);
                }
            pw = next;
        }
        CHECK(pw.empty());
    }
}

TEST_CASE("center and central idempotents") {
    Field q = Field::rationals();
    CHECK(center(matrix_algebra(q, 2)).size() == 1);
    CHECK(central_idempotents(matrix_algebra(q, 2)).size() == 1);
    OrdAlgebra g2 = cyclic_group_algebra(q, 2);
    std::vector<Vec> ci = central_idempotents(g2);
    REQUIRE(ci.size() == 2);
    Scalar h = q.from_rational(Rational(1, 2));
    CHECK(((ci[0] == Vec{h, h} && ci[1] == Vec{h, -h}) || (ci[1] == Vec{h, h} && ci[0] == Vec{h, -h})));
    CHECK(central_idempotents(cyclic_group_algebra(q, 4)).size() == 3);  // Q x Q x Q(i)
    CHECK(central_idempotents(cyclic_group_algebra(q, 6)).size() == 4);
    CHECK(central_idempotents(cyclic_group_algebra(f2(), 3)).size() == 2);  // F_2 x F_4
    OrdAlgebra f2cubed = product(product(cyclic_group_algebra(f2(), 1), cyclic_group_algebra(f2(), 1)),
                                 cyclic_group_algebra(f2(), 1));
    CHECK(central_idempotents(f2cubed).size() == 3);
    CHECK_THROWS_AS(central_idempotents(cyclic_group_algebra(f2(), 2)), Error);
    Field phi = catalog::golden_field();
    CHECK(central_idempotents(cyclic_group_algebra(phi, 5)).size() == 3);  // Q(phi) x Q(phi, zeta_5) split twice

    for (const OrdAlgebra& e : {g2, cyclic_group_algebra(q, 6), f2cubed, product(matrix_algebra(q, 2), g2)}) {
        std::vector<Vec> es = central_idempotents(e);
        check_idempotents(e, es);
        for (const Vec& c : es)
            for (std::size_t k = 0; k < e.dim; ++k) CHECK(e.mul(c, e.basis(k)) == e.mul(e.basis(k), c));
    }
}

TEST_CASE("primitive idempotents") {
    Field q = Field::rationals();
    struct Case {
        OrdAlgebra e;
        std::size_t count;
    };
    std::vector<Case> cases = {{matrix_algebra(q, 3), 3},
                               {cyclic_group_algebra(f2(), 3), 2},
                               {cyclic_group_algebra(f2(), 2), 1},
                               {upper_triangular(q, 2), 2},
                               {upper_triangular(f2(), 3), 3},
                               {quaternion_algebra(q, q.from_int(-1), q.from_int(-1)), 1},
                               {quaternion_algebra(q, q.from_int(1), q.from_int(1)), 2},
                               {quaternion_algebra(q, q.from_int(-1), q.from_int(2)), 2},
                               {product(matrix_algebra(q, 2), cyclic_group_algebra(q, 3)), 4},
                               {matrix_algebra(Field::prime(3), 2), 2}};
    for (const auto& [e, count] : cases) {
        std::vector<Vec> es = primitive_idempotents(e);
        CHECK(es.size() == count);
        check_idempotents(e, es);
        // each e A e is local: its only idempotents are 0 and e
        for (const Vec& x : es) CHECK(primitive_idempotents(corner(e, x).first).size() == 1);
    }
}

TEST_CASE("module simplicity") {
    Field q = Field::rationals();
    OrdAlgebra f4 = quotient_algebra(Poly(f2(), vec(f2(), {1, 1, 1})));
    CHECK(module_is_simple(f4, regular_module(f4)) == Verdict::True);
    OrdAlgebra g2 = cyclic_group_algebra(q, 2);
    CHECK(module_is_simple(g2, regular_module(g2)) == Verdict::False);
    OrdAlgebra m2 = matrix_algebra(q, 2);
    OrdModule row = submodule(regular_module(m2), {m2.basis(0), m2.basis(1)});
    CHECK_NOTHROW(validate(m2, row));
    CHECK(module_is_simple(m2, row) == Verdict::True);
    CHECK(module_is_simple(m2, regular_module(m2)) == Verdict::False);
    OrdAlgebra g2f = cyclic_group_algebra(f2(), 2);
    CHECK(module_is_simple(g2f, regular_module(g2f)) == Verdict::False);
    OrdAlgebra h = quaternion_algebra(q, q.from_int(-1), q.from_int(-1));
    CHECK(module_is_simple(h, regular_module(h)) == Verdict::True);
}

TEST_CASE("module decomposition") {
    Field q = Field::rationals();
    OrdAlgebra g2 = cyclic_group_algebra(q, 2);
    auto d = decompose_module(g2, regular_module(g2));
    REQUIRE(d.size() == 2);
    CHECK(d[0].first.dim == 1);
    CHECK(d[0].second == 1);
    CHECK(d[1].second == 1);
    OrdAlgebra m2 = matrix_algebra(q, 2);
    auto dm = decompose_module(m2, regular_module(m2));
    REQUIRE(dm.size() == 1);
    CHECK(dm[0].first.dim == 2);
    CHECK(dm[0].second == 2);
    CHECK(decompose_module(m2, OrdModule{0, std::vector<Matrix>(4, Matrix(q, 0, 0))}).empty());
    for (const OrdAlgebra& e : {cyclic_group_algebra(q, 6), product(m2, g2), cyclic_group_algebra(f2(), 3),
                                matrix_algebra(q, 3)}) {
        std::size_t total = 0;
        for (const auto& [s, mult] : decompose_module(e, regular_module(e))) {
            CHECK_NOTHROW(validate(e, s));
            CHECK(module_is_simple(e, s) == Verdict::True);
            total += s.dim * static_cast<std::size_t>(mult);
        }
        CHECK(total == e.dim);
    }
    CHECK_THROWS_AS(decompose_module(cyclic_group_algebra(f2(), 2), regular_module(cyclic_group_algebra(f2(), 2))),
                    Error);
}

TEST_CASE("division verdicts") {
    Field q = Field::rationals();
    Field f3 = Field::prime(3);
    CHECK(is_division(quotient_algebra(Poly(f2(), vec(f2(), {1, 1, 1})))) == Verdict::True);
    CHECK(is_division(matrix_algebra(f3, 2)) == Verdict::False);
    CHECK(is_division(quaternion_algebra(q, q.from_int(-1), q.from_int(-1))) == Verdict::True);
    CHECK(is_division(quaternion_algebra(q, q.from_int(-1), q.from_int(3))) == Verdict::True);
    CHECK(is_division(quaternion_algebra(q, q.from_int(-1), q.from_int(2))) == Verdict::False);
    CHECK(is_division(quaternion_algebra(q, q.from_int(1), q.from_int(5))) == Verdict::False);
    CHECK(is_division(cyclic_group_algebra(q, 2)) == Verdict::False);
    CHECK(is_division(cyclic_group_algebra(f2(), 2)) == Verdict::False);
    CHECK(is_division(quotient_algebra(Poly(q, vec(q, {-5, 0, 1})))) == Verdict::True);
    CHECK(is_division(cyclic_group_algebra(q, 1)) == Verdict::True);
}

TEST_CASE("conic solvability agrees with a bounded search") {
    // For squarefree |a|, |b| <= 10 a nonzero solution, if any, has
    // coordinates bounded by 10.
    auto search = [](long a, long b) {
        for (long x = 0; x <= 12; ++x)
            for (long y = 0; y <= 12; ++y)
                for (long z = 0; z <= 40; ++z)
                    if ((x || y || z) && z * z == a * x * x + b * y * y) return true;
        return false;
    };
    const long sf[] = {-10, -7, -6, -5, -3, -2, -1, 1, 2, 3, 5, 6, 7, 10};
    for (long a : sf)
        for (long b : sf) {
            INFO(a << " " << b);
            CHECK(conic_has_rational_point(Rational(a), Rational(b)) == search(a, b));
        }
    CHECK(!conic_has_rational_point(Rational(-4, 9), Rational(-1)));
    CHECK(conic_has_rational_point(Rational(1, 3), Rational(2, 3)));
}

TEST_CASE("separability over k") {
    Field q = Field::rationals();
    CHECK(is_separable_over_k(cyclic_group_algebra(q, 2)));
    CHECK(!is_separable_over_k(cyclic_group_algebra(f2(), 2)));
    CHECK(!is_separable_over_k(quotient_algebra(Poly(f2(), vec(f2(), {0, 0, 1})))));
    CHECK(is_separable_over_k(matrix_algebra(q, 2)));
    CHECK(is_separable_over_k(quotient_algebra(Poly(f2(), vec(f2(), {1, 1, 1})))));
    CHECK(!is_separable_over_k(upper_triangular(q, 2)));
    std::vector<OrdAlgebra> all = small_finite_algebras();
    all.push_back(quaternion_algebra(q, q.from_int(-1), q.from_int(-1)));
    all.push_back(upper_triangular(q, 2));
    for (const OrdAlgebra& e : all)
        if (is_separable_over_k(e)) CHECK(is_semisimple(e));
}

TEST_CASE("separable field extensions") {
    Field q = Field::rationals();
    Field f3 = Field::prime(3);
    CHECK(is_separable_field_ext(Poly(q, vec(q, {-5, 0, 1}))));
    CHECK(is_separable_field_ext(Poly(f2(), vec(f2(), {1, 1, 1}))));
    CHECK(is_separable_field_ext(Poly(f3, vec(f3, {-1, -1, 0, 1}))));
    CHECK_THROWS_AS(is_separable_field_ext(Poly(q, vec(q, {-1, 0, 1}))), Error);
}

TEST_CASE("search budget reads the environment") {
    CHECK(search_budget() > 0);
    CHECK(std::string(to_string(Verdict::Undetermined)) == "undetermined");
}
