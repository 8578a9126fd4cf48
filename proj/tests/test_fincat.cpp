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

// Skeletal category kernel: tensor calculus, associators, duality, validation.

#include <random>

#include "doctest.h"
#include "tensorcat/catalog.hpp"
#include "tensorcat/fincat.hpp"

using namespace tensorcat;
namespace cat = tensorcat::catalog;

namespace {

std::vector<CategoryPres> all_categories() {
    Field q = Field::rationals();
    return {cat::vec(q),
            cat::vec(Field::prime(2)),
            cat::vec(Field::prime(3)),
            cat::pointed(2, 0, q),
            cat::pointed(2, 1, q),
            cat::pointed(3, 0, q),
            cat::graded_char_p(2),
            cat::graded_char_p(3),
            cat::fibonacci(),
            cat::ising(),
            cat::matrix_multifusion(2, q)};
}

Obj random_obj(const CategoryPres& c, std::mt19937& rng, int max_mult = 1) {
    Obj o = zero_obj(c);
    std::uniform_int_distribution<int> d(0, max_mult);
    for (auto& m : o.mult) m = d(rng);
    if (o.is_zero()) o.mult[rng() % c.rank()] = 1;
    return o;
}

Mor random_mor(const CategoryPres& c, const Obj& x, const Obj& y, std::mt19937& rng) {
    Mor m = zero_mor(c, x, y);
    std::uniform_int_distribution<long> d(-3, 3);
    for (auto& b : m.blocks)
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) = c.field.from_int(d(rng));
    return m;
}

}  // namespace

TEST_CASE("catalog categories validate") {
    for (const auto& c : all_categories()) {
        ValidationReport r = validate_category(c);
        INFO(c.name << ": " << r.failure);
        CHECK(r.ok);
        CHECK(r.pentagons > 0);
    }
}

TEST_CASE("perturbed Fibonacci fails at (tau,tau,tau,tau)") {
    CategoryPres c = cat::fibonacci();
    Matrix& f = c.F.at({1, 1, 1, 1});
    f(0, 0) = -f(0, 0);
    ValidationReport r = validate_category(c);
    CHECK(!r.ok);
    CHECK(r.failure.find("(tau,tau,tau,tau)") != std::string::npos);
    CHECK_THROWS_AS(require_valid(c), Error);
}

TEST_CASE("broken unit gauge is rejected") {
    CategoryPres c = cat::pointed(2, 0, Field::rationals());
    c.F.emplace(std::array<std::size_t, 4>{0, 1, 1, 0}, Matrix::from_rows(c.field, {{c.field.from_int(-1)}}, 1));
    CHECK(!validate_category(c).ok);
}

TEST_CASE("tensor_obj examples") {
    CategoryPres fib = cat::fibonacci();
    Obj tau = simple_obj(fib, 1);
    CHECK(tensor_obj(fib, tau, tau) == Obj{{1, 1}});
    CategoryPres v = cat::vec(Field::rationals());
    CHECK(tensor_obj(v, Obj{{2}}, Obj{{2}}) == Obj{{4}});
    CategoryPres z2 = cat::pointed(2, 0, Field::rationals());
    CHECK(tensor_obj(z2, Obj{{1, 1}}, Obj{{1, 1}}) == Obj{{2, 2}});
}

TEST_CASE("tensor_mor examples") {
    Field q = Field::rationals();
    CategoryPres v = cat::vec(q);
    Obj x{{2}}, y{{3}};
    CHECK(tensor_mor(v, id(v, x), id(v, y)) == id(v, tensor_obj(v, x, y)));
    Obj one{{1}};
    Mor two = id(v, one) * q.from_int(2), three = id(v, one) * q.from_int(3);
    CHECK(tensor_mor(v, two, three) == id(v, one) * q.from_int(6));
    // f: 1 -> 2*1 the column (1,0); f (x) id_{2*1} copies it per channel.
    Mor f = zero_mor(v, one, x);
    f.blocks[0](0, 0) = q.one();
    Mor t = tensor_mor(v, f, id(v, x));
    CHECK(t.blocks[0].rows() == 4);
    CHECK(t.blocks[0].cols() == 2);
    // source channel (1,0,1,j) -> target (1,0,1,j)
    CHECK(t.blocks[0](0, 0).is_one());
    CHECK(t.blocks[0](1, 1).is_one());
    CHECK(t.blocks[0](2, 0).is_zero());
    CHECK(t.blocks[0](3, 1).is_zero());
}

TEST_CASE("associator examples") {
    Field q = Field::rationals();
    CategoryPres v = cat::vec(q);
    Obj x{{2}};
    CHECK(associator(v, x, x, x) == id(v, Obj{{8}}));
    CategoryPres w = cat::pointed(2, 1, q);
    Obj g = simple_obj(w, 1);
    Mor a = associator(w, g, g, g);
    CHECK(a.blocks[1](0, 0) == q.from_int(-1));
    CategoryPres fib = cat::fibonacci();
    Obj tau = simple_obj(fib, 1);
    Mor f = associator(fib, tau, tau, tau);
    CHECK(f.blocks[1].transpose() == fib.F.at({1, 1, 1, 1}));
    CHECK(compose(associator_inv(fib, tau, tau, tau), f) == id(fib, f.src));
}

TEST_CASE("compose, dsum, id") {
    Field q = Field::rationals();
    CategoryPres v = cat::vec(q);
    Obj one{{1}}, two{{2}};
    std::mt19937 rng(1);
    Mor f = random_mor(v, two, one, rng);
    CHECK(compose(id(v, one), f) == f);
    CHECK(dsum(v, id(v, one), id(v, one)) == id(v, two));
    Mor row = zero_mor(v, two, one), col = zero_mor(v, one, two);
    row.blocks[0](0, 0) = q.one();
    col.blocks[0](1, 0) = q.one();
    CHECK(compose(row, col).is_zero());
}

TEST_CASE("duality examples") {
    Field q = Field::rationals();
    CategoryPres v = cat::vec(q);
    Obj one{{1}};
    CHECK(dual_r(v, one) == one);
    CHECK(coev_r(v, one) == id(v, one));
    CHECK(ev_r(v, one) == id(v, one));
    CategoryPres fib = cat::fibonacci();
    CHECK(fib.dual_r[1] == 1);
    CategoryPres z3 = cat::pointed(3, 0, q);
    CHECK(dual_r(z3, simple_obj(z3, 1)) == simple_obj(z3, 2));
}

TEST_CASE("hom_dim examples") {
    CategoryPres fib = cat::fibonacci();
    Obj tau = simple_obj(fib, 1);
    CHECK(hom_dim(unit_obj(fib), tensor_obj(fib, tau, tau)) == 1);
    CHECK(hom_dim(Obj{{2}}, Obj{{2}}) == 4);
    CategoryPres z2 = cat::pointed(2, 0, Field::rationals());
    CHECK(hom_dim(unit_obj(z2), simple_obj(z2, 1)) == 0);
}

TEST_CASE("pentagon on random objects") {
    std::mt19937 rng(17);
    for (const auto& c : all_categories()) {
        for (int it = 0; it < 3; ++it) {
            Obj x = random_obj(c, rng), y = random_obj(c, rng), z = random_obj(c, rng), w = random_obj(c, rng);
            Obj xy = tensor_obj(c, x, y), yz = tensor_obj(c, y, z), zw = tensor_obj(c, z, w);
            Mor p1 = compose(associator(c, x, y, zw), associator(c, xy, z, w));
            Mor p2 = compose(tensor_mor(c, id(c, x), associator(c, y, z, w)),
                             compose(associator(c, x, yz, w), tensor_mor(c, associator(c, x, y, z), id(c, w))));
            INFO(c.name);
            CHECK(p1 == p2);
        }
    }
}

TEST_CASE("snake equations on composite objects") {
    std::mt19937 rng(23);
    for (const auto& c : all_categories()) {
        Obj x = random_obj(c, rng, 2);
        Obj xr = dual_r(c, x), xl = dual_l(c, x);
        Mor s1 = tensor_mor(c, id(c, x), coev_r(c, x));
        s1.src = x;
        Mor t1 = compose(tensor_mor(c, ev_r(c, x), id(c, x)), compose(associator_inv(c, x, xr, x), s1));
        t1.dst = x;
        CHECK(t1 == id(c, x));
        Mor s2 = tensor_mor(c, coev_l(c, x), id(c, x));
        s2.src = x;
        Mor t2 = compose(tensor_mor(c, id(c, x), ev_l(c, x)), compose(associator(c, x, xl, x), s2));
        t2.dst = x;
        CHECK(t2 == id(c, x));
        Mor s3 = tensor_mor(c, id(c, xl), coev_l(c, x));
        s3.src = xl;
        Mor t3 = compose(tensor_mor(c, ev_l(c, x), id(c, xl)), compose(associator_inv(c, xl, x, xl), s3));
        t3.dst = xl;
        CHECK(t3 == id(c, xl));
    }
}

TEST_CASE("functoriality and interchange") {
    std::mt19937 rng(29);
    for (const auto& c : all_categories()) {
        Obj x = random_obj(c, rng), y = random_obj(c, rng), z = random_obj(c, rng);
        Obj u = random_obj(c, rng), v = random_obj(c, rng), w = random_obj(c, rng);
        Mor f = random_mor(c, y, z, rng), f2 = random_mor(c, x, y, rng);
        Mor g = random_mor(c, v, w, rng), g2 = random_mor(c, u, v, rng);
        CHECK(compose(tensor_mor(c, f, g), tensor_mor(c, f2, g2)) == tensor_mor(c, compose(f, f2), compose(g, g2)));
        CHECK(tensor_mor(c, f + f, g) == tensor_mor(c, f, g) * c.field.from_int(2));
    }
}

TEST_CASE("duality detects the dual label") {
    for (const auto& c : all_categories())
        for (std::size_t a = 0; a < c.rank(); ++a)
            for (std::size_t b = 0; b < c.rank(); ++b) {
                Obj ab = tensor_obj(c, simple_obj(c, a), dual_r(c, simple_obj(c, b)));
                CHECK((hom_dim(unit_obj(c), ab) > 0) == (a == b));
            }
}

TEST_CASE("mates round trip") {
    std::mt19937 rng(31);
    for (const auto& c : all_categories()) {
        Obj x = random_obj(c, rng), y = random_obj(c, rng), z = random_obj(c, rng);
        Mor h = random_mor(c, tensor_obj(c, x, y), z, rng);
        Mor r = mate_right(c, h, x, y);
        CHECK(r.src == x);
        CHECK(r.dst == tensor_obj(c, z, dual_l(c, y)));
        CHECK(unmate_right(c, r, z, y) == h);
        Mor l = mate_left(c, h, x, y);
        CHECK(l.src == y);
        CHECK(unmate_left(c, l, x, z) == h);
    }
    // The right mate of an evaluation is the identity up to normalization.
    CategoryPres fib = cat::fibonacci();
    Obj tau = simple_obj(fib, 1);
    Mor ev = ev_l(fib, tau);  // tau^L tau -> 1
    Mor m = mate_right(fib, ev, dual_l(fib, tau), tau);
    m.dst = dual_l(fib, tau);
    CHECK(m == id(fib, tau));
    CategoryPres v = cat::vec(Field::rationals());
    Obj one = unit_obj(v);
    Mor mi = mate_right(v, id(v, one), one, one);
    CHECK(mi == id(v, one));
}

TEST_CASE("scalar extension revalidates") {
    Field f2 = Field::prime(2);
    Field f4 = cat::f4_field();
    CategoryPres v = cat::vec(f2);
    CategoryPres v4 = scalar_extend(v, Embedding(f2, f4, f4.one()));
    CHECK(validate_category(v4).ok);
    CHECK(v4.field == f4);

    Field q = Field::rationals();
    Field k = Field::extension(0, {Rational(-5), Rational(0), Rational(1)});
    CategoryPres w = cat::pointed(2, 1, q);
    CHECK(validate_category(scalar_extend(w, Embedding(q, k, k.one()))).ok);

    // Q(phi) into Q(sqrt 5) via phi -> (1 + sqrt 5) / 2.
    CategoryPres fib = cat::fibonacci();
    Scalar img = (k.one() + k.generator()) * k.from_rational(Rational(1, 2));
    CategoryPres fib5 = scalar_extend(fib, Embedding(fib.field, k, img));
    CHECK(validate_category(fib5).ok);
    CHECK_THROWS_AS(Embedding(fib.field, k, k.generator()), Error);
}
