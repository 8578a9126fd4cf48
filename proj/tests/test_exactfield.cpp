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

// Exact arithmetic, polynomials, linear algebra and embeddings.

#include <random>

#include "doctest.h"
#include "tensorcat/exactfield.hpp"

using namespace tensorcat;

namespace {

Poly qpoly(std::vector<long> c) {
    Field q = Field::rationals();
    std::vector<Rational> r;
    for (long x : c) r.emplace_back(x);
    return Poly::from_rationals(q, r);
}

Poly fpoly(const Field& f, std::vector<long> c) {
    std::vector<Scalar> s;
    for (long x : c) s.push_back(f.from_int(x));
    return Poly(f, s);
}

Poly product(const Factorization& fs, const Field& f) {
    Poly p = Poly::constant(f.one());
    for (const auto& [g, m] : fs)
        for (int i = 0; i < m; ++i) p = p * g;
    return p;
}

// Brute-force irreducibility over a small prime field: no monic divisor of
// degree 1..deg/2.
bool brute_irreducible(const Poly& f) {
    const Field& k = f.field();
    const unsigned long p = k.characteristic();
    const int n = f.degree();
    for (int d = 1; 2 * d <= n; ++d) {
        unsigned long total = 1;
        for (int i = 0; i < d; ++i) total *= p;
        for (unsigned long code = 0; code < total; ++code) {
            std::vector<long> c;
            unsigned long r = code;
            for (int i = 0; i < d; ++i) {
                c.push_back(static_cast<long>(r % p));
                r /= p;
            }
            c.push_back(1);
            if ((f % fpoly(k, c)).is_zero()) return false;
        }
    }
    return true;
}

Field f4() { return Field::extension(2, {Rational(1), Rational(1), Rational(1)}); }

Scalar random_scalar(const Field& f, std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
    std::vector<Rational> c;
    for (std::size_t i = 0; i < f.degree(); ++i) c.emplace_back(num(rng), den(rng));
    if (f.is_finite())
        for (auto& x : c) x = Rational(num(rng) + 9);
    return Scalar(f, c);
}

}  // namespace

TEST_CASE("field arithmetic examples") {
    Field f7 = Field::prime(7);
    CHECK(f7.from_int(3).inv() == f7.from_int(5));
    Field q = Field::rationals();
    CHECK(q.from_rational(Rational(1, 2)) + q.from_rational(Rational(1, 3)) == q.from_rational(Rational(5, 6)));

    Field k = Field::extension(0, {Rational(-5), Rational(0), Rational(1)});
    Scalar a = k.generator();
    CHECK(a.inv() == a * k.from_rational(Rational(1, 5)));
    CHECK(a * a.inv() == k.one());
}

TEST_CASE("field errors") {
    Field f7 = Field::prime(7);
    CHECK_THROWS_AS(f7.zero().inv(), Error);
    try {
        (void)f7.zero().inv();
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DivisionByZero);
    }
    try {
        (void)(f7.one() + Field::prime(5).one());
        FAIL("expected mismatch");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::FieldMismatch);
    }
    CHECK_THROWS_AS(Field::prime(6), Error);
    // t^2 - 4 is reducible over Q.
    CHECK_THROWS_AS(Field::extension(0, {Rational(-4), Rational(0), Rational(1)}), Error);
    // t^2 + t + 1 is reducible over F_3: (t - 1)^2.
    CHECK_THROWS_AS(Field::extension(3, {Rational(1), Rational(1), Rational(1)}), Error);
}

TEST_CASE("canonical forms") {
    Field f5 = Field::prime(5);
    CHECK(f5.from_int(-1).coeffs()[0] == 4);
    CHECK(f5.from_rational(Rational(1, 2)).coeffs()[0] == 3);
    Field q = Field::rationals();
    Scalar x = q.from_rational(Rational(4, -6));
    CHECK(x.coeffs()[0].get_num() == -2);
    CHECK(x.coeffs()[0].get_den() == 3);
}

TEST_CASE("field axioms on random triples") {
    std::mt19937 rng(7);
    std::vector<Field> fields{Field::rationals(), Field::prime(7), f4(),
                              Field::extension(0, {Rational(-5), Rational(0), Rational(1)}),
                              Field::extension(0, {Rational(-1), Rational(-1), Rational(1)}),
                              Field::extension(3, {Rational(1), Rational(0), Rational(1)})};
    for (const auto& f : fields)
        for (int it = 0; it < 40; ++it) {
            Scalar a = random_scalar(f, rng), b = random_scalar(f, rng), c = random_scalar(f, rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            CHECK(a - a == f.zero());
            if (!a.is_zero()) CHECK(a * a.inv() == f.one());
        }
}

TEST_CASE("finite field order and Frobenius") {
    Field k = f4();
    CHECK(k.order() == 4);
    for (long i = 0; i < 2; ++i)
        for (long j = 0; j < 2; ++j) {
            Scalar x(k, {Rational(i), Rational(j)});
            CHECK(x.pow(4) == x);
        }
}

TEST_CASE("gcd examples") {
    CHECK(gcd(qpoly({-1, 0, 1}), qpoly({-1, 1})) == qpoly({-1, 1}));
    Field f2 = Field::prime(2);
    Poly t2 = fpoly(f2, {0, 0, 1});
    CHECK(t2.derivative().is_zero());
    CHECK(gcd(t2, t2.derivative()) == t2);
    CHECK(gcd(qpoly({-5, 0, 1}), qpoly({-1, 1, 1})) == qpoly({1}));
    Field q = Field::rationals();
    CHECK(gcd(qpoly({2, 4}), Poly(q)) == Poly(q, {q.from_rational(Rational(1, 2)), q.one()}));
}

TEST_CASE("extended gcd identity") {
    Poly a = qpoly({3, -2, 0, 1}), b = qpoly({-1, 0, 2});
    auto [g, s, t] = ext_gcd(a, b);
    CHECK(s * a + t * b == g);
}

TEST_CASE("factor examples") {
    Field q = Field::rationals();
    Factorization fs = factor(qpoly({-1, 0, 1}));
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].first == qpoly({-1, 1}));
    CHECK(fs[1].first == qpoly({1, 1}));

    Field f2 = Field::prime(2);
    Factorization g = factor(fpoly(f2, {1, 0, 1}));
    REQUIRE(g.size() == 1);
    CHECK(g[0].first == fpoly(f2, {1, 1}));
    CHECK(g[0].second == 2);

    Field k = Field::extension(0, {Rational(-5), Rational(0), Rational(1)});
    Poly h = fpoly(k, {-5, 0, 1});
    Factorization hs = factor(h);
    REQUIRE(hs.size() == 2);
    Scalar a = k.generator();
    bool plus = false, minus = false;
    for (const auto& [p, m] : hs) {
        CHECK(m == 1);
        if (p == Poly(k, {-a, k.one()})) minus = true;
        if (p == Poly(k, {a, k.one()})) plus = true;
    }
    CHECK(plus);
    CHECK(minus);
}

TEST_CASE("factorization reconstructs its input") {
    Field q = Field::rationals();
    std::vector<Poly> rational{
        qpoly({-1, 0, 0, 0, 1}),                   // t^4 - 1
        qpoly({1, 0, 0, 0, 1}),                    // cyclotomic, irreducible
        qpoly({4, 0, -5, 0, 1}),                   // (t^2-1)(t^2-4)
        qpoly({-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}),
        qpoly({1, -10, 0, 1}) * qpoly({1, -10, 0, 1}) * qpoly({2, 0, 1}),
        qpoly({9, 0, -10, 0, 1}) * qpoly({-2, 3}),
        qpoly({1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}),  // t^12 + 1
        qpoly({-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}),    // t^11 - 1
    };
    for (const auto& p : rational) {
        Factorization fs = factor(p);
        CHECK(product(fs, q) == p.monic());
        for (const auto& [g, m] : fs) CHECK(g.lead().is_one());
    }
    Factorization cyc12 = factor(rational[3]);
    CHECK(cyc12.size() == 6);  // Phi_d for d | 12
    Factorization cyc11 = factor(rational[7]);
    CHECK(cyc11.size() == 2);

    std::mt19937 rng(11);
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul}) {
        Field fp = Field::prime(p);
        for (int it = 0; it < 25; ++it) {
            std::uniform_int_distribution<long> coef(0, static_cast<long>(p) - 1), deg(1, 8);
            std::vector<long> c;
            int d = static_cast<int>(deg(rng));
            for (int i = 0; i < d; ++i) c.push_back(coef(rng));
            c.push_back(1);
            Poly f = fpoly(fp, c);
            Factorization fs = factor(f);
            CHECK(product(fs, fp) == f);
            for (const auto& [g, m] : fs) CHECK(brute_irreducible(g));
        }
    }

    Field k = f4();
    Poly x8 = Poly::monomial(k.one(), 16) - Poly::x(k);
    Factorization fs = factor(x8);
    CHECK(product(fs, k) == x8);
    // x^16 - x splits over F_4 into the 4 linear and 6 quadratic irreducibles.
    CHECK(fs.size() == 10);
}

TEST_CASE("rational degree limit") {
    std::vector<long> c(14, 0);
    c[0] = 1;
    c[1] = 1;
    c[13] = 1;
    try {
        (void)factor(qpoly(c));
        FAIL("expected DegreeTooLarge");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DegreeTooLarge);
    }
}

TEST_CASE("number field factorization") {
    // Over Q(phi): t^2 - t - 1 splits; t^2 - 5 splits as well.
    Field k = Field::extension(0, {Rational(-1), Rational(-1), Rational(1)}, "phi");
    Factorization fs = factor(fpoly(k, {-1, -1, 1}));
    CHECK(fs.size() == 2);
    Factorization gs = factor(fpoly(k, {-5, 0, 1}));
    CHECK(gs.size() == 2);
    Factorization hs = factor(fpoly(k, {-2, 0, 1}));
    CHECK(hs.size() == 1);
    Poly p = fpoly(k, {-1, -1, 1}) * fpoly(k, {-2, 0, 1}) * fpoly(k, {-2, 0, 1});
    Factorization ps = factor(p);
    CHECK(product(ps, k) == p);
    CHECK(ps.size() == 3);
}

TEST_CASE("linear algebra examples") {
    Field q = Field::rationals();
    Matrix a = Matrix::from_rows(q, {{q.one(), q.one()}, {q.one(), q.one()}}, 2);
    auto ker = kernel(a);
    REQUIRE(ker.size() == 1);
    CHECK(ker[0][0] == -ker[0][1]);
    CHECK(rank(Matrix::identity(q, 3)) == 3);
    Field f7 = Field::prime(7);
    auto x = solve(Matrix::from_rows(f7, {{f7.from_int(2)}}, 1), {f7.one()});
    REQUIRE(x);
    CHECK((*x)[0] == f7.from_int(4));
    auto none = solve(Matrix::from_rows(q, {{q.one()}, {q.one()}}, 1), {q.one(), q.zero()});
    CHECK(!none);
}

TEST_CASE("kernel vectors are annihilated") {
    std::mt19937 rng(3);
    for (const Field& f : {Field::rationals(), Field::prime(3), f4()}) {
        for (int it = 0; it < 20; ++it) {
            std::uniform_int_distribution<std::size_t> dim(1, 6);
            std::size_t r = dim(rng), c = dim(rng);
            Matrix m(f, r, c);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < c; ++j)
                    if (rng() % 3 != 0) m(i, j) = random_scalar(f, rng);
            auto ker = kernel(m);
            CHECK(ker.size() + rank(m) == c);
            for (const auto& v : ker) CHECK(is_zero_vec(m * v));
            if (r == c) {
                auto inv = inverse(m);
                CHECK(inv.has_value() == (rank(m) == r));
                CHECK(determinant(m).is_zero() == !inv.has_value());
                if (inv) CHECK(*inv * m == Matrix::identity(f, r));
            }
        }
    }
}

TEST_CASE("determinant is multiplicative") {
    Field q = Field::rationals();
    std::mt19937 rng(5);
    for (int it = 0; it < 10; ++it) {
        Matrix a(q, 4, 4), b(q, 4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) {
                a(i, j) = random_scalar(q, rng);
                b(i, j) = random_scalar(q, rng);
            }
        CHECK(determinant(a * b) == determinant(a) * determinant(b));
    }
}

TEST_CASE("coordinates") {
    Field q = Field::rationals();
    std::vector<Vec> basis{{q.one(), q.one(), q.zero()}, {q.zero(), q.one(), q.one()}};
    Coordinates c(q, basis, 3);
    auto x = c.of({q.from_int(2), q.from_int(5), q.from_int(3)});
    REQUIRE(x);
    CHECK((*x)[0] == q.from_int(2));
    CHECK((*x)[1] == q.from_int(3));
    CHECK(!c.of({q.one(), q.zero(), q.zero()}));
}

TEST_CASE("embedding examples") {
    Field f2 = Field::prime(2);
    Field k4 = f4();
    Embedding e(f2, k4, k4.one());
    CHECK(e(f2.one()) == k4.one());

    Field k = Field::extension(0, {Rational(-5), Rational(0), Rational(1)});
    Embedding conj(k, k, -k.generator());
    CHECK(conj(k.generator()) == -k.generator());
    CHECK_THROWS_AS(Embedding(k, k, k.one()), Error);

    Field k16 = Field::extension(2, find_irreducible(2, 4));
    auto roots = generator_images(k4, k16);
    CHECK(roots.size() == 2);
    std::mt19937 rng(1);
    for (const auto& r : roots) {
        Embedding em(k4, k16, r);
        for (int it = 0; it < 10; ++it) {
            Scalar a = random_scalar(k4, rng), b = random_scalar(k4, rng);
            CHECK(em(a + b) == em(a) + em(b));
            CHECK(em(a * b) == em(a) * em(b));
            if (!a.is_zero()) CHECK(!em(a).is_zero());
        }
    }
}

TEST_CASE("find_irreducible") {
    CHECK(find_irreducible(2, 2) == std::vector<Rational>{1, 1, 1});
    CHECK(find_irreducible(3, 2) == std::vector<Rational>{1, 0, 1});
}

TEST_CASE("decimal approximation") {
    Field k = Field::extension(0, {Rational(-1), Rational(-1), Rational(1)}, "phi");
    auto v = approximate(k.generator() + k.from_int(2));
    REQUIRE(v);
    CHECK(*v == doctest::Approx(3.6180339887).epsilon(1e-9));
    Field s = Field::extension(0, {Rational(-2), Rational(0), Rational(1)}, "s");
    auto w = approximate(s.generator());
    REQUIRE(w);
    CHECK(*w == doctest::Approx(1.41421356237).epsilon(1e-9));
    Field i = Field::extension(0, {Rational(1), Rational(0), Rational(1)}, "i");
    CHECK(!approximate(i.generator()));
}

TEST_CASE("to_string") {
    Field k = Field::extension(0, {Rational(-1), Rational(-1), Rational(1)}, "phi");
    CHECK((k.generator() + k.from_int(2)).to_string() == "phi + 2");
    CHECK((k.generator() - k.one()).to_string() == "phi - 1");
    CHECK(Field::rationals().from_rational(Rational(-1, 2)).to_string() == "-1/2");
}
