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

#include "tensorcat/catalog.hpp"

#include <memory>

namespace tensorcat::catalog {

Field golden_field() { return Field::extension(0, {Rational(-1), Rational(-1), Rational(1)}, "phi"); }

Field sqrt2_field() { return Field::extension(0, {Rational(-2), Rational(0), Rational(1)}, "s"); }

Field f4_field() { return Field::extension(2, {Rational(1), Rational(1), Rational(1)}, "a"); }

namespace {

CategoryPres skeleton(const Field& f, std::vector<std::string> labels, std::vector<std::size_t> units) {
    CategoryPres c(f);
    c.labels = std::move(labels);
    c.units = std::move(units);
    const std::size_t L = c.rank();
    c.fusion.assign(L * L * L, 0);
    c.dual_r.assign(L, 0);
    return c;
}

void set_n(CategoryPres& c, std::size_t a, std::size_t b, std::size_t d, int n) {
    c.fusion[(a * c.rank() + b) * c.rank() + d] = n;
}

Matrix mat(const Field& f, std::vector<std::vector<Scalar>> rows) {
    return Matrix::from_rows(f, rows, rows.empty() ? 0 : rows[0].size());
}

std::string group_label(std::size_t k) {
    if (k == 0) return "1";
    if (k == 1) return "g";
    return "g" + std::to_string(k);
}

Scalar root_of_unity(std::size_t n, const Field& f) {
    Poly t = Poly::monomial(f.one(), n) - Poly::constant(f.one());
    for (const auto& [g, m] : factor(t)) {
        if (g.degree() != 1) continue;
        Scalar z = -g.coeffs()[0];
        bool primitive = true;
        Scalar p = z;
        for (std::size_t k = 1; k < n; ++k, p *= z)
            if (p.is_one()) primitive = false;
        if (primitive) return z;
    }
    fail(ErrorKind::UnsupportedField, "no primitive " + std::to_string(n) + "-th root of unity in " + f.describe());
}

void finish(CategoryPres& c) {
    for (std::size_t a = 0; a < c.rank(); ++a) {
        int nr = 0, nl = 0;
        for (auto e : c.units) {
            nr += c.N(c.dual_r[a], a, e);
            nl += c.N(a, c.dual_r[a], e);
        }
        c.cup.push_back(Vec(static_cast<std::size_t>(nr), c.field.one()));
        c.cap.push_back(Vec(static_cast<std::size_t>(nl), c.field.one()));
    }
    solve_caps(c);
    require_valid(c);
}

}  // namespace

void solve_caps(CategoryPres& c) {
    for (std::size_t a = 0; a < c.rank(); ++a) {
        if (c.cup[a].size() != 1 || c.cap[a].size() != 1)
            fail(ErrorKind::SnakeUnsolvable, "duality pairing of " + c.labels[a] + " is not multiplicity free");
        c.cap[a][0] = c.field.one();
        Obj x = simple_obj(c, a);
        Mor s1 = tensor_mor(c, id(c, x), coev_r(c, x));
        s1.src = x;
        Mor t = compose(tensor_mor(c, ev_r(c, x), id(c, x)), compose(associator_inv(c, x, dual_r(c, x), x), s1));
        const Scalar& k = t.blocks[a](0, 0);
        if (k.is_zero()) fail(ErrorKind::SnakeUnsolvable, "snake composite vanishes for " + c.labels[a]);
        c.cap[a][0] = k.inv();
    }
}

CategoryPres vec(const Field& f) {
    CategoryPres c = skeleton(f, {"1"}, {0});
    set_n(c, 0, 0, 0, 1);
    c.dual_r[0] = 0;
    c.name = "vec";
    finish(c);
    return c;
}

CategoryPres pointed(std::size_t n, long twist, const Field& f) {
    if (n == 0) fail(ErrorKind::UnknownEntry, "group order must be positive");
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < n; ++k) labels.push_back(group_label(k));
    CategoryPres c = skeleton(f, labels, {0});
    for (std::size_t a = 0; a < n; ++a) {
        c.dual_r[a] = (n - a) % n;
        for (std::size_t b = 0; b < n; ++b) set_n(c, a, b, (a + b) % n, 1);
    }
    const long t = ((twist % static_cast<long>(n)) + static_cast<long>(n)) % static_cast<long>(n);
    if (t != 0) {
        Scalar zeta = root_of_unity(n, f);
        for (std::size_t a = 1; a < n; ++a)
            for (std::size_t b = 1; b < n; ++b)
                for (std::size_t d = 1; d < n; ++d) {
                    if (b + d < n) continue;
                    Scalar w = zeta.pow(Integer(static_cast<long>(a) * t));
                    if (!w.is_one()) c.F.emplace(std::array<std::size_t, 4>{a, b, d, (a + b + d) % n}, mat(f, {{w}}));
                }
    }
    c.name = "pointed_z" + std::to_string(n) + (t ? "_twist" + std::to_string(t) : "");
    finish(c);
    return c;
}

CategoryPres graded_char_p(unsigned long p) {
    CategoryPres c = pointed(p, 0, Field::prime(p));
    c.name = "graded_char_" + std::to_string(p);
    return c;
}

CategoryPres fibonacci() {
    Field k = golden_field();
    CategoryPres c = skeleton(k, {"1", "tau"}, {0});
    set_n(c, 0, 0, 0, 1);
    set_n(c, 0, 1, 1, 1);
    set_n(c, 1, 0, 1, 1);
    set_n(c, 1, 1, 0, 1);
    set_n(c, 1, 1, 1, 1);
    c.dual_r = {0, 1};
    const Scalar phi = k.generator();
    const Scalar pinv = phi - k.one();  // phi^-1
    c.F.emplace(std::array<std::size_t, 4>{1, 1, 1, 1}, mat(k, {{pinv, k.one()}, {pinv, -pinv}}));
    c.name = "fibonacci";
    finish(c);
    return c;
}

CategoryPres ising() {
    Field k = sqrt2_field();
    // labels: 0 = 1, 1 = psi, 2 = sigma
    CategoryPres c = skeleton(k, {"1", "psi", "sigma"}, {0});
    for (std::size_t a = 0; a < 3; ++a) {
        set_n(c, 0, a, a, 1);
        set_n(c, a, 0, a, 1);
    }
    set_n(c, 1, 1, 0, 1);
    set_n(c, 1, 2, 2, 1);
    set_n(c, 2, 1, 2, 1);
    set_n(c, 2, 2, 0, 1);
    set_n(c, 2, 2, 1, 1);
    c.dual_r = {0, 1, 2};
    const Scalar h = k.generator() * k.from_rational(Rational(1, 2));  // 1/sqrt(2)
    c.F.emplace(std::array<std::size_t, 4>{2, 2, 2, 2}, mat(k, {{h, h}, {h, -h}}));
    c.F.emplace(std::array<std::size_t, 4>{2, 1, 2, 1}, mat(k, {{-k.one()}}));
    c.F.emplace(std::array<std::size_t, 4>{1, 2, 1, 2}, mat(k, {{-k.one()}}));
    c.name = "ising";
    finish(c);
    return c;
}

CategoryPres matrix_multifusion(std::size_t n, const Field& f) {
    std::vector<std::string> labels;
    std::vector<std::size_t> units;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            labels.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
            if (i == j) units.push_back(i * n + j);
        }
    CategoryPres c = skeleton(f, labels, units);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            c.dual_r[i * n + j] = j * n + i;
            for (std::size_t l = 0; l < n; ++l) set_n(c, i * n + j, j * n + l, i * n + l, 1);
        }
    c.name = "matrix_multifusion_" + std::to_string(n);
    finish(c);
    return c;
}

// ---------------------------------------------------------------------------
// Algebras

AlgebraPres regular_pointed(const Cat& cp, std::size_t n, std::size_t order) {
    const CategoryPres& c = *cp;
    if (order == 0 || n % order != 0)
        fail(ErrorKind::UnknownEntry, "Z/" + std::to_string(n) + " has no subgroup of order " + std::to_string(order));
    const std::size_t step = n / order;
    Obj carrier = zero_obj(c);
    for (std::size_t k = 0; k < n; k += step) carrier.mult[k] = 1;
    for (std::size_t a = 0; a < n; a += step)
        for (std::size_t b = 0; b < n; b += step)
            for (std::size_t d = 0; d < n; d += step) {
                Matrix w = c.f_matrix(a, b, d, (a + b + d) % n);
                if (!w(0, 0).is_one())
                    fail(ErrorKind::CocycleObstruction, "the cocycle is nontrivial on the subgroup at (" + c.labels[a] +
                                                            "," + c.labels[b] + "," + c.labels[d] + ")");
            }
    TensorBasis tb(c, carrier, carrier);
    Mor m = zero_mor(c, tb.obj(), carrier);
    for (std::size_t a = 0; a < n; a += step)
        for (std::size_t b = 0; b < n; b += step) {
            const std::size_t d = (a + b) % n;
            m.blocks[d](0, tb.index(d, a, 0, b, 0, 0)) = c.field.one();
        }
    Mor u = zero_mor(c, unit_obj(c), carrier);
    u.blocks[0](0, 0) = c.field.one();
    AlgebraPres alg{cp, carrier, m, u, order == n ? "regular" : "subgroup_z" + std::to_string(order)};
    require_valid(alg);
    return alg;
}

AlgebraPres ordinary_group_algebra(const Cat& cp, std::size_t n) {
    const CategoryPres& c = *cp;
    if (c.rank() != 1) fail(ErrorKind::UnknownEntry, "ordinary group algebras live in Vec");
    Obj carrier{{static_cast<int>(n)}};
    Mor m = zero_mor(c, tensor_obj(c, carrier, carrier), carrier);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.blocks[0]((i + j) % n, i * n + j) = c.field.one();
    Mor u = zero_mor(c, unit_obj(c), carrier);
    u.blocks[0](0, 0) = c.field.one();
    AlgebraPres alg{cp, carrier, m, u, "group_z" + std::to_string(n)};
    require_valid(alg);
    return alg;
}

// ---------------------------------------------------------------------------

namespace {

std::function<Cat()> shared(std::function<CategoryPres()> make) {
    return [make] { return std::make_shared<const CategoryPres>(make()); };
}

AlgebraPres named(AlgebraPres a, std::string name) {
    a.name = std::move(name);
    require_valid(a);
    return a;
}

std::vector<CatalogEntry> build() {
    const Field q = Field::rationals();
    std::vector<CatalogEntry> out;
    auto cat = [&](std::string name, std::string desc, std::function<CategoryPres()> make) {
        out.push_back({std::move(name), std::move(desc), shared(std::move(make)), {}});
    };
    auto alg = [&](const std::string& cname, std::string aname, std::string desc,
                   std::function<AlgebraPres(const Cat&)> make) {
        for (const auto& e : out)
            if (e.name == cname) {
                out.push_back({cname + ":" + aname, std::move(desc), e.category, std::move(make)});
                return;
            }
    };
    cat("vec_q", "Vec over Q", [q] { return vec(q); });
    cat("vec_f2", "Vec over F_2", [] { return vec(Field::prime(2)); });
    cat("vec_f3", "Vec over F_3", [] { return vec(Field::prime(3)); });
    cat("vec_f4", "Vec over F_4", [] { return vec(f4_field()); });
    cat("vec_z2_q", "Z/2-graded vector spaces over Q", [q] { return pointed(2, 0, q); });
    cat("vec_z2_omega_q", "Z/2-graded vector spaces over Q, omega(g,g,g) = -1", [q] { return pointed(2, 1, q); });
    cat("vec_z3_q", "Z/3-graded vector spaces over Q", [q] { return pointed(3, 0, q); });
    cat("vec_z4_q", "Z/4-graded vector spaces over Q", [q] { return pointed(4, 0, q); });
    cat("vec_z2_f2", "Z/2-graded vector spaces over F_2", [] { return graded_char_p(2); });
    cat("vec_z3_f3", "Z/3-graded vector spaces over F_3", [] { return graded_char_p(3); });
    cat("fibonacci", "Fibonacci category over Q(phi)", [] { return fibonacci(); });
    cat("ising", "Ising category over Q(sqrt 2)", [] { return ising(); });
    cat("matrix_multifusion_2", "2x2 matrix multi-fusion category over Q", [q] { return matrix_multifusion(2, q); });

    alg("vec_q", "trivial", "unit algebra", trivial_algebra);
    alg("vec_q", "group_z2", "ordinary group algebra Q[Z/2]", [](const Cat& c) { return ordinary_group_algebra(c, 2); });
    alg("vec_q", "end_2", "internal end of 2*1, the matrix algebra M_2(Q)",
        [](const Cat& c) { return named(internal_end(c, Obj{{2}}), "end_2"); });
    alg("vec_q", "trivial_sum", "trivial algebra plus itself",
        [](const Cat& c) { return named(direct_sum(trivial_algebra(c), trivial_algebra(c)), "trivial_sum"); });
    alg("vec_f2", "trivial", "unit algebra", trivial_algebra);
    alg("vec_f2", "group_z2", "ordinary group algebra F_2[Z/2]",
        [](const Cat& c) { return ordinary_group_algebra(c, 2); });
    alg("vec_f3", "group_z3", "ordinary group algebra F_3[Z/3]",
        [](const Cat& c) { return ordinary_group_algebra(c, 3); });
    alg("vec_f4", "group_z2", "ordinary group algebra F_4[Z/2]",
        [](const Cat& c) { return ordinary_group_algebra(c, 2); });
    alg("vec_z2_q", "trivial", "unit algebra", trivial_algebra);
    alg("vec_z2_q", "regular", "regular algebra 1+g", [](const Cat& c) { return regular_pointed(c, 2, 2); });
    alg("vec_z2_omega_q", "trivial", "unit algebra", trivial_algebra);
    alg("vec_z2_omega_q", "end_g", "internal end of g",
        [](const Cat& c) { return named(internal_end(c, simple_obj(*c, 1)), "end_g"); });
    alg("vec_z3_q", "regular", "regular algebra of Z/3", [](const Cat& c) { return regular_pointed(c, 3, 3); });
    alg("vec_z4_q", "regular", "regular algebra of Z/4", [](const Cat& c) { return regular_pointed(c, 4, 4); });
    alg("vec_z4_q", "subgroup_z2", "algebra of the subgroup Z/2 of Z/4",
        [](const Cat& c) { return regular_pointed(c, 4, 2); });
    alg("vec_z2_f2", "regular", "regular algebra 1+g over F_2", [](const Cat& c) { return regular_pointed(c, 2, 2); });
    alg("vec_z3_f3", "regular", "regular algebra of Z/3 over F_3",
        [](const Cat& c) { return regular_pointed(c, 3, 3); });
    alg("fibonacci", "trivial", "unit algebra", trivial_algebra);
    alg("fibonacci", "end_tau", "internal end of tau",
        [](const Cat& c) { return named(internal_end(c, simple_obj(*c, 1)), "end_tau"); });
    alg("ising", "end_sigma", "internal end of sigma",
        [](const Cat& c) { return named(internal_end(c, simple_obj(*c, 2)), "end_sigma"); });
    alg("ising", "end_psi", "internal end of psi",
        [](const Cat& c) { return named(internal_end(c, simple_obj(*c, 1)), "end_psi"); });
    alg("matrix_multifusion_2", "trivial", "unit algebra e11+e22", trivial_algebra);
    alg("matrix_multifusion_2", "end_e12", "internal end of e12",
        [](const Cat& c) { return named(internal_end(c, simple_obj(*c, 1)), "end_e12"); });
    return out;
}

}  // namespace

const std::vector<CatalogEntry>& entries() {
    static const std::vector<CatalogEntry> all = build();
    return all;
}

const CatalogEntry& lookup(const std::string& name) {
    for (const auto& e : entries())
        if (e.name == name) return e;
    fail(ErrorKind::UnknownEntry, "no catalog entry named '" + name + "'");
}

}  // namespace tensorcat::catalog
