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

#include "tensorcat/structure.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace tensorcat {

namespace {

Mor relabel(Mor f, const Obj& src, const Obj& dst) {
    f.src = src;
    f.dst = dst;
    return f;
}

/// sum coeffs[k] basis[k], over the field of the coefficients.
Mor combine(const CategoryPres& c, const std::vector<Mor>& basis, const Vec& coeffs, const Obj& x, const Obj& y) {
    if (basis.empty()) return zero_mor(c, x, y);
    Mor m = basis[0] * coeffs[0];
    for (std::size_t k = 1; k < basis.size(); ++k)
        if (!coeffs[k].is_zero()) m = m + basis[k] * coeffs[k];
    return m;
}

/// Blockwise inverse, or nullopt if some block is singular or not square.
std::optional<Mor> invert(const Mor& f) {
    Mor out{f.dst, f.src, {}};
    for (const Matrix& b : f.blocks) {
        if (b.rows() != b.cols()) return std::nullopt;
        if (b.rows() == 0) {
            out.blocks.push_back(b);
            continue;
        }
        std::optional<Matrix> inv = inverse(b);
        if (!inv) return std::nullopt;
        out.blocks.push_back(std::move(*inv));
    }
    return out;
}

bool is_invertible(const Mor& f) {
    for (const Matrix& b : f.blocks) {
        if (b.rows() != b.cols()) return false;
        if (b.rows() > 0 && determinant(b).is_zero()) return false;
    }
    return true;
}

}  // namespace

GlobalSections global_sections(const AlgebraPres& a) {
    const CategoryPres& c = *a.cat;
    const Obj one = unit_obj(c);
    std::vector<Mor> basis = hom_basis(c, one, a.carrier);
    std::vector<Vec> flat;
    for (const Mor& b : basis) flat.push_back(flatten(b));
    const std::size_t n = basis.size();
    Coordinates co(c.field, flat, n ? flat[0].size() : 0);
    auto prod = [&](std::size_t i, std::size_t j) {
        return co.of_checked(flatten(compose(a.mult, tensor_mor(c, basis[i], basis[j]))));
    };
    Vec unit = n ? co.of_checked(flatten(a.unit)) : Vec{};
    return GlobalSections{OrdAlgebra::from_products(c.field, n, prod, unit), std::move(basis)};
}

bool is_semisimple_algebra(const AlgebraPres& a) {
    return is_semisimple(end_algebra(a, projective_generator(a)).algebra);
}

namespace {

std::vector<std::vector<std::size_t>> hom_classes(const std::vector<std::vector<Obj>>& homs) {
    const std::size_t n = homs.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    std::function<std::size_t(std::size_t)> find = [&](std::size_t i) {
        return parent[i] == i ? i : parent[i] = find(parent[i]);
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!homs[i][j].is_zero()) parent[find(i)] = find(j);
    std::vector<std::vector<std::size_t>> out;
    std::vector<long> slot(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t r = find(i);
        if (slot[r] < 0) {
            slot[r] = static_cast<long>(out.size());
            out.emplace_back();
        }
        out[static_cast<std::size_t>(slot[r])].push_back(i);
    }
    return out;
}

}  // namespace

namespace {

Mor left_multiplication(const AlgebraPres& a, const Mor& e) {
    const CategoryPres& c = *a.cat;
    return relabel(compose(a.mult, tensor_mor(c, e, id(c, a.carrier))), a.carrier, a.carrier);
}

bool isomorphic(const AlgebraPres& a, const ModulePres& x, const ModulePres& y) {
    return !hom_A(a, x, y).empty() && !hom_A(a, y, x).empty();
}

}  // namespace

MatrixDecomposition matrix_decomposition(const AlgebraPres& a) {
    const CategoryPres& c = *a.cat;
    if (!is_semisimple_algebra(a)) fail(ErrorKind::NotSemisimple, "matrix decomposition needs a semisimple algebra: " + a.name);
    GlobalSections gs = global_sections(a);
    ModulePres reg = regular_module(a);
    MatrixDecomposition out;
    for (const Vec& idem : primitive_idempotents(gs.algebra)) {
        Mor e = combine(c, gs.basis, idem, unit_obj(c), a.carrier);
        ModulePres x = image_module(a, reg, left_multiplication(a, e));
        bool known = false;
        for (std::size_t i = 0; i < out.summands.size() && !known; ++i)
            if (isomorphic(a, x, out.summands[i])) {
                ++out.multiplicity[i];
                known = true;
            }
        if (known) continue;
        out.summands.push_back(std::move(x));
        out.multiplicity.push_back(1);
        out.division_blocks.push_back(corner_algebra(a, e));
    }
    const std::size_t n = out.summands.size();
    out.homs.assign(n, std::vector<Obj>(n, zero_obj(c)));
    out.reconstructed = zero_obj(c);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            out.homs[i][j] = internal_hom(a, out.summands[i], out.summands[j]);
            out.reconstructed = dsum(out.reconstructed, scale(out.homs[i][j], out.multiplicity[i] * out.multiplicity[j]));
        }
    out.classes = hom_classes(out.homs);
    return out;
}

bool is_simple_algebra(const AlgebraPres& a) {
    if (!is_semisimple_algebra(a)) return false;
    SimpleModules sm = simple_modules(a);
    const std::size_t n = sm.modules.size();
    std::vector<std::vector<Obj>> homs(n, std::vector<Obj>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) homs[i][j] = internal_hom(a, sm.modules[i], sm.modules[j]);
    return hom_classes(homs).size() == 1;
}

Verdict is_division_algebra(const AlgebraPres& a) {
    ModulePres p = projective_generator(a);
    EndAlgebra e = end_algebra(a, p);
    return module_is_simple(e.algebra, hom_module(a, e, p, regular_module(a)));
}

bool is_separable(const AlgebraPres& a) {
    const CategoryPres& c = *a.cat;
    const Obj aa = tensor_obj(c, a.carrier, a.carrier);
    std::vector<Mor> sections = hom_bimod(a, regular_bimodule(a), free_bimodule(a, unit_obj(c)));
    if (sections.empty()) return false;
    std::vector<Vec> cols;
    for (const Mor& s : sections) cols.push_back(flatten(compose(a.mult, relabel(s, a.carrier, aa))));
    Vec target = flatten(id(c, a.carrier));
    return solve(Matrix::from_columns(c.field, cols, target.size()), target).has_value();
}

bool bimodule_criterion(const AlgebraPres& a) { return is_semisimple(bimod_end_algebra(a).algebra); }

ModulePres left_dual_module(const AlgebraPres& a) { return module_dual(a, regular_module(a, Side::Left)); }

Mor beta(const AlgebraPres& a, const Mor& g) {
    const CategoryPres& c = *a.cat;
    const Obj& A = a.carrier;
    Mor mate = mate_right(c, a.mult, A, A);
    return compose(a.mult, compose(tensor_mor(c, id(c, A), g), mate));
}

namespace {

/// Distinct field elements indexed from 0: integers in characteristic 0,
/// base-p digit vectors over a finite field.
Scalar enumerate_element(const Field& f, std::size_t k) {
    if (!f.is_finite()) return f.from_int(static_cast<long>(k));
    const unsigned long p = f.characteristic();
    std::vector<Rational> coeffs;
    for (std::size_t i = 0; i < f.degree(); ++i, k /= p) coeffs.emplace_back(static_cast<unsigned long>(k % p));
    return Scalar(f, coeffs);
}

struct BetaRunner {
    const CategoryPres& c;
    const Obj& carrier;
    Obj dual;
    std::vector<Mor> gs, bs;
    std::size_t budget;
    BetaSearch& out;

    Field field() const { return bs[0].blocks.empty() ? c.field : bs[0].blocks[0].field(); }

    /// True once a witness is found.
    bool attempt(const Vec& coeffs) {
        ++out.evaluations;
        Mor b = combine(c, bs, coeffs, carrier, carrier);
        if (!is_invertible(b)) return false;
        out.verdict = Verdict::True;
        out.witness = combine(c, gs, coeffs, dual, carrier);
        out.search_field = field().describe();
        return true;
    }
    bool exhausted() const { return out.evaluations >= budget; }

    /// Runs over all vectors with entries value(0..width-1), skipping the zero vector.
    /// Returns true if the whole box was covered.
    bool box(std::size_t width, const std::function<Scalar(std::size_t)>& value) {
        const std::size_t t = gs.size();
        std::vector<std::size_t> digit(t, 0);
        while (true) {
            std::size_t pos = 0;
            while (pos < t && ++digit[pos] == width) digit[pos++] = 0;
            if (pos == t) return true;
            if (exhausted()) return false;
            Vec coeffs;
            for (std::size_t d : digit) coeffs.push_back(value(d));
            if (attempt(coeffs)) return true;
        }
    }
};

}  // namespace

BetaSearch separability_beta(const AlgebraPres& a, std::size_t budget) {
    const CategoryPres& c = *a.cat;
    ModulePres al = left_dual_module(a);
    BetaSearch out;
    out.budget = budget;
    out.search_field = c.field.describe();
    BetaRunner run{c, a.carrier, al.carrier, hom_A(a, al, regular_module(a)), {}, budget, out};
    if (run.gs.empty()) {
        out.verdict = Verdict::False;
        return out;
    }
    for (const Mor& g : run.gs) run.bs.push_back(beta(a, g));
    const std::size_t t = run.gs.size();

    // Basis elements.
    for (std::size_t k = 0; k < t && !run.exhausted(); ++k) {
        Vec e = zero_vec(c.field, t);
        e[k] = c.field.one();
        if (run.attempt(e)) return out;
    }
    // Integer combinations with entries in [-3, 3].
    run.box(7, [&](std::size_t d) {
        const long v = static_cast<long>(d + 1) / 2;
        return c.field.from_int(d % 2 ? v : -v);
    });
    if (out.verdict == Verdict::True) return out;

    // det(beta(sum c_k g_k)) is a polynomial of degree at most D in each c_k,
    // so if it vanishes on a grid S^t with |S| > D it vanishes identically.
    const std::size_t D = static_cast<std::size_t>(a.carrier.total());
    if (c.field.is_finite() && c.field.order() <= D) {
        std::size_t m = 1;
        Integer q = c.field.order();
        for (Integer qm = q; qm <= D; qm *= q) ++m;
        const unsigned long p = c.field.characteristic();
        Field big = Field::extension(p, find_irreducible(p, c.field.degree() * m), "w");
        Embedding emb(c.field, big, generator_images(c.field, big).at(0));
        for (Mor& g : run.gs) g = embed_mor(g, emb);
        for (Mor& b : run.bs) b = embed_mor(b, emb);
    }
    const Field f = run.field();
    out.search_field = f.describe();
    bool covered = run.box(D + 1, [&](std::size_t d) { return enumerate_element(f, d); });
    if (out.verdict == Verdict::True) return out;
    out.verdict = covered ? Verdict::False : Verdict::Undetermined;
    return out;
}

Mor alpha(const AlgebraPres& a, const Mor& f, const Mor& g) {
    const CategoryPres& c = *a.cat;
    return compose(ev_l(c, a.carrier), compose(tensor_mor(c, f, g), coev_l(c, a.carrier)));
}

namespace {

void require_division(const AlgebraPres& a, const char* op) {
    if (is_division_algebra(a) != Verdict::True)
        fail(ErrorKind::PreconditionViolated, std::string(op) + " needs a division algebra: " + a.name);
}

}  // namespace

bool separability_alpha_division(const AlgebraPres& a) {
    require_division(a, "separability_alpha_division");
    ModulePres reg = regular_module(a), al = left_dual_module(a);
    std::vector<Mor> fs = hom_A(a, reg, al), gs = hom_A(a, al, reg);
    for (const Mor& f : fs)
        for (const Mor& g : gs)
            if (!alpha(a, f, g).is_zero()) return true;
    return false;
}

Scalar dim_division_algebra(const AlgebraPres& a) {
    const CategoryPres& c = *a.cat;
    if (hom_dim(unit_obj(c), a.carrier) != 1)
        fail(ErrorKind::PreconditionViolated, "dim_division_algebra needs dim Hom(1, A) = 1: " + a.name);
    require_division(a, "dim_division_algebra");
    std::vector<Mor> fs = hom_A(a, regular_module(a), left_dual_module(a));
    if (fs.empty()) fail(ErrorKind::OracleDisagreement, "division algebra with Hom_A(A, A^L) = 0: " + a.name);
    std::optional<Mor> inv = invert(fs[0]);
    if (!inv) fail(ErrorKind::OracleDisagreement, "nonzero map A -> A^L is not invertible: " + a.name);
    Mor loop = alpha(a, fs[0], *inv);
    for (std::size_t u : c.units)
        if (a.carrier[u] == 1) return loop.blocks[u](0, 0);
    fail(ErrorKind::PreconditionViolated, "A meets no unit component: " + a.name);
}

std::vector<std::size_t> diagonal_labels(const CategoryPres& c) {
    if (c.units.empty()) fail(ErrorKind::NotFusion, "category " + c.name + " has no unit component");
    const Obj u = simple_obj(c, c.units[0]);
    std::vector<std::size_t> out;
    for (std::size_t l = 0; l < c.rank(); ++l) {
        const Obj x = simple_obj(c, l);
        if (tensor_obj(c, u, x) == x && tensor_obj(c, x, u) == x) out.push_back(l);
    }
    return out;
}

Scalar global_dimension(const Cat& c) {
    Scalar sum = c->field.zero();
    for (std::size_t l : diagonal_labels(*c)) sum += dim_division_algebra(internal_end(c, simple_obj(*c, l)));
    return sum;
}

bool center_semisimple_verdict(const Cat& c) { return !global_dimension(c).is_zero(); }

std::vector<AlgebraPres> simple_module_ends(const AlgebraPres& a) {
    const CategoryPres& c = *a.cat;
    std::vector<AlgebraPres> out;
    for (std::size_t l = 0; l < c.rank(); ++l) {
        AlgebraPres b = conjugate_algebra(a, simple_obj(c, l));
        GlobalSections gs = global_sections(b);
        for (const Vec& idem : primitive_idempotents(gs.algebra))
            out.push_back(corner_algebra(b, combine(c, gs.basis, idem, unit_obj(c), b.carrier)));
    }
    return out;
}

std::vector<bool> endomorphism_separability(const AlgebraPres& a) {
    std::vector<bool> out;
    for (const ModulePres& x : simple_modules(a).modules) out.push_back(is_separable_over_k(end_algebra(a, x).algebra));
    return out;
}

std::pair<Cat, AlgebraPres> base_extend_algebra(const AlgebraPres& a, const Embedding& e) {
    const Field& k = e.target();
    if (!k.is_prime_field()) {
        Poly f = Poly::from_rationals(k.prime_field(), k.minpoly());
        if (!is_separable_field_ext(f))
            fail(ErrorKind::InseparableExtension, "extension " + k.describe() + " is not separable");
    }
    Cat ext = std::make_shared<const CategoryPres>(scalar_extend(*a.cat, e));
    return {ext, embed_algebra(a, ext, e)};
}

AnalysisReport analyze(const AlgebraPres& a, bool with_global_dim) {
    const CategoryPres& c = *a.cat;
    require_valid(*a.cat);
    require_valid(a);
    AnalysisReport r;
    r.category = c.name;
    r.algebra = a.name;
    r.field = c.field.describe();
    r.carrier = a.carrier;
    auto agree = [&](const std::string& name, bool ok, const std::string& detail) {
        if (!ok) fail(ErrorKind::OracleDisagreement, name + " disagrees on " + c.name + ":" + a.name + ": " + detail);
        r.oracles.emplace_back(name, "agree");
    };
    auto skip = [&](const std::string& name, const std::string& reason) { r.oracles.emplace_back(name, "skipped: " + reason); };
    auto yn = [](bool b) { return std::string(b ? "true" : "false"); };

    r.semisimple = is_semisimple_algebra(a);
    r.division = is_division_algebra(a);
    r.separable = is_separable(a);
    r.bimodule_semisimple = bimodule_criterion(a);
    agree("bimodule criterion", r.separable == r.bimodule_semisimple,
          "separable=" + yn(r.separable) + " bimodule semisimple=" + yn(r.bimodule_semisimple));
    agree("separable implies semisimple", !r.separable || r.semisimple, "separable but not semisimple");

    r.beta = separability_beta(a);
    if (r.beta.verdict == Verdict::Undetermined)
        skip("beta criterion", "search budget exhausted");
    else
        agree("beta criterion", (r.beta.verdict == Verdict::True) == r.separable,
              std::string("beta=") + to_string(r.beta.verdict) + " separable=" + yn(r.separable));

    if (r.division == Verdict::True) {
        agree("division gives Hom_A(A, A^L) != 0", !hom_A(a, regular_module(a), left_dual_module(a)).empty(), "empty");
        r.alpha = separability_alpha_division(a);
        agree("alpha criterion", *r.alpha == r.separable, "alpha=" + yn(*r.alpha) + " separable=" + yn(r.separable));
        if (hom_dim(unit_obj(c), a.carrier) == 1) {
            r.dim = dim_division_algebra(a);
            agree("dimension criterion", !r.dim->is_zero() == r.separable, "dim=" + r.dim->to_string());
        } else {
            skip("dimension criterion", "dim Hom(1, A) != 1");
        }
    } else {
        skip("alpha criterion", std::string("division=") + to_string(r.division));
        skip("dimension criterion", std::string("division=") + to_string(r.division));
    }

    if (r.semisimple) {
        r.decomposition = matrix_decomposition(a);
        agree("matrix decomposition identity", r.decomposition->reconstructed == a.carrier,
              to_string(c, r.decomposition->reconstructed) + " vs " + to_string(c, a.carrier));
        r.simple = is_simple_algebra(a);
        agree("simple via summands", r.simple == (r.decomposition->classes.size() == 1), "class count");
        if (r.division != Verdict::Undetermined) {
            const bool one = r.decomposition->summands.size() == 1 && r.decomposition->multiplicity[0] == 1;
            agree("division via summands", (r.division == Verdict::True) == one, "summand count");
        }
    } else {
        skip("matrix decomposition identity", "not semisimple");
    }

    for (const ModulePres& x : simple_modules(a).modules) {
        r.endomorphism_algebras.push_back(end_algebra(a, x).algebra);
        r.endomorphism_separable.push_back(is_separable_over_k(r.endomorphism_algebras.back()));
    }
    const bool all_sep = std::all_of(r.endomorphism_separable.begin(), r.endomorphism_separable.end(), [](bool b) { return b; });
    agree("separable implies separable endomorphisms", !r.separable || all_sep, "some End_A(x) inseparable");

    if (c.field.characteristic() == 0) {
        agree("characteristic zero semisimple implies separable", !r.semisimple || r.separable, "semisimple, not separable");
        if (r.division == Verdict::True && r.dim)
            agree("simple, separable and dim != 0", r.simple == r.separable && r.separable == !r.dim->is_zero(),
                  "simple=" + yn(r.simple));
    } else {
        skip("characteristic zero semisimple implies separable", "positive characteristic");
    }

    if (with_global_dim) {
        r.global_dim = global_dimension(a.cat);
        r.center_semisimple = !r.global_dim->is_zero();
        // Finite fields and number fields are perfect.
        if (*r.center_semisimple)
            agree("semisimple center", r.semisimple == r.separable,
                  "semisimple=" + yn(r.semisimple) + " separable=" + yn(r.separable));
        else
            skip("semisimple center", "global dimension is zero");
    }
    return r;
}

}  // namespace tensorcat
