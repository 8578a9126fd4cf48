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

#include "tensorcat/modcat.hpp"

#include <functional>

namespace tensorcat {

namespace {

Mor relabel(Mor f, const Obj& src, const Obj& dst) {
    f.src = src;
    f.dst = dst;
    return f;
}

Mor chain(std::initializer_list<Mor> steps) {
    auto it = steps.begin();
    Mor acc = *it;
    for (++it; it != steps.end(); ++it) acc = compose(*it, acc);
    return acc;
}

/// Basis of { phi in Hom_C(x, y) : constraint(phi) = 0 } for a linear constraint.
std::vector<Mor> solve_homs(const CategoryPres& c, const Obj& x, const Obj& y,
                            const std::function<std::vector<Mor>(const Mor&)>& constraint) {
    std::vector<Mor> basis = hom_basis(c, x, y);
    if (basis.empty()) return {};
    std::vector<Vec> cols;
    for (const Mor& phi : basis) {
        Vec col;
        for (const Mor& m : constraint(phi)) {
            Vec v = flatten(m);
            col.insert(col.end(), v.begin(), v.end());
        }
        cols.push_back(std::move(col));
    }
    std::vector<Mor> out;
    if (cols[0].empty()) return basis;
    for (const Vec& k : kernel(Matrix::from_columns(c.field, cols, cols[0].size()))) {
        Mor m = zero_mor(c, x, y);
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (!k[i].is_zero()) m = m + basis[i] * k[i];
        out.push_back(std::move(m));
    }
    return out;
}

ValidationReport failure(const std::string& what) {
    ValidationReport r;
    r.ok = false;
    r.failure = what;
    return r;
}

}  // namespace

ValidationReport validate_module(const AlgebraPres& a, const ModulePres& m) {
    const CategoryPres& c = *a.cat;
    const Obj& x = m.carrier;
    const Obj& A = a.carrier;
    try {
        if (m.side == Side::Right) {
            if (m.action.src != tensor_obj(c, x, A) || m.action.dst != x) return failure("action has the wrong shape");
            Mor lhs = compose(m.action, tensor_mor(c, m.action, id(c, A)));
            Mor rhs = chain({associator(c, x, A, A), tensor_mor(c, id(c, x), a.mult), m.action});
            if (auto d = first_difference(c, lhs, rhs)) return failure("module associativity fails at " + *d);
            Mor u = relabel(compose(m.action, tensor_mor(c, id(c, x), a.unit)), x, x);
            if (auto d = first_difference(c, u, id(c, x))) return failure("module unit law fails at " + *d);
        } else {
            if (m.action.src != tensor_obj(c, A, x) || m.action.dst != x) return failure("action has the wrong shape");
            Mor lhs = compose(m.action, tensor_mor(c, a.mult, id(c, x)));
            Mor rhs = chain({associator(c, A, A, x), tensor_mor(c, id(c, A), m.action), m.action});
            if (auto d = first_difference(c, lhs, rhs)) return failure("module associativity fails at " + *d);
            Mor u = relabel(compose(m.action, tensor_mor(c, a.unit, id(c, x))), x, x);
            if (auto d = first_difference(c, u, id(c, x))) return failure("module unit law fails at " + *d);
        }
    } catch (const Error& e) {
        return failure(e.what());
    }
    return {};
}

ValidationReport validate_bimodule(const AlgebraPres& a, const BimodulePres& m) {
    ValidationReport r = validate_module(a, ModulePres{m.carrier, m.left, Side::Left});
    if (!r.ok) return failure("left " + r.failure);
    r = validate_module(a, ModulePres{m.carrier, m.right, Side::Right});
    if (!r.ok) return failure("right " + r.failure);
    const CategoryPres& c = *a.cat;
    const Obj& A = a.carrier;
    Mor lhs = compose(m.right, tensor_mor(c, m.left, id(c, A)));
    Mor rhs = chain({associator(c, A, m.carrier, A), tensor_mor(c, id(c, A), m.right), m.left});
    if (auto d = first_difference(c, lhs, rhs)) return failure("actions do not commute at " + *d);
    return {};
}

ModulePres regular_module(const AlgebraPres& a, Side side) { return ModulePres{a.carrier, a.mult, side}; }

ModulePres act_on(const AlgebraPres& a, const Obj& x, const ModulePres& m) {
    const CategoryPres& c = *a.cat;
    if (m.side != Side::Right) fail(ErrorKind::PreconditionViolated, "act_on: right module expected");
    Mor act = compose(tensor_mor(c, id(c, x), m.action), associator(c, x, m.carrier, a.carrier));
    return ModulePres{tensor_obj(c, x, m.carrier), act, Side::Right};
}

ModulePres free_module(const AlgebraPres& a, const Obj& x) { return act_on(a, x, regular_module(a)); }

ModulePres module_sum(const AlgebraPres& a, const ModulePres& x, const ModulePres& y) {
    const CategoryPres& c = *a.cat;
    if (x.side != y.side) fail(ErrorKind::PreconditionViolated, "module_sum: modules on different sides");
    const Obj& A = a.carrier;
    Mor ix = inclusion_first(c, x.carrier, y.carrier), iy = inclusion_second(c, x.carrier, y.carrier);
    Mor px = projection_first(c, x.carrier, y.carrier), py = projection_second(c, x.carrier, y.carrier);
    Mor act;
    if (x.side == Side::Right)
        act = compose(ix, compose(x.action, tensor_mor(c, px, id(c, A)))) +
              compose(iy, compose(y.action, tensor_mor(c, py, id(c, A))));
    else
        act = compose(ix, compose(x.action, tensor_mor(c, id(c, A), px))) +
              compose(iy, compose(y.action, tensor_mor(c, id(c, A), py)));
    return ModulePres{dsum(x.carrier, y.carrier), act, x.side};
}

ModulePres projective_generator(const AlgebraPres& a) {
    const CategoryPres& c = *a.cat;
    ModulePres p = free_module(a, simple_obj(c, 0));
    for (std::size_t l = 1; l < c.rank(); ++l) p = module_sum(a, p, free_module(a, simple_obj(c, l)));
    return p;
}

std::vector<Mor> hom_A(const AlgebraPres& a, const ModulePres& x, const ModulePres& y) {
    const CategoryPres& c = *a.cat;
    if (x.side != y.side) fail(ErrorKind::PreconditionViolated, "hom_A: modules on different sides");
    const Mor idA = id(c, a.carrier);
    return solve_homs(c, x.carrier, y.carrier, [&](const Mor& phi) -> std::vector<Mor> {
        if (x.side == Side::Right) return {compose(phi, x.action) - compose(y.action, tensor_mor(c, phi, idA))};
        return {compose(phi, x.action) - compose(y.action, tensor_mor(c, idA, phi))};
    });
}

RelTensor rel_tensor(const AlgebraPres& a, const ModulePres& x, const ModulePres& y) {
    const CategoryPres& c = *a.cat;
    if (x.side != Side::Right || y.side != Side::Left)
        fail(ErrorKind::PreconditionViolated, "rel_tensor: a right and a left module expected");
    Mor d = tensor_mor(c, x.action, id(c, y.carrier)) -
            compose(tensor_mor(c, id(c, x.carrier), y.action), associator(c, x.carrier, a.carrier, y.carrier));
    const Obj xy = d.dst;
    RelTensor out{zero_obj(c), Mor{}};
    std::vector<Matrix> blocks;
    for (std::size_t l = 0; l < c.rank(); ++l) {
        // rows w with w D = 0 span the dual of the cokernel
        std::vector<Vec> ws = kernel(d.blocks[l].transpose());
        out.obj.mult[l] = static_cast<int>(ws.size());
        blocks.push_back(ws.empty() ? Matrix(c.field, 0, static_cast<std::size_t>(xy[l]))
                                    : Matrix::from_rows(c.field, ws, static_cast<std::size_t>(xy[l])));
    }
    out.projection = Mor{xy, out.obj, std::move(blocks)};
    return out;
}

ModulePres module_dual(const AlgebraPres& a, const ModulePres& m) {
    const CategoryPres& c = *a.cat;
    const Obj& A = a.carrier;
    const Obj& x = m.carrier;
    if (m.side == Side::Right) {
        // A x^R -> (x^R x)(A x^R) -> (x^R (x A)) x^R -> (x^R x) x^R -> x^R (x x^R) -> x^R
        const Obj xr = dual_r(c, x);
        const Obj axr = tensor_obj(c, A, xr);
        const Obj xrx = tensor_obj(c, xr, x);
        Mor act = chain({relabel(tensor_mor(c, coev_r(c, x), id(c, axr)), axr, tensor_obj(c, xrx, axr)),
                         associator_inv(c, xrx, A, xr), tensor_mor(c, associator(c, xr, x, A), id(c, xr)),
                         tensor_mor(c, tensor_mor(c, id(c, xr), m.action), id(c, xr)), associator(c, xr, x, xr)});
        act = compose(tensor_mor(c, id(c, xr), ev_r(c, x)), act);
        return ModulePres{xr, relabel(act, axr, xr), Side::Left};
    }
    // x^L A -> (x^L A)(x x^L) -> (x^L (A x)) x^L -> (x^L x) x^L -> x^L
    const Obj xl = dual_l(c, x);
    const Obj xla = tensor_obj(c, xl, A);
    Mor act = chain({relabel(tensor_mor(c, id(c, xla), coev_l(c, x)), xla, tensor_obj(c, xla, tensor_obj(c, x, xl))),
                     associator_inv(c, xla, x, xl), tensor_mor(c, associator(c, xl, A, x), id(c, xl)),
                     tensor_mor(c, tensor_mor(c, id(c, xl), m.action), id(c, xl)),
                     tensor_mor(c, ev_l(c, x), id(c, xl))});
    return ModulePres{xl, relabel(act, xla, xl), Side::Right};
}

Obj internal_hom(const AlgebraPres& a, const ModulePres& x, const ModulePres& y) {
    if (x.side != Side::Right || y.side != Side::Right)
        fail(ErrorKind::PreconditionViolated, "internal_hom: right modules expected");
    return dual_l(*a.cat, rel_tensor(a, x, module_dual(a, y)).obj);
}

ModulePres image_module(const AlgebraPres& a, const ModulePres& m, const Mor& idem) {
    const CategoryPres& c = *a.cat;
    ImageSplit s = split_idempotent(c, idem);
    const Mor& i = s.inclusion;
    const Mor& p = s.projection;
    Mor act = m.side == Side::Right ? compose(p, compose(m.action, tensor_mor(c, i, id(c, a.carrier))))
                                    : compose(p, compose(m.action, tensor_mor(c, id(c, a.carrier), i)));
    return ModulePres{s.obj, act, m.side};
}

namespace {

EndAlgebra end_from_basis(const CategoryPres& c, const Obj& x, std::vector<Mor> basis) {
    std::vector<Vec> flat;
    for (const Mor& b : basis) flat.push_back(flatten(b));
    std::size_t n = 0;
    for (std::size_t l = 0; l < c.rank(); ++l) n += static_cast<std::size_t>(x[l]) * static_cast<std::size_t>(x[l]);
    Coordinates co(c.field, flat, n);
    OrdAlgebra e = OrdAlgebra::from_products(
        c.field, basis.size(),
        [&](std::size_t i, std::size_t j) { return co.of_checked(flatten(compose(basis[i], basis[j]))); },
        co.of_checked(flatten(id(c, x))));
    return EndAlgebra{std::move(e), std::move(basis)};
}

}  // namespace

EndAlgebra end_algebra(const AlgebraPres& a, const ModulePres& p) {
    return end_from_basis(*a.cat, p.carrier, hom_A(a, p, p));
}

EndAlgebra end_algebra(const AlgebraPres& a, const std::vector<ModulePres>& ps) {
    if (ps.empty()) return EndAlgebra{OrdAlgebra(a.cat->field, 0), {}};
    ModulePres sum = ps[0];
    for (std::size_t i = 1; i < ps.size(); ++i) sum = module_sum(a, sum, ps[i]);
    return end_algebra(a, sum);
}

OrdModule hom_module(const AlgebraPres& a, const EndAlgebra& e, const ModulePres& p, const ModulePres& m) {
    const CategoryPres& c = *a.cat;
    std::vector<Mor> hs = hom_A(a, p, m);
    OrdModule out;
    out.dim = hs.size();
    if (hs.empty()) {
        out.act.assign(e.basis.size(), Matrix(c.field, 0, 0));
        return out;
    }
    std::vector<Vec> flat;
    for (const Mor& h : hs) flat.push_back(flatten(h));
    Coordinates co(c.field, flat, flat[0].size());
    for (const Mor& b : e.basis) {
        std::vector<Vec> cols;
        for (const Mor& h : hs) cols.push_back(co.of_checked(flatten(compose(h, b))));
        out.act.push_back(Matrix::from_columns(c.field, cols, hs.size()));
    }
    return out;
}

SimpleModules simple_modules(const AlgebraPres& a) {
    const CategoryPres& c = *a.cat;
    SimpleModules out;
    ModulePres p = projective_generator(a);
    EndAlgebra e = end_algebra(a, p);
    out.semisimple = is_semisimple(e.algebra);
    auto to_mor = [&](const EndAlgebra& end, const Obj& x, const Vec& v) {
        Mor m = zero_mor(c, x, x);
        for (std::size_t k = 0; k < v.size(); ++k)
            if (!v[k].is_zero()) m = m + end.basis[k] * v[k];
        return m;
    };
    auto same_class = [&](const ModulePres& s, const ModulePres& t) {
        return !hom_A(a, s, t).empty() && !hom_A(a, t, s).empty();
    };
    for (const Vec& idem : primitive_idempotents(e.algebra)) {
        ModulePres s = image_module(a, p, to_mor(e, p.carrier, idem));
        bool known = false;
        for (const ModulePres& t : out.modules) known = known || same_class(s, t);
        if (!known) out.modules.push_back(std::move(s));
    }
    out.multiplicity_in_A.assign(out.modules.size(), 0);
    ModulePres reg = regular_module(a);
    EndAlgebra ea = end_algebra(a, reg);
    for (const Vec& idem : primitive_idempotents(ea.algebra)) {
        ModulePres s = image_module(a, reg, to_mor(ea, a.carrier, idem));
        for (std::size_t i = 0; i < out.modules.size(); ++i)
            if (same_class(s, out.modules[i])) {
                ++out.multiplicity_in_A[i];
                break;
            }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Bimodules

BimodulePres regular_bimodule(const AlgebraPres& a) { return BimodulePres{a.carrier, a.mult, a.mult}; }

BimodulePres free_bimodule(const AlgebraPres& a, const Obj& x) {
    const CategoryPres& c = *a.cat;
    const Obj& A = a.carrier;
    const Obj ax = tensor_obj(c, A, x);
    Mor left = chain({associator_inv(c, A, ax, A), tensor_mor(c, associator_inv(c, A, A, x), id(c, A)),
                      tensor_mor(c, tensor_mor(c, a.mult, id(c, x)), id(c, A))});
    Mor right = compose(tensor_mor(c, id(c, ax), a.mult), associator(c, ax, A, A));
    return BimodulePres{tensor_obj(c, ax, A), left, right};
}

BimodulePres bimodule_sum(const AlgebraPres& a, const BimodulePres& x, const BimodulePres& y) {
    ModulePres l = module_sum(a, ModulePres{x.carrier, x.left, Side::Left}, ModulePres{y.carrier, y.left, Side::Left});
    ModulePres r =
        module_sum(a, ModulePres{x.carrier, x.right, Side::Right}, ModulePres{y.carrier, y.right, Side::Right});
    return BimodulePres{l.carrier, l.action, r.action};
}

std::vector<Mor> hom_bimod(const AlgebraPres& a, const BimodulePres& x, const BimodulePres& y) {
    const CategoryPres& c = *a.cat;
    const Mor idA = id(c, a.carrier);
    return solve_homs(c, x.carrier, y.carrier, [&](const Mor& phi) -> std::vector<Mor> {
        return {compose(phi, x.left) - compose(y.left, tensor_mor(c, idA, phi)),
                compose(phi, x.right) - compose(y.right, tensor_mor(c, phi, idA))};
    });
}

EndAlgebra bimod_end_algebra(const AlgebraPres& a) {
    const CategoryPres& c = *a.cat;
    const Obj& A = a.carrier;
    Obj gen = zero_obj(c);
    for (std::size_t l = 0; l < c.rank(); ++l) gen.mult[l] = 1;
    BimodulePres p = free_bimodule(a, gen);
    // Bimodule maps out of (A x) A are determined by their restriction to x,
    // and every psi: x -> Y extends by the two actions of Y.
    std::vector<Mor> basis;
    for (const Mor& psi : hom_basis(c, gen, p.carrier)) {
        Mor ext = compose(p.right, tensor_mor(c, compose(p.left, tensor_mor(c, id(c, A), psi)), id(c, A)));
        basis.push_back(std::move(ext));
    }
    return end_from_basis(c, p.carrier, std::move(basis));
}

}  // namespace tensorcat
