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

#include "tensorcat/algebra.hpp"

namespace tensorcat {

std::optional<std::string> first_difference(const CategoryPres& c, const Mor& f, const Mor& g) {
    if (f.src != g.src || f.dst != g.dst) return "morphisms have different source or target";
    for (std::size_t a = 0; a < c.rank(); ++a)
        for (std::size_t i = 0; i < f.blocks[a].rows(); ++i)
            for (std::size_t j = 0; j < f.blocks[a].cols(); ++j)
                if (f.blocks[a](i, j) != g.blocks[a](i, j))
                    return "label " + c.labels[a] + " entry (" + std::to_string(i) + "," + std::to_string(j) +
                           "): " + f.blocks[a](i, j).to_string() + " vs " + g.blocks[a](i, j).to_string();
    return std::nullopt;
}

ValidationReport validate_algebra(const AlgebraPres& a) {
    const CategoryPres& c = *a.cat;
    ValidationReport r;
    auto bad = [&](const std::string& what) {
        r.ok = false;
        r.failure = what;
        return r;
    };
    const Obj& x = a.carrier;
    if (x.mult.size() != c.rank()) return bad("carrier does not match the category");
    if (a.mult.src != tensor_obj(c, x, x) || a.mult.dst != x) return bad("multiplication has the wrong shape");
    if (a.unit.src != unit_obj(c) || a.unit.dst != x) return bad("unit has the wrong shape");
    try {
        Mor lhs = compose(a.mult, tensor_mor(c, a.mult, id(c, x)));
        Mor rhs = compose(a.mult, compose(tensor_mor(c, id(c, x), a.mult), associator(c, x, x, x)));
        if (auto d = first_difference(c, lhs, rhs)) return bad("associativity fails at " + *d);
        Mor lu = compose(a.mult, tensor_mor(c, a.unit, id(c, x)));
        lu.src = x;
        if (auto d = first_difference(c, lu, id(c, x))) return bad("left unit law fails at " + *d);
        Mor ru = compose(a.mult, tensor_mor(c, id(c, x), a.unit));
        ru.src = x;
        if (auto d = first_difference(c, ru, id(c, x))) return bad("right unit law fails at " + *d);
    } catch (const Error& e) {
        return bad(e.what());
    }
    return r;
}

void require_valid(const AlgebraPres& a) {
    ValidationReport r = validate_algebra(a);
    if (!r.ok) fail(ErrorKind::ValidationFailure, (a.name.empty() ? "algebra" : a.name) + ": " + r.failure);
}

AlgebraPres trivial_algebra(const Cat& c) {
    Obj one = unit_obj(*c);
    Mor m = id(*c, one);
    m.src = tensor_obj(*c, one, one);
    return AlgebraPres{c, one, m, id(*c, one), "trivial"};
}

AlgebraPres internal_end(const Cat& cp, const Obj& a) {
    const CategoryPres& c = *cp;
    const Obj al = dual_l(c, a);
    const Obj e = tensor_obj(c, a, al);
    // (a al)(a al) -> a (al (a al)) -> a ((al a) al) -> a (1 al) = a al
    Mor s1 = associator(c, a, al, e);
    Mor s2 = tensor_mor(c, id(c, a), associator_inv(c, al, a, al));
    Mor s3 = tensor_mor(c, id(c, a), tensor_mor(c, ev_l(c, a), id(c, al)));
    Mor m = compose(s3, compose(s2, s1));
    m.dst = e;
    return AlgebraPres{cp, e, m, coev_l(c, a), "internal_end" + to_string(c, a)};
}

AlgebraPres conjugate_algebra(const AlgebraPres& alg, const Obj& a) {
    const CategoryPres& c = *alg.cat;
    const Obj& A = alg.carrier;
    const Obj al = dual_l(c, a);
    const Obj tail = tensor_obj(c, A, al);
    const Obj e = tensor_obj(c, a, tail);
    const Mor ia = id(c, a), iA = id(c, A), ial = id(c, al);
    // (a (A al))(a (A al)) -> a ((A al)(a (A al))) -> a (A (al (a (A al))))
    //   -> a (A ((al a)(A al))) -> a (A (A al)) -> a ((A A) al) -> a (A al)
    Mor s1 = associator(c, a, tail, e);
    Mor s2 = tensor_mor(c, ia, associator(c, A, al, e));
    Mor s3 = tensor_mor(c, ia, tensor_mor(c, iA, associator_inv(c, al, a, tail)));
    Mor s4 = tensor_mor(c, ia, tensor_mor(c, iA, tensor_mor(c, ev_l(c, a), id(c, tail))));
    s4.dst = tensor_obj(c, a, tensor_obj(c, A, tail));
    Mor s5 = tensor_mor(c, ia, associator_inv(c, A, A, al));
    Mor s6 = tensor_mor(c, ia, tensor_mor(c, alg.mult, ial));
    Mor m = compose(s6, compose(s5, compose(s4, compose(s3, compose(s2, s1)))));
    Mor u = tensor_mor(c, ia, tensor_mor(c, alg.unit, ial));
    u.src = tensor_obj(c, a, al);
    u = compose(u, coev_l(c, a));
    return AlgebraPres{alg.cat, e, m, u, "conjugate" + to_string(c, a) + "(" + alg.name + ")"};
}

AlgebraPres corner_algebra(const AlgebraPres& alg, const Mor& e) {
    const CategoryPres& c = *alg.cat;
    const Obj& A = alg.carrier;
    Mor left = compose(alg.mult, tensor_mor(c, e, id(c, A)));
    left.src = A;
    Mor right = compose(alg.mult, tensor_mor(c, id(c, A), e));
    right.src = A;
    ImageSplit s = split_idempotent(c, compose(left, right));
    Mor m = compose(s.projection, compose(alg.mult, tensor_mor(c, s.inclusion, s.inclusion)));
    return AlgebraPres{alg.cat, s.obj, m, compose(s.projection, e), "corner(" + alg.name + ")"};
}

AlgebraPres direct_sum(const AlgebraPres& a, const AlgebraPres& b) {
    const CategoryPres& c = *a.cat;
    const Obj s = dsum(a.carrier, b.carrier);
    Mor ia = inclusion_first(c, a.carrier, b.carrier), ib = inclusion_second(c, a.carrier, b.carrier);
    Mor pa = projection_first(c, a.carrier, b.carrier), pb = projection_second(c, a.carrier, b.carrier);
    Mor m = compose(ia, compose(a.mult, tensor_mor(c, pa, pa))) + compose(ib, compose(b.mult, tensor_mor(c, pb, pb)));
    Mor u = compose(ia, a.unit) + compose(ib, b.unit);
    return AlgebraPres{a.cat, s, m, u, a.name + "+" + b.name};
}

AlgebraPres embed_algebra(const AlgebraPres& a, const Cat& extended, const Embedding& e) {
    return AlgebraPres{extended, a.carrier, embed_mor(a.mult, e), embed_mor(a.unit, e), a.name};
}

}  // namespace tensorcat
