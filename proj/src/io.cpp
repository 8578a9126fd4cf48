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

#include "tensorcat/io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace tensorcat::io {

namespace {

[[noreturn]] void parse_error(const std::string& where, const std::string& what) {
    fail(ErrorKind::ParseError, where + ": " + what);
}

const json& at(const json& j, const std::string& key, const std::string& where) {
    if (!j.is_object()) parse_error(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) parse_error(where, "missing key \"" + key + "\"");
    return *it;
}

std::string rational_str(const Rational& r) { return r.get_str(); }

Rational rational_from(const json& j, const std::string& where) {
    Rational r;
    if (j.is_number_integer()) {
        r = Rational(j.get<long>());
    } else if (j.is_string()) {
        try {
            r = Rational(j.get<std::string>());
        } catch (const std::exception&) {
            parse_error(where, "not a rational: " + j.get<std::string>());
        }
        if (r.get_den() == 0) parse_error(where, "zero denominator");
    } else {
        parse_error(where, "expected a rational string");
    }
    r.canonicalize();
    return r;
}

long integer_from(const json& j, const std::string& where) {
    if (!j.is_number_integer()) parse_error(where, "expected an integer");
    return j.get<long>();
}

std::size_t index_from(const json& j, std::size_t bound, const std::string& where) {
    long v = integer_from(j, where);
    if (v < 0 || static_cast<std::size_t>(v) >= bound)
        parse_error(where, "index " + std::to_string(v) + " out of range [0, " + std::to_string(bound) + ")");
    return static_cast<std::size_t>(v);
}

std::size_t label_from(const CategoryPres& c, const json& j, const std::string& where) {
    if (!j.is_string()) parse_error(where, "expected a label name");
    auto i = c.index_of(j.get<std::string>());
    if (!i) parse_error(where, "unknown label \"" + j.get<std::string>() + "\"");
    return *i;
}

json obj_to_json(const CategoryPres& c, const Obj& x) {
    json out = json::object();
    for (std::size_t l = 0; l < c.rank(); ++l)
        if (x[l] != 0) out[c.labels[l]] = x[l];
    return out;
}

Obj obj_from_json(const CategoryPres& c, const json& j, const std::string& where) {
    if (!j.is_object()) parse_error(where, "expected {label: multiplicity}");
    Obj x = zero_obj(c);
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string w = where + "." + it.key();
        auto l = c.index_of(it.key());
        if (!l) parse_error(w, "unknown label");
        long m = integer_from(it.value(), w);
        if (m < 0) parse_error(w, "negative multiplicity");
        x.mult[*l] = static_cast<int>(m);
    }
    return x;
}

std::vector<std::size_t> offsets(const Obj& x) {
    std::vector<std::size_t> off(x.mult.size() + 1, 0);
    for (std::size_t l = 0; l < x.mult.size(); ++l) off[l + 1] = off[l] + static_cast<std::size_t>(x[l]);
    return off;
}

/// Nonzero entries of f as [global source index, global target index, scalar].
json mor_triples(const Mor& f) {
    json out = json::array();
    std::vector<std::size_t> so = offsets(f.src), dof = offsets(f.dst);
    for (std::size_t l = 0; l < f.blocks.size(); ++l)
        for (std::size_t col = 0; col < f.blocks[l].cols(); ++col)
            for (std::size_t row = 0; row < f.blocks[l].rows(); ++row) {
                const Scalar& s = f.blocks[l](row, col);
                if (!s.is_zero()) out.push_back(json::array({so[l] + col, dof[l] + row, to_json(s)}));
            }
    return out;
}

Mor mor_from_triples(const CategoryPres& c, const Obj& src, const Obj& dst, const json& j, const std::string& where) {
    if (!j.is_array()) parse_error(where, "expected a list of [in, out, scalar]");
    Mor f = zero_mor(c, src, dst);
    std::vector<std::size_t> so = offsets(src), dof = offsets(dst);
    auto label_of = [&](const std::vector<std::size_t>& off, std::size_t g) {
        std::size_t l = 0;
        while (off[l + 1] <= g) ++l;
        return l;
    };
    for (std::size_t k = 0; k < j.size(); ++k) {
        const std::string w = where + "[" + std::to_string(k) + "]";
        const json& t = j[k];
        if (!t.is_array() || t.size() != 3) parse_error(w, "expected [in, out, scalar]");
        std::size_t in = index_from(t[0], so.back(), w + "[0]");
        std::size_t out = index_from(t[1], dof.back(), w + "[1]");
        std::size_t li = label_of(so, in), lo = label_of(dof, out);
        if (li != lo) parse_error(w, "entry maps label " + c.labels[li] + " to label " + c.labels[lo]);
        f.blocks[li](out - dof[li], in - so[li]) = scalar_from_json(c.field, t[2]);
    }
    return f;
}

json vec_to_json(const Vec& v) {
    json out = json::array();
    for (const Scalar& s : v) out.push_back(to_json(s));
    return out;
}

Vec vec_from_json(const Field& f, const json& j, const std::string& where) {
    if (!j.is_array()) parse_error(where, "expected a list of scalars");
    Vec v;
    for (std::size_t k = 0; k < j.size(); ++k) {
        try {
            v.push_back(scalar_from_json(f, j[k]));
        } catch (const Error& e) {
            parse_error(where + "[" + std::to_string(k) + "]", e.what());
        }
    }
    return v;
}

}  // namespace

json to_json(const Field& f) {
    json mp = json::array();
    if (f.is_prime_field()) {
        mp = json::array({"0", "1"});
    } else {
        for (const Rational& r : f.minpoly()) mp.push_back(rational_str(r));
    }
    json out = {{"char", f.characteristic()}, {"minpoly", mp}};
    if (!f.is_prime_field()) out["generator"] = f.generator_name();
    return out;
}

Field field_from_json(const json& j) {
    const std::string w = "field";
    long p = integer_from(at(j, "char", w), w + ".char");
    if (p < 0) parse_error(w + ".char", "negative characteristic");
    const json& mp = at(j, "minpoly", w);
    if (!mp.is_array() || mp.size() < 2) parse_error(w + ".minpoly", "expected at least two coefficients");
    std::vector<Rational> coeffs;
    for (std::size_t k = 0; k < mp.size(); ++k) coeffs.push_back(rational_from(mp[k], w + ".minpoly[" + std::to_string(k) + "]"));
    std::string gen = "a";
    if (j.contains("generator")) {
        if (!j["generator"].is_string()) parse_error(w + ".generator", "expected a string");
        gen = j["generator"].get<std::string>();
    }
    try {
        if (coeffs.size() == 2) return p == 0 ? Field::rationals() : Field::prime(static_cast<unsigned long>(p));
        return Field::extension(static_cast<unsigned long>(p), coeffs, gen);
    } catch (const Error& e) {
        parse_error(w, e.what());
    }
}

json to_json(const Scalar& s) {
    json out = json::array();
    for (const Rational& r : s.coeffs()) out.push_back(rational_str(r));
    return out;
}

Scalar scalar_from_json(const Field& f, const json& j) {
    if (j.is_string() || j.is_number_integer()) return f.from_rational(rational_from(j, "scalar"));
    if (!j.is_array()) parse_error("scalar", "expected a coefficient list");
    if (j.size() > f.degree()) parse_error("scalar", "more coefficients than the field degree");
    std::vector<Rational> c;
    for (std::size_t k = 0; k < j.size(); ++k) c.push_back(rational_from(j[k], "scalar[" + std::to_string(k) + "]"));
    return Scalar(f, c);
}

json to_json(const CategoryPres& c) {
    json out;
    out["name"] = c.name;
    out["field"] = to_json(c.field);
    out["labels"] = c.labels;
    json units = json::array();
    for (std::size_t u : c.units) units.push_back(c.labels[u]);
    out["unit"] = units;
    json dual = json::object();
    for (std::size_t a = 0; a < c.rank(); ++a) dual[c.labels[a]] = c.labels[c.dual_r[a]];
    out["dualR"] = dual;
    json fusion = json::array();
    for (std::size_t a = 0; a < c.rank(); ++a)
        for (std::size_t b = 0; b < c.rank(); ++b)
            for (std::size_t d = 0; d < c.rank(); ++d)
                if (c.N(a, b, d) != 0) fusion.push_back(json::array({c.labels[a], c.labels[b], c.labels[d], c.N(a, b, d)}));
    out["fusion"] = fusion;
    json F = json::array();
    auto tuples = [&](const std::vector<std::array<std::size_t, 3>>& ts) {
        json r = json::array();
        for (const auto& t : ts) r.push_back(json::array({c.labels[t[0]], t[1], t[2]}));
        return r;
    };
    for (const auto& [k, m] : c.F) {
        json entries = json::array();
        for (std::size_t i = 0; i < m.rows(); ++i) entries.push_back(vec_to_json(m.row(i)));
        F.push_back({{"abcd", json::array({c.labels[k[0]], c.labels[k[1]], c.labels[k[2]], c.labels[k[3]]})},
                     {"rows", tuples(c.f_rows(k[0], k[1], k[2], k[3]))},
                     {"cols", tuples(c.f_cols(k[0], k[1], k[2], k[3]))},
                     {"entries", entries}});
    }
    out["F"] = F;
    json cup = json::object(), cap = json::object();
    for (std::size_t a = 0; a < c.rank(); ++a) {
        cup[c.labels[a]] = vec_to_json(c.cup[a]);
        cap[c.labels[a]] = vec_to_json(c.cap[a]);
    }
    out["cup"] = cup;
    out["cap"] = cap;
    return out;
}

CategoryPres category_from_json(const json& j) {
    const std::string w = "category";
    CategoryPres c(field_from_json(at(j, "field", w)));
    if (j.contains("name")) c.name = j["name"].is_string() ? j["name"].get<std::string>() : "";
    const json& labels = at(j, "labels", w);
    if (!labels.is_array() || labels.empty()) parse_error(w + ".labels", "expected a nonempty list");
    for (std::size_t k = 0; k < labels.size(); ++k) {
        if (!labels[k].is_string()) parse_error(w + ".labels[" + std::to_string(k) + "]", "expected a string");
        std::string name = labels[k].get<std::string>();
        if (c.index_of(name)) parse_error(w + ".labels[" + std::to_string(k) + "]", "duplicate label " + name);
        c.labels.push_back(name);
    }
    const std::size_t L = c.rank();
    const json& units = at(j, "unit", w);
    if (!units.is_array() || units.empty()) parse_error(w + ".unit", "expected a nonempty list of labels");
    for (std::size_t k = 0; k < units.size(); ++k) c.units.push_back(label_from(c, units[k], w + ".unit[" + std::to_string(k) + "]"));
    std::sort(c.units.begin(), c.units.end());
    c.dual_r.assign(L, L);
    const json& dual = at(j, "dualR", w);
    for (std::size_t a = 0; a < L; ++a) c.dual_r[a] = label_from(c, at(dual, c.labels[a], w + ".dualR"), w + ".dualR." + c.labels[a]);
    c.fusion.assign(L * L * L, 0);
    const json& fusion = at(j, "fusion", w);
    if (!fusion.is_array()) parse_error(w + ".fusion", "expected a list");
    for (std::size_t k = 0; k < fusion.size(); ++k) {
        const std::string wk = w + ".fusion[" + std::to_string(k) + "]";
        const json& t = fusion[k];
        if (!t.is_array() || t.size() != 4) parse_error(wk, "expected [a, b, c, N]");
        std::size_t a = label_from(c, t[0], wk), b = label_from(c, t[1], wk), d = label_from(c, t[2], wk);
        long n = integer_from(t[3], wk);
        if (n < 0) parse_error(wk, "negative multiplicity");
        c.fusion[(a * L + b) * L + d] = static_cast<int>(n);
    }
    const json& F = at(j, "F", w);
    if (!F.is_array()) parse_error(w + ".F", "expected a list");
    for (std::size_t k = 0; k < F.size(); ++k) {
        const std::string wk = w + ".F[" + std::to_string(k) + "]";
        const json& abcd = at(F[k], "abcd", wk);
        if (!abcd.is_array() || abcd.size() != 4) parse_error(wk + ".abcd", "expected four labels");
        std::array<std::size_t, 4> key{};
        for (std::size_t i = 0; i < 4; ++i) key[i] = label_from(c, abcd[i], wk + ".abcd");
        const std::size_t n = c.f_rows(key[0], key[1], key[2], key[3]).size();
        if (c.f_cols(key[0], key[1], key[2], key[3]).size() != n) parse_error(wk, "row and column counts differ");
        const json& entries = at(F[k], "entries", wk);
        if (!entries.is_array() || entries.size() != n) parse_error(wk + ".entries", "expected " + std::to_string(n) + " rows");
        std::vector<Vec> rows;
        for (std::size_t r = 0; r < n; ++r) {
            Vec row = vec_from_json(c.field, entries[r], wk + ".entries[" + std::to_string(r) + "]");
            if (row.size() != n) parse_error(wk + ".entries[" + std::to_string(r) + "]", "expected " + std::to_string(n) + " entries");
            rows.push_back(std::move(row));
        }
        c.F.emplace(key, Matrix::from_rows(c.field, rows, n));
    }
    const json& cup = at(j, "cup", w);
    const json& cap = at(j, "cap", w);
    for (std::size_t a = 0; a < L; ++a) {
        c.cup.push_back(vec_from_json(c.field, at(cup, c.labels[a], w + ".cup"), w + ".cup." + c.labels[a]));
        c.cap.push_back(vec_from_json(c.field, at(cap, c.labels[a], w + ".cap"), w + ".cap." + c.labels[a]));
    }
    return c;
}

json to_json(const AlgebraPres& a) {
    const CategoryPres& c = *a.cat;
    json out;
    out["name"] = a.name;
    out["carrier"] = obj_to_json(c, a.carrier);
    out["mult"] = mor_triples(a.mult);
    json unit = json::array();
    std::vector<std::size_t> off = offsets(a.carrier);
    for (std::size_t u : c.units)
        for (std::size_t r = 0; r < a.unit.blocks[u].rows(); ++r)
            if (!a.unit.blocks[u](r, 0).is_zero()) unit.push_back(json::array({off[u] + r, to_json(a.unit.blocks[u](r, 0))}));
    out["unit"] = unit;
    return out;
}

AlgebraPres algebra_from_json(const Cat& cp, const json& j) {
    const CategoryPres& c = *cp;
    const std::string w = "algebra";
    AlgebraPres a;
    a.cat = cp;
    a.name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "algebra";
    a.carrier = obj_from_json(c, at(j, "carrier", w), w + ".carrier");
    a.mult = mor_from_triples(c, tensor_obj(c, a.carrier, a.carrier), a.carrier, at(j, "mult", w), w + ".mult");
    a.unit = zero_mor(c, unit_obj(c), a.carrier);
    const json& unit = at(j, "unit", w);
    if (!unit.is_array()) parse_error(w + ".unit", "expected a list of [component, scalar]");
    std::vector<std::size_t> off = offsets(a.carrier);
    for (std::size_t k = 0; k < unit.size(); ++k) {
        const std::string wk = w + ".unit[" + std::to_string(k) + "]";
        if (!unit[k].is_array() || unit[k].size() != 2) parse_error(wk, "expected [component, scalar]");
        std::size_t g = index_from(unit[k][0], off.back(), wk + "[0]");
        std::size_t l = 0;
        while (off[l + 1] <= g) ++l;
        if (!c.is_unit(l)) parse_error(wk, "component lies in non-unit label " + c.labels[l]);
        a.unit.blocks[l](g - off[l], 0) = scalar_from_json(c.field, unit[k][1]);
    }
    return a;
}

json to_json(const AlgebraPres& a, const ModulePres& m) {
    const CategoryPres& c = *a.cat;
    json out;
    out["side"] = m.side == Side::Right ? "right" : "left";
    out["carrier"] = obj_to_json(c, m.carrier);
    out["action"] = mor_triples(m.action);
    return out;
}

ModulePres module_from_json(const AlgebraPres& a, const json& j) {
    const CategoryPres& c = *a.cat;
    const std::string w = "module";
    ModulePres m;
    if (j.contains("side")) {
        const json& s = j["side"];
        if (s == "right")
            m.side = Side::Right;
        else if (s == "left")
            m.side = Side::Left;
        else
            parse_error(w + ".side", "expected \"left\" or \"right\"");
    }
    m.carrier = obj_from_json(c, at(j, "carrier", w), w + ".carrier");
    const Obj& A = a.carrier;
    Obj src = m.side == Side::Right ? tensor_obj(c, m.carrier, A) : tensor_obj(c, A, m.carrier);
    m.action = mor_from_triples(c, src, m.carrier, at(j, "action", w), w + ".action");
    return m;
}

json to_json(const OrdAlgebra& e) {
    json sc = json::array();
    for (std::size_t i = 0; i < e.dim; ++i)
        for (std::size_t jj = 0; jj < e.dim; ++jj)
            for (std::size_t l = 0; l < e.dim; ++l)
                if (!e.left[i](l, jj).is_zero()) sc.push_back(json::array({i, jj, l, to_json(e.left[i](l, jj))}));
    return {{"dim", e.dim}, {"sc", sc}, {"unit", vec_to_json(e.unit)}};
}

// ---------------------------------------------------------------------------
// Reports

namespace {

json verdict_json(Verdict v) {
    if (v == Verdict::Undetermined) return "undetermined";
    return v == Verdict::True;
}

template <class T, class F>
json optional_json(const std::optional<T>& v, F f) {
    return v ? f(*v) : json(nullptr);
}

}  // namespace

json decomposition_to_json(const MatrixDecomposition& m, const CategoryPres& c) {
    json summands = json::array();
    for (std::size_t i = 0; i < m.summands.size(); ++i)
        summands.push_back({{"carrier", obj_to_json(c, m.summands[i].carrier)},
                            {"multiplicity", m.multiplicity[i]},
                            {"division_block", to_json(m.division_blocks[i])}});
    json homs = json::array();
    for (const auto& row : m.homs) {
        json r = json::array();
        for (const Obj& x : row) r.push_back(obj_to_json(c, x));
        homs.push_back(r);
    }
    return {{"summands", summands}, {"homs", homs}, {"classes", m.classes}, {"reconstructed", obj_to_json(c, m.reconstructed)}};
}

json report_to_json(const AnalysisReport& r, const CategoryPres& c) {
    json out;
    out["schema"] = kReportSchemaVersion;
    out["category"] = r.category;
    out["algebra"] = r.algebra;
    out["field"] = to_json(c.field);
    out["carrier"] = obj_to_json(c, r.carrier);
    out["flags"] = {{"semisimple", r.semisimple},
                    {"simple", r.simple},
                    {"division", verdict_json(r.division)},
                    {"separable", r.separable}};
    out["bimodule_semisimple"] = r.bimodule_semisimple;
    out["beta"] = {{"verdict", verdict_json(r.beta.verdict)},
                   {"evaluations", r.beta.evaluations},
                   {"budget", r.beta.budget},
                   {"search_field", r.beta.search_field},
                   {"ladder", json::array({"basis", "integer combinations in [-3, 3]",
                                           "grid with deg + 1 points per coordinate"})}};
    out["alpha"] = optional_json(r.alpha, [](bool b) { return json(b); });
    out["dim_A"] = optional_json(r.dim, [](const Scalar& s) { return to_json(s); });
    out["matrix_decomposition"] =
        optional_json(r.decomposition, [&](const MatrixDecomposition& m) { return decomposition_to_json(m, c); });
    json mods = json::array();
    for (std::size_t i = 0; i < r.endomorphism_separable.size(); ++i)
        mods.push_back({{"separable", bool(r.endomorphism_separable[i])}, {"end_algebra", to_json(r.endomorphism_algebras[i])}});
    out["endomorphism_separability"] = {{"base", "Hom_Z(C)(1, 1) = k for homogeneous C"}, {"modules", mods}};
    out["global_dimension"] = optional_json(r.global_dim, [](const Scalar& s) { return to_json(s); });
    out["center_semisimple"] = optional_json(r.center_semisimple, [](bool b) { return json(b); });
    json oracles = json::object();
    for (const auto& [k, v] : r.oracles) oracles[k] = v;
    out["oracle_agreement"] = oracles;
    return out;
}

std::string render(const Scalar& s) {
    std::string out = s.to_string();
    if (s.field().is_prime_field()) return out;
    if (std::optional<double> d = approximate(s)) {
        std::ostringstream o;
        o << std::setprecision(10) << *d;
        out += "  (approximately " + o.str() + ")";
    }
    return out;
}

std::string report_to_text(const AnalysisReport& r, const CategoryPres& c) {
    std::ostringstream o;
    auto yn = [](bool b) { return b ? "true" : "false"; };
    o << "category: " << r.category << "\n";
    o << "algebra: " << r.algebra << "  carrier " << to_string(c, r.carrier) << "\n";
    o << "field: " << c.field.describe() << "\n";
    o << "semisimple: " << yn(r.semisimple) << "\n";
    o << "simple: " << yn(r.simple) << "\n";
    o << "division: " << to_string(r.division) << "\n";
    o << "separable: " << yn(r.separable) << "\n";
    o << "bimodule category semisimple: " << yn(r.bimodule_semisimple) << "\n";
    o << "beta search: " << to_string(r.beta.verdict) << " after " << r.beta.evaluations << " of " << r.beta.budget
      << " evaluations over " << r.beta.search_field << "\n";
    if (r.alpha) o << "alpha nonzero: " << yn(*r.alpha) << "\n";
    if (r.dim) o << "dim A: " << render(*r.dim) << "\n";
    if (r.decomposition) {
        const MatrixDecomposition& m = *r.decomposition;
        o << "matrix decomposition: " << m.summands.size() << " simple summand(s) in " << m.classes.size() << " class(es)\n";
        for (std::size_t i = 0; i < m.summands.size(); ++i)
            o << "  x" << i << " = " << to_string(c, m.summands[i].carrier) << " with multiplicity " << m.multiplicity[i]
              << ", A_" << i << i << " = " << to_string(c, m.division_blocks[i].carrier) << "\n";
    }
    o << "End_A(x) separable over k:";
    for (bool b : r.endomorphism_separable) o << " " << yn(b);
    o << "\n";
    if (r.global_dim) o << "global dimension: " << render(*r.global_dim) << "\n";
    if (r.center_semisimple) o << "center semisimple: " << yn(*r.center_semisimple) << "\n";
    o << "oracle agreement:\n";
    for (const auto& [k, v] : r.oracles) o << "  " << k << ": " << v << "\n";
    return o.str();
}

namespace {

json type(const char* t) { return {{"type", t}}; }

json object_schema(json props, std::vector<std::string> required) {
    return {{"type", "object"}, {"required", required}, {"properties", std::move(props)}, {"additionalProperties", false}};
}

json array_of(json item) { return {{"type", "array"}, {"items", std::move(item)}}; }

json scalar_schema() { return array_of(type("string")); }

json nullable(json s) {
    json out = std::move(s);
    out["type"] = json::array({out["type"], "null"});
    return out;
}

json obj_schema() { return {{"type", "object"}, {"additionalProperties", {{"type", "integer"}}}}; }

json ord_algebra_schema() {
    return object_schema({{"dim", type("integer")}, {"sc", array_of(type("array"))}, {"unit", array_of(scalar_schema())}},
                         {"dim", "sc", "unit"});
}

}  // namespace

json report_schema() {
    json field = object_schema({{"char", type("integer")}, {"minpoly", array_of(type("string"))}, {"generator", type("string")}},
                               {"char", "minpoly"});
    json verdict = {{"type", json::array({"boolean", "string"})}, {"enum", json::array({true, false, "undetermined"})}};
    json algebra = object_schema({{"name", type("string")}, {"carrier", obj_schema()}, {"mult", array_of(type("array"))},
                                  {"unit", array_of(type("array"))}},
                                 {"name", "carrier", "mult", "unit"});
    json decomposition = object_schema(
        {{"summands", array_of(object_schema({{"carrier", obj_schema()}, {"multiplicity", type("integer")}, {"division_block", algebra}},
                                             {"carrier", "multiplicity", "division_block"}))},
         {"homs", array_of(array_of(obj_schema()))},
         {"classes", array_of(array_of(type("integer")))},
         {"reconstructed", obj_schema()}},
        {"summands", "homs", "classes", "reconstructed"});
    json props = {
        {"schema", {{"const", kReportSchemaVersion}}},
        {"category", type("string")},
        {"algebra", type("string")},
        {"field", field},
        {"carrier", obj_schema()},
        {"flags", object_schema({{"semisimple", type("boolean")}, {"simple", type("boolean")}, {"division", verdict},
                                 {"separable", type("boolean")}},
                                {"semisimple", "simple", "division", "separable"})},
        {"bimodule_semisimple", type("boolean")},
        {"beta", object_schema({{"verdict", verdict}, {"evaluations", type("integer")}, {"budget", type("integer")},
                                {"search_field", type("string")}, {"ladder", array_of(type("string"))}},
                               {"verdict", "evaluations", "budget", "search_field", "ladder"})},
        {"alpha", type("boolean")},
        {"dim_A", scalar_schema()},
        {"matrix_decomposition", decomposition},
        {"endomorphism_separability",
         object_schema({{"base", type("string")},
                        {"modules", array_of(object_schema({{"separable", type("boolean")}, {"end_algebra", ord_algebra_schema()}},
                                                           {"separable", "end_algebra"}))}},
                       {"base", "modules"})},
        {"global_dimension", scalar_schema()},
        {"center_semisimple", type("boolean")},
        {"oracle_agreement", {{"type", "object"}, {"additionalProperties", type("string")}}},
    };
    for (const char* k : {"alpha", "dim_A", "matrix_decomposition", "global_dimension", "center_semisimple"})
        props[k] = nullable(props[k]);
    json out = object_schema(props, {"schema", "category", "algebra", "field", "carrier", "flags", "bimodule_semisimple", "beta",
                                     "alpha", "dim_A", "matrix_decomposition", "endomorphism_separability",
                                     "global_dimension", "center_semisimple", "oracle_agreement"});
    json head = {{"$schema", "https://json-schema.org/draft/2020-12/schema"},
                 {"title", "tensorcat analysis report"},
                 {"version", kReportSchemaVersion}};
    head.update(out);
    out = std::move(head);
    return out;
}

namespace {

bool has_type(const json& j, const std::string& t) {
    if (t == "object") return j.is_object();
    if (t == "array") return j.is_array();
    if (t == "string") return j.is_string();
    if (t == "boolean") return j.is_boolean();
    if (t == "integer") return j.is_number_integer();
    if (t == "number") return j.is_number();
    if (t == "null") return j.is_null();
    return false;
}

std::optional<std::string> check(const json& j, const json& s, const std::string& path) {
    if (s.contains("const") && j != s["const"]) return path + ": expected " + s["const"].dump();
    if (s.contains("enum")) {
        bool found = false;
        for (const json& e : s["enum"]) found = found || e == j;
        if (!found) return path + ": value " + j.dump() + " not in enum";
    }
    if (s.contains("type")) {
        bool ok = false;
        if (s["type"].is_array()) {
            for (const json& t : s["type"]) ok = ok || has_type(j, t.get<std::string>());
        } else {
            ok = has_type(j, s["type"].get<std::string>());
        }
        if (!ok) return path + ": expected type " + s["type"].dump();
    }
    if (j.is_object()) {
        if (s.contains("required"))
            for (const json& k : s["required"])
                if (!j.contains(k.get<std::string>())) return path + ": missing " + k.get<std::string>();
        for (auto it = j.begin(); it != j.end(); ++it) {
            const std::string p = path + "." + it.key();
            if (s.contains("properties") && s["properties"].contains(it.key())) {
                if (auto e = check(it.value(), s["properties"][it.key()], p)) return e;
            } else if (s.contains("additionalProperties")) {
                const json& ap = s["additionalProperties"];
                if (ap.is_boolean()) {
                    if (!ap.get<bool>()) return p + ": unexpected key";
                } else if (auto e = check(it.value(), ap, p)) {
                    return e;
                }
            }
        }
    }
    if (j.is_array() && s.contains("items"))
        for (std::size_t k = 0; k < j.size(); ++k)
            if (auto e = check(j[k], s["items"], path + "[" + std::to_string(k) + "]")) return e;
    return std::nullopt;
}

}  // namespace

ValidationReport check_schema(const json& j, const json& schema) {
    ValidationReport r;
    if (auto e = check(j, schema, "$")) {
        r.ok = false;
        r.failure = *e;
    }
    return r;
}

json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::ParseError, path + ": cannot open");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        fail(ErrorKind::ParseError, path + ": " + e.what());
    }
}

void write_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) fail(ErrorKind::ParseError, path + ": cannot write");
    out << dump(j);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace tensorcat::io
