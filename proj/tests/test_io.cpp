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

// JSON files for presentations and analysis reports.

#include "doctest.h"
#include "tensorcat/catalog.hpp"
#include "tensorcat/io.hpp"

using namespace tensorcat;
namespace cat = tensorcat::catalog;
using io::json;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no exception");
    return ErrorKind::ParseError;
}

std::string message_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("field and scalar round trips") {
    for (const Field& f : {Field::rationals(), Field::prime(3), cat::golden_field(), cat::f4_field(), cat::sqrt2_field()}) {
        Field g = io::field_from_json(io::to_json(f));
        CHECK(g == f);
        Scalar s = f.from_int(3) * f.generator() + f.from_rational(Rational(1, 2) * (f.is_finite() ? 0 : 1));
        CHECK(io::scalar_from_json(g, io::to_json(s)) == s);
    }
    CHECK(io::scalar_from_json(Field::rationals(), json("-7/3")) == Field::rationals().from_rational(Rational(-7, 3)));
    CHECK(kind_of([] { io::scalar_from_json(Field::rationals(), json("x/2")); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { io::field_from_json(json{{"char", 4}, {"minpoly", {"0", "1"}}}); }) == ErrorKind::ParseError);
}

TEST_CASE("catalog presentations round trip") {
    for (const auto& e : cat::entries()) {
        Cat c = e.category();
        json cj = io::to_json(*c);
        Cat back = std::make_shared<const CategoryPres>(io::category_from_json(json::parse(cj.dump())));
        INFO(e.name);
        CHECK(io::to_json(*back) == cj);
        CHECK(validate_category(*back).ok);
        if (!e.algebra) continue;
        AlgebraPres a = e.algebra(c);
        json aj = io::to_json(a);
        AlgebraPres ab = io::algebra_from_json(back, json::parse(aj.dump()));
        CHECK(ab.carrier == a.carrier);
        CHECK(ab.mult == a.mult);
        CHECK(ab.unit == a.unit);
        CHECK(validate_algebra(ab).ok);
        ModulePres m = free_module(a, simple_obj(*c, c->rank() - 1));
        ModulePres mb = io::module_from_json(ab, io::to_json(a, m));
        CHECK(mb.carrier == m.carrier);
        CHECK(mb.action == m.action);
        CHECK(validate_module(ab, mb).ok);
    }
}

TEST_CASE("parse errors name the offending entry") {
    Cat c = cat::lookup("vec_z2_q").category();
    json cj = io::to_json(*c);
    json bad = cj;
    bad["fusion"][1][1] = "h";
    CHECK(message_of([&] { io::category_from_json(bad); }).find("category.fusion[1]") != std::string::npos);
    bad = cj;
    bad.erase("cup");
    CHECK(message_of([&] { io::category_from_json(bad); }).find("cup") != std::string::npos);

    AlgebraPres a = cat::lookup("vec_z2_q:regular").algebra(c);
    json aj = io::to_json(a);
    aj["mult"][0][0] = 99;
    CHECK(message_of([&] { io::algebra_from_json(c, aj); }).find("algebra.mult[0][0]") != std::string::npos);
    aj = io::to_json(a);
    aj["unit"][0][0] = 1;  // basis vector 1 has label g
    CHECK(kind_of([&] { io::algebra_from_json(c, aj); }) == ErrorKind::ParseError);
}

TEST_CASE("a corrupted F entry parses but fails validation") {
    Cat c = cat::lookup("fibonacci").category();
    json cj = io::to_json(*c);
    REQUIRE(!cj["F"].empty());
    cj["F"][0]["entries"][0][0] = json::array({"5"});
    CategoryPres broken = io::category_from_json(cj);
    ValidationReport r = validate_category(broken);
    CHECK(!r.ok);
    CHECK(r.failure.find("pentagon") != std::string::npos);
}

TEST_CASE("reports satisfy the schema and are deterministic") {
    json schema = io::report_schema();
    CHECK(schema["version"] == "1");
    for (const char* name : {"vec_z2_f2:regular", "vec_z3_q:regular", "fibonacci:end_tau", "vec_f2:group_z2", "vec_q:end_2"}) {
        const auto& e = cat::lookup(name);
        Cat c = e.category();
        AlgebraPres a = e.algebra(c);
        std::string first = io::dump(io::report_to_json(analyze(a), *c));
        std::string second = io::dump(io::report_to_json(analyze(a), *c));
        CHECK(first == second);
        json parsed = json::parse(first);
        CHECK(io::dump(parsed) == first);
        ValidationReport r = io::check_schema(parsed, schema);
        INFO(name << ": " << r.failure);
        CHECK(r.ok);
        CHECK(!io::report_to_text(analyze(a), *c).empty());
    }
    json j = io::report_to_json(analyze(cat::lookup("vec_z2_f2:regular").algebra(cat::lookup("vec_z2_f2").category())),
                                *cat::lookup("vec_z2_f2").category());
    CHECK(j["flags"]["separable"] == false);
    CHECK(j["flags"]["semisimple"] == true);
    CHECK(j["flags"]["division"] == true);
    CHECK(j["dim_A"] == json::array({"0"}));
    json broken = j;
    broken["flags"]["division"] = "maybe";
    CHECK(!io::check_schema(broken, schema).ok);
    broken = j;
    broken["extra"] = 1;
    CHECK(!io::check_schema(broken, schema).ok);
}
