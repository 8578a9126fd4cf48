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

/**
 * @file io.hpp
 * @brief JSON files for categories, algebras and modules, and analysis reports.
 *
 * Rationals are strings "num/den". A field is {"char": p, "minpoly": [c0, ..., 1]};
 * a scalar is its coefficient vector in the powers of the generator. Basis
 * vectors of an object are numbered globally, label by label in label order,
 * and the basis of X (x) Y is the frozen tensor basis of fincat. All Parse
 * errors raise ParseError naming the offending key or index.
 */

#ifndef TENSORCAT_IO_HPP
#define TENSORCAT_IO_HPP

#include <string>

#include "json.hpp"
#include "tensorcat/structure.hpp"

namespace tensorcat::io {

using json = nlohmann::ordered_json;

inline constexpr const char* kReportSchemaVersion = "1";

json to_json(const Field& f);
Field field_from_json(const json& j);
json to_json(const Scalar& s);
Scalar scalar_from_json(const Field& f, const json& j);

json to_json(const CategoryPres& c);
CategoryPres category_from_json(const json& j);
json to_json(const AlgebraPres& a);
AlgebraPres algebra_from_json(const Cat& c, const json& j);
json to_json(const AlgebraPres& a, const ModulePres& m);
/// {"side": "right" | "left", "carrier": ..., "action": triples} over a.
ModulePres module_from_json(const AlgebraPres& a, const json& j);
/// {"dim": n, "sc": [[i, j, l, scalar]], "unit": [...]}, nonzero entries only.
json to_json(const OrdAlgebra& e);

json report_to_json(const AnalysisReport& r, const CategoryPres& c);
std::string report_to_text(const AnalysisReport& r, const CategoryPres& c);
json decomposition_to_json(const MatrixDecomposition& m, const CategoryPres& c);
/// The versioned schema that report_to_json output satisfies.
json report_schema();
/// Checks j against the subset of JSON Schema used by report_schema: type,
/// required, properties, additionalProperties, items, enum, const.
ValidationReport check_schema(const json& j, const json& schema);

/// Reads and parses a JSON file, raising ParseError with the path on failure.
json read_file(const std::string& path);
void write_file(const std::string& path, const json& j);
/// Deterministic text form: two-space indent, trailing newline.
std::string dump(const json& j);
/// Exact form followed by a decimal approximation when one exists.
std::string render(const Scalar& s);

}  // namespace tensorcat::io

#endif
