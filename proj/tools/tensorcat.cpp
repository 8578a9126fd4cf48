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

// Command-line front end. Exit codes: 0 success, 1 invalid input data,
// 2 unsupported field or undetermined outcome, 3 internal oracle disagreement.

#include <atomic>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tensorcat/catalog.hpp"
#include "tensorcat/io.hpp"

using namespace tensorcat;
using io::json;

namespace {

constexpr int kOk = 0, kInvalid = 1, kUndetermined = 2, kBug = 3;

int exit_code(ErrorKind k) {
    switch (k) {
        case ErrorKind::UnsupportedField:
        case ErrorKind::SeparatingElementNotFound:
        case ErrorKind::DegreeTooLarge:
            return kUndetermined;
        case ErrorKind::OracleDisagreement:
        case ErrorKind::DivisionByZero:
            return kBug;
        default:
            return kInvalid;
    }
}

Cat load_category(const std::string& path) {
    try {
        return std::make_shared<const CategoryPres>(io::category_from_json(io::read_file(path)));
    } catch (const Error& e) {
        throw Error(e.kind(), path + ": " + e.what());
    }
}

AlgebraPres load_algebra(const Cat& c, const std::string& path) {
    try {
        return io::algebra_from_json(c, io::read_file(path));
    } catch (const Error& e) {
        throw Error(e.kind(), path + ": " + e.what());
    }
}

void require_valid_files(const Cat& c, const std::string& cpath, const AlgebraPres* a, const std::string& apath) {
    ValidationReport r = validate_category(*c);
    if (!r.ok) fail(ErrorKind::ValidationFailure, cpath + ": " + r.failure);
    if (a) {
        ValidationReport ra = validate_algebra(*a);
        if (!ra.ok) fail(ErrorKind::ValidationFailure, apath + ": " + ra.failure);
    }
}

void emit(const json& j, const std::string& out) {
    if (out.empty())
        std::cout << io::dump(j);
    else
        io::write_file(out, j);
}

std::vector<Rational> parse_rationals(const std::string& s, const std::string& what) {
    std::vector<Rational> out;
    std::stringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            Rational r(tok);
            r.canonicalize();
            out.push_back(r);
        } catch (const std::exception&) {
            fail(ErrorKind::ParseError, what + ": not a rational: " + tok);
        }
    }
    return out;
}

bool undetermined(const AnalysisReport& r) {
    return r.division == Verdict::Undetermined || r.beta.verdict == Verdict::Undetermined;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tensorcat: algebras in multi-fusion categories with exact arithmetic"};
    app.require_subcommand(1);

    std::string cat_path, alg_path, out_path, report = "json", minpoly, map, generator = "b", out_alg, name;
    bool as_json = false;
    unsigned jobs = 1;

    auto* validate = app.add_subcommand("validate", "Check pentagons, unit blocks and snakes (and an algebra)");
    validate->add_option("category", cat_path, "category file")->required();
    validate->add_option("algebra", alg_path, "optional algebra file");

    auto* analyze_cmd = app.add_subcommand("analyze", "Run every criterion on an algebra");
    analyze_cmd->add_option("category", cat_path, "category file")->required();
    analyze_cmd->add_option("algebra", alg_path, "algebra file")->required();
    analyze_cmd->add_option("--report", report, "json or text")->check(CLI::IsMember({"json", "text"}));
    analyze_cmd->add_option("--out", out_path, "write the report here");

    auto* gdim = app.add_subcommand("global-dim", "Global dimension and the center verdict");
    gdim->add_option("category", cat_path, "category file")->required();
    gdim->add_flag("--json", as_json, "machine-readable output");

    auto* decompose = app.add_subcommand("decompose", "Matrix decomposition of a semisimple algebra");
    decompose->add_option("category", cat_path, "category file")->required();
    decompose->add_option("algebra", alg_path, "algebra file")->required();
    decompose->add_option("--out", out_path, "write the decomposition here");

    auto* extend = app.add_subcommand("base-extend", "Extend scalars to a separable field extension");
    extend->add_option("category", cat_path, "category file")->required();
    extend->add_option("algebra", alg_path, "algebra file")->required();
    extend->add_option("--minpoly", minpoly, "target minimal polynomial c0,c1,...,1 over the prime field")->required();
    extend->add_option("--map", map, "image of the source generator, coefficients c0,c1,... in the target");
    extend->add_option("--generator", generator, "name of the target generator");
    extend->add_option("--out", out_path, "extended category file");
    extend->add_option("--out-algebra", out_alg, "extended algebra file");

    auto* catalog_cmd = app.add_subcommand("catalog", "Built-in examples");
    catalog_cmd->require_subcommand(1);
    auto* list = catalog_cmd->add_subcommand("list", "List catalog entries");
    auto* emit_cmd = catalog_cmd->add_subcommand("emit", "Write a category, or the algebra of a pair, as JSON");
    emit_cmd->add_option("name", name, "entry name")->required();
    emit_cmd->add_option("--out", out_path, "output file");

    auto* suite = app.add_subcommand("suite", "Analyze every catalog pair; JSON list of reports");
    suite->add_option("--jobs", jobs, "parallel analyses")->check(CLI::Range(1u, 64u));
    suite->add_option("--out", out_path, "output file");

    auto* schema = app.add_subcommand("schema", "Print the JSON schema of analysis reports");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInvalid;
    }

    try {
        if (*validate) {
            Cat c = load_category(cat_path);
            ValidationReport r = validate_category(*c);
            std::cout << "category " << c->name << ": " << r.pentagons << " pentagons, " << r.snakes << " snakes checked\n";
            if (!r.ok) {
                std::cout << "FAILED: " << r.failure << "\n";
                return kInvalid;
            }
            std::cout << "category ok\n";
            if (!alg_path.empty()) {
                AlgebraPres a = load_algebra(c, alg_path);
                ValidationReport ra = validate_algebra(a);
                if (!ra.ok) {
                    std::cout << "algebra FAILED: " << ra.failure << "\n";
                    return kInvalid;
                }
                std::cout << "algebra ok\n";
            }
            return kOk;
        }
        if (*analyze_cmd) {
            Cat c = load_category(cat_path);
            AlgebraPres a = load_algebra(c, alg_path);
            require_valid_files(c, cat_path, &a, alg_path);
            AnalysisReport r = analyze(a);
            if (report == "json") {
                emit(io::report_to_json(r, *c), out_path);
            } else if (out_path.empty()) {
                std::cout << io::report_to_text(r, *c);
            } else {
                std::ofstream(out_path) << io::report_to_text(r, *c);
            }
            return undetermined(r) ? kUndetermined : kOk;
        }
        if (*gdim) {
            Cat c = load_category(cat_path);
            require_valid_files(c, cat_path, nullptr, "");
            Scalar d = global_dimension(c);
            if (as_json) {
                std::cout << io::dump({{"global_dimension", io::to_json(d)}, {"center_semisimple", !d.is_zero()}});
            } else {
                std::cout << "global dimension: " << io::render(d) << "\n";
                std::cout << "center semisimple: " << (d.is_zero() ? "false" : "true") << "\n";
            }
            return kOk;
        }
        if (*decompose) {
            Cat c = load_category(cat_path);
            AlgebraPres a = load_algebra(c, alg_path);
            require_valid_files(c, cat_path, &a, alg_path);
            MatrixDecomposition m = matrix_decomposition(a);
            if (m.reconstructed != a.carrier)
                fail(ErrorKind::OracleDisagreement, "decomposition does not reassemble the carrier");
            emit(io::decomposition_to_json(m, *c), out_path);
            return kOk;
        }
        if (*extend) {
            Cat c = load_category(cat_path);
            AlgebraPres a = load_algebra(c, alg_path);
            require_valid_files(c, cat_path, &a, alg_path);
            std::vector<Rational> mp = parse_rationals(minpoly, "--minpoly");
            const unsigned long p = c->field.characteristic();
            Field target = mp.size() == 2 ? c->field.prime_field() : Field::extension(p, mp, generator);
            Embedding e = map.empty() ? Embedding(c->field, target, generator_images(c->field, target).at(0))
                                      : Embedding(c->field, target, Scalar(target, parse_rationals(map, "--map")));
            auto [ec, ea] = base_extend_algebra(a, e);
            if (out_path.empty() && out_alg.empty()) {
                std::cout << io::dump({{"category", io::to_json(*ec)}, {"algebra", io::to_json(ea)}});
            } else {
                if (!out_path.empty()) io::write_file(out_path, io::to_json(*ec));
                if (!out_alg.empty()) io::write_file(out_alg, io::to_json(ea));
            }
            return kOk;
        }
        if (*list) {
            for (const auto& e : catalog::entries()) std::cout << e.name << "\t" << e.description << "\n";
            return kOk;
        }
        if (*emit_cmd) {
            const catalog::CatalogEntry& e = catalog::lookup(name);
            Cat c = e.category();
            emit(e.algebra ? io::to_json(e.algebra(c)) : io::to_json(*c), out_path);
            return kOk;
        }
        if (*suite) {
            std::vector<const catalog::CatalogEntry*> pairs;
            for (const auto& e : catalog::entries())
                if (e.algebra) pairs.push_back(&e);
            std::vector<json> reports(pairs.size());
            auto run = [&](std::size_t i) {
                Cat c = pairs[i]->category();
                reports[i] = io::report_to_json(analyze(pairs[i]->algebra(c)), *c);
            };
            std::atomic<std::size_t> next{0};
            auto worker = [&] {
                for (std::size_t i; (i = next++) < pairs.size();) run(i);
            };
            std::vector<std::future<void>> workers;
            for (unsigned k = 0; k < jobs; ++k) workers.push_back(std::async(std::launch::async, worker));
            for (auto& f : workers) f.get();
            json out = json::array();
            bool open = false;
            for (json& r : reports) {
                open = open || r["flags"]["division"] == "undetermined" || r["beta"]["verdict"] == "undetermined";
                out.push_back(std::move(r));
            }
            emit(out, out_path);
            return open ? kUndetermined : kOk;
        }
        if (*schema) {
            std::cout << io::dump(io::report_schema());
            return kOk;
        }
    } catch (const Error& e) {
        std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBug;
    }
    return kInvalid;
}
