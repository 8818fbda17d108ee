/*
   Copyright 2026 The cvm authors

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

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <string>

#include "cvm/companion.hpp"
#include "cvm/hermite.hpp"
#include "cvm/pfd.hpp"
#include "cvm/text.hpp"
#include "cvm/vandermonde.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::size_t kMaxDimension = 64;

struct Request {
    std::string command;
    std::string field_spec = "q";
    std::string nodes_spec;
    std::string poly_spec;
    std::string values_spec;
    std::string residues_spec;
    bool json = false;
};

std::string read_payload(const std::string& spec) {
    if (spec != "-") return spec;
    std::string line;
    std::getline(std::cin, line);
    return line;
}

cvm::NodeMultiset parse_multiset(const std::string& spec, const cvm::FieldDescriptor& field) {
    const cvm::text::ParsedNodes parsed = cvm::text::parse_nodes(spec, field);
    try {
        cvm::NodeMultiset nodes(parsed.entries, field);
        if (nodes.dimension() > kMaxDimension) {
            throw cvm::Error("input too large: d = " + std::to_string(nodes.dimension()) +
                             " exceeds " + std::to_string(kMaxDimension));
        }
        return nodes;
    } catch (const cvm::DuplicateNode& e) {
        throw cvm::Error("duplicate node: " + parsed.node_tokens.at(e.duplicate_index) +
                         " ≡ " + e.canonical_value + " in " + field.name());
    }
}

ordered_json scalar_list_json(std::span<const cvm::Scalar> values) {
    ordered_json out = ordered_json::array();
    for (const cvm::Scalar& v : values) out.push_back(v.str());
    return out;
}

ordered_json poly_json(const cvm::Poly& p) {
    if (p.is_zero()) return ordered_json::array({"0"});
    return scalar_list_json(p.coeffs());
}

ordered_json matrix_json(const cvm::DenseMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

void emit(const Request& request, const cvm::FieldDescriptor& field,
          const cvm::NodeMultiset& nodes, ordered_json result, const std::string& text) {
    if (!request.json) {
        std::cout << text;
        return;
    }
    ordered_json out;
    out["field"] = field.selector();
    ordered_json node_list = ordered_json::array();
    for (const cvm::NodeEntry& e : nodes.entries()) {
        node_list.push_back(ordered_json::array({e.node.str(), e.multiplicity}));
    }
    out["nodes"] = std::move(node_list);
    out["result"] = std::move(result);
    std::cout << out.dump() << '\n';
}

int run(const Request& request) {
    const cvm::FieldDescriptor field = cvm::text::parse_field(request.field_spec);
    const cvm::NodeMultiset nodes = parse_multiset(request.nodes_spec, field);

    if (request.command == "build") {
        const cvm::DenseMatrix v = cvm::vandermonde::build(nodes).matrix;
        emit(request, field, nodes, ordered_json{{"matrix", matrix_json(v)}},
             cvm::text::format_matrix(v) + "\n");
    } else if (request.command == "det") {
        const cvm::Scalar det = cvm::vandermonde::det_formula(nodes);
        emit(request, field, nodes, ordered_json{{"det", det.str()}}, det.str() + "\n");
    } else if (request.command == "lu") {
        const cvm::vandermonde::LUFactors lu = cvm::vandermonde::lu_factorize(nodes);
        emit(request, field, nodes,
             ordered_json{{"L", matrix_json(lu.lower)},
                          {"U", matrix_json(lu.upper)},
                          {"U_inv", matrix_json(lu.upper_inverse)}},
             "L: " + cvm::text::format_matrix(lu.lower) + "\nU: " +
                 cvm::text::format_matrix(lu.upper) + "\nUinv: " +
                 cvm::text::format_matrix(lu.upper_inverse) + "\n");
    } else if (request.command == "eval") {
        const cvm::Poly p = cvm::text::parse_poly(read_payload(request.poly_spec), field);
        const cvm::vandermonde::EvalVector evals = cvm::vandermonde::eval_map(nodes, p);
        emit(request, field, nodes, ordered_json{{"values", scalar_list_json(evals.values())}},
             cvm::text::format_scalar_list(evals.values()) + "\n");
    } else if (request.command == "interp") {
        const std::vector<cvm::Scalar> values =
            cvm::text::parse_scalar_list(request.values_spec, field);
        const cvm::Poly p = cvm::hermite::interpolate(nodes, values);
        emit(request, field, nodes, ordered_json{{"poly", poly_json(p)}},
             cvm::text::format_poly(p) + "\n");
    } else if (request.command == "pfd") {
        const cvm::Poly p = cvm::text::parse_poly(read_payload(request.poly_spec), field);
        const cvm::pfd::PFDecomposition dec = cvm::pfd::decompose(nodes, p);
        ordered_json blocks = ordered_json::array();
        std::string text;
        for (std::size_t j = 0; j < nodes.block_count(); ++j) {
            const cvm::NodeEntry& e = nodes.entry(j);
            const std::span<const cvm::Scalar> coeffs(
                dec.coefficients.data() + nodes.block_offset(j), e.multiplicity);
            blocks.push_back(ordered_json{{"node", e.node.str()},
                                          {"multiplicity", e.multiplicity},
                                          {"numerator", scalar_list_json(coeffs)}});
            text += e.node.str() + "^" + std::to_string(e.multiplicity) + ": " +
                    cvm::text::format_scalar_list(coeffs) + "\n";
        }
        emit(request, field, nodes, ordered_json{{"blocks", std::move(blocks)}}, text);
    } else if (request.command == "crt") {
        const std::vector<cvm::Poly> residues =
            cvm::text::parse_poly_list(request.residues_spec, field);
        const cvm::Poly p = cvm::hermite::crt_reconstruct(nodes, residues);
        emit(request, field, nodes, ordered_json{{"poly", poly_json(p)}},
             cvm::text::format_poly(p) + "\n");
    } else if (request.command == "jordan") {
        const cvm::companion::JordanizeResult result = cvm::companion::jordanize(nodes);
        const cvm::DenseMatrix c = cvm::companion::companion(nodes).matrix;
        emit(request, field, nodes,
             ordered_json{{"V", matrix_json(result.vandermonde)},
                          {"C", matrix_json(c)},
                          {"J", matrix_json(result.jordan_form.matrix)},
                          {"certificate", result.certificate}},
             "V: " + cvm::text::format_matrix(result.vandermonde) + "\nC: " +
                 cvm::text::format_matrix(c) + "\nJ: " +
                 cvm::text::format_matrix(result.jordan_form.matrix) + "\ncertificate: " +
                 (result.certificate ? "true" : "false") + "\n");
    } else if (request.command == "hermite") {
        const cvm::hermite::HermiteBasis basis = cvm::hermite::hermite_basis(nodes);
        ordered_json list = ordered_json::array();
        std::string text;
        std::size_t index = 0;
        for (std::size_t j = 0; j < nodes.block_count(); ++j) {
            for (unsigned m = 0; m < nodes.entry(j).multiplicity; ++m, ++index) {
                const cvm::Poly& h = basis.polys[index];
                list.push_back(ordered_json{{"j", j + 1}, {"m", m}, {"coeffs", poly_json(h)}});
                text += "h[" + std::to_string(j + 1) + "," + std::to_string(m) +
                        "]: " + cvm::text::format_poly(h) + "\n";
            }
        }
        emit(request, field, nodes, ordered_json{{"basis", std::move(list)}}, text);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact confluent Vandermonde toolkit over Q and GF(p)"};
    app.require_subcommand(1);

    Request request;
    const auto add_common = [&request](CLI::App* cmd) {
        cmd->add_option("--field", request.field_spec, "field selector: q or gf:<p>")
            ->capture_default_str();
        cmd->add_option("--nodes", request.nodes_spec, "node multiset, e.g. 1,3^2,6^2")
            ->required();
        cmd->add_flag("--json", request.json, "emit JSON instead of plain text");
    };
    const auto add_poly = [&request](CLI::App* cmd) {
        cmd->add_option("--poly", request.poly_spec,
                        "polynomial coefficients, ascending (- reads stdin)")
            ->required();
    };

    add_common(app.add_subcommand("build", "print the confluent Vandermonde matrix"));
    add_common(app.add_subcommand("det", "determinant by the closed product formula"));
    add_common(app.add_subcommand("lu", "analytic LU factorization (L, U, U^-1)"));

    CLI::App* eval_cmd = app.add_subcommand("eval", "Hasse-derivative evaluation vector");
    add_common(eval_cmd);
    add_poly(eval_cmd);

    CLI::App* interp_cmd =
        app.add_subcommand("interp", "Hermite interpolation from an evaluation vector");
    add_common(interp_cmd);
    interp_cmd->add_option("--values", request.values_spec, "evaluations in block order")
        ->required();

    CLI::App* pfd_cmd =
        app.add_subcommand("pfd", "partial fraction numerators over the node denominator");
    add_common(pfd_cmd);
    add_poly(pfd_cmd);

    CLI::App* crt_cmd =
        app.add_subcommand("crt", "reconstruct from residues modulo (x - node)^mult");
    add_common(crt_cmd);
    crt_cmd->add_option("--residues", request.residues_spec,
                        "';'-separated residue polynomials, one per node")
        ->required();

    add_common(app.add_subcommand("jordan", "companion matrix and verified Jordan form"));
    add_common(app.add_subcommand("hermite", "Hermite interpolation basis polynomials"));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return 2;
    }

    request.command = app.get_subcommands().front()->get_name();

    try {
        return run(request);
    } catch (const cvm::ParseError& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const cvm::Error& e) {
        std::cerr << e.what() << '\n';
        return 1;
    }
}
