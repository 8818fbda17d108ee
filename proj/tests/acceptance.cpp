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

// End-to-end acceptance suite.  Runs one numbered criterion per line and
// exits with the number of failures.  The first argument is the path to the
// cvm CLI binary (wired up automatically under ctest).

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "cvm/companion.hpp"
#include "cvm/hermite.hpp"
#include "cvm/pfd.hpp"
#include "cvm/text.hpp"
#include "cvm/vandermonde.hpp"
#include "test_util.hpp"

namespace {

using cvm::DenseMatrix;
using cvm::FieldDescriptor;
using cvm::NodeMultiset;
using cvm::Poly;
using cvm::Scalar;

struct CheckFail {
    std::string what;
};

void expect(bool condition, const std::string& what) {
    if (!condition) throw CheckFail{what};
}

const FieldDescriptor kQ = FieldDescriptor::rationals();

// ---------------------------------------------------------------------------
// 1. Worked 5x5 example: V, U^{-1}, L, and the closed-form determinant.

std::string criterion_lu_golden() {
    const auto start = std::chrono::steady_clock::now();

    const NodeMultiset nodes = cvmtest::nodes136(kQ);
    expect(cvm::vandermonde::build(nodes).matrix == cvmtest::golden_matrix(cvmtest::kV136, kQ),
           "V differs from the known 5x5 display");
    const cvm::vandermonde::LUFactors lu = cvm::vandermonde::lu_factorize(nodes);
    expect(lu.upper_inverse == cvmtest::golden_matrix(cvmtest::kUinv136, kQ),
           "U^{-1} differs from the known display");
    expect(lu.lower == cvmtest::golden_matrix(cvmtest::kL136, kQ),
           "L differs from the known display");

    const Scalar det = cvm::vandermonde::det_formula(nodes);
    const Scalar factored = (cvm::text::parse_scalar("2", kQ).pow(2)) *
                            (cvm::text::parse_scalar("5", kQ).pow(2)) *
                            (cvm::text::parse_scalar("3", kQ).pow(4));
    expect(det == factored, "determinant does not equal (3-1)^2 (6-1)^2 (6-3)^4");
    expect(det.str() == "8100", "determinant does not equal 8100");

    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    expect(seconds < 1.0, "runtime exceeded 1 s");
    char note[64];
    std::snprintf(note, sizeof(note), "%.3f s", seconds);
    return note;
}

// ---------------------------------------------------------------------------
// 2. Worked 5x5 example: hat-basis matrix, T, and T^{-1}.

std::string criterion_pfd_golden() {
    const NodeMultiset nodes = cvmtest::nodes136(kQ);
    expect(cvm::pfd::hat_matrix(nodes).matrix ==
               cvmtest::golden_matrix(cvmtest::kHatMatrix136, kQ),
           "hat-basis matrix differs from the known display");
    const cvm::pfd::TMatrix t = cvm::pfd::build_T(nodes);
    expect(t.matrix == cvmtest::golden_matrix(cvmtest::kT136, kQ),
           "T differs from the known display");
    expect(cvm::pfd::invert_T(t) == cvmtest::golden_matrix(cvmtest::kTinv136, kQ),
           "T^{-1} differs from the known display");
    return "";
}

// ---------------------------------------------------------------------------
// 3. Worked 5x5 example: the five Hermite basis polynomials.

std::string criterion_hermite_golden() {
    const NodeMultiset nodes = cvmtest::nodes136(kQ);
    const cvm::hermite::HermiteBasis basis = cvm::hermite::hermite_basis(nodes);
    expect(basis.polys.size() == 5, "expected five basis polynomials");

    const DenseMatrix hat = cvmtest::golden_matrix(cvmtest::kHatMatrix136, kQ);
    const auto column = [&hat](std::size_t c) {
        std::vector<Scalar> v;
        for (std::size_t r = 0; r < hat.rows(); ++r) v.push_back(hat.at(r, c));
        return v;
    };
    const auto scaled = [](std::vector<Scalar> v, const Scalar& s) {
        for (Scalar& x : v) x *= s;
        return v;
    };
    const auto added = [](std::vector<Scalar> a, const std::vector<Scalar>& b) {
        for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
        return a;
    };
    const Scalar c100 = cvm::text::parse_scalar("1/100", kQ);
    const Scalar c18 = cvm::text::parse_scalar("1/18", kQ);
    const Scalar c108 = cvm::text::parse_scalar("1/108", kQ);
    const Scalar c45 = cvm::text::parse_scalar("1/45", kQ);
    const Scalar c675 = cvm::text::parse_scalar("-13/675", kQ);

    const std::vector<std::vector<Scalar>> expected{
        scaled(column(0), c100),
        added(scaled(column(1), c18), scaled(column(2), c108)),
        scaled(column(2), c18),
        added(scaled(column(3), c45), scaled(column(4), c675)),
        scaled(column(4), c45),
    };
    const char* names[] = {"h[1,0]", "h[2,0]", "h[2,1]", "h[3,0]", "h[3,1]"};
    for (std::size_t k = 0; k < 5; ++k) {
        expect(basis.polys[k] == Poly::from_coeffs(expected[k], kQ),
               std::string(names[k]) + " differs from the known expansion");
    }
    return "";
}

// ---------------------------------------------------------------------------
// 4. Jordan layout for the (1, 2, 2) multiplicity pattern.

std::string criterion_jordan_structure() {
    cvmtest::Rng rng(211);
    for (int rep = 0; rep < 10; ++rep) {
        const std::vector<Scalar> lambdas = cvmtest::distinct_nodes(kQ, 3, rng);
        const NodeMultiset nodes({cvm::NodeEntry{lambdas[0], 1}, cvm::NodeEntry{lambdas[1], 2},
                                  cvm::NodeEntry{lambdas[2], 2}},
                                 kQ);
        const cvm::companion::JordanForm form = cvm::companion::jordan(nodes);

        DenseMatrix expected(5, 5, kQ);
        expected.at(0, 0) = lambdas[0];
        expected.at(1, 1) = expected.at(2, 2) = lambdas[1];
        expected.at(2, 1) = Scalar::one(kQ);
        expected.at(3, 3) = expected.at(4, 4) = lambdas[2];
        expected.at(4, 3) = Scalar::one(kQ);
        expect(form.matrix == expected, "Jordan block layout is wrong");

        expect(cvm::companion::jordanize(nodes).certificate,
               "similarity certificate failed");
    }
    return "10 random node draws";
}

// ---------------------------------------------------------------------------
// 5. Hasse derivative property suite.

std::string criterion_hasse_properties() {
    const auto start = std::chrono::steady_clock::now();
    std::size_t checks = 0;
    const auto check = [&checks](bool ok, const char* what) {
        ++checks;
        if (!ok) throw CheckFail{what};
    };

    cvmtest::Rng rng(223);
    for (const auto& field : {kQ, FieldDescriptor::prime_field(7)}) {
        // Shift identity, exhaustive in degree and orders.
        for (int deg = 0; deg <= 6; ++deg) {
            for (int rep = 0; rep < 4; ++rep) {
                const Poly p = cvmtest::random_poly_exact(field, deg, rng);
                for (int which = 0; which < 3; ++which) {
                    const Scalar lambda = which == 0 ? Scalar::zero(field)
                                                     : cvmtest::random_scalar(field, rng);
                    for (unsigned m = 0; m <= 4; ++m) {
                        const Poly shifted = p * Poly::from_roots({{lambda, m}}, field);
                        for (unsigned r = 0; r <= 4; ++r) {
                            const Scalar got = shifted.hasse_derivative(r).eval(lambda);
                            if (r >= m) {
                                check(got == p.hasse_derivative(r - m).eval(lambda),
                                      "shift identity failed for r >= m");
                            } else {
                                check(got.is_zero(), "shift identity failed for r < m");
                            }
                        }
                    }
                }
            }
        }

        // Composition identity, checked against the bivariate oracle too.
        for (int rep = 0; rep < 15; ++rep) {
            const Poly p = cvmtest::random_poly(field, 6, rng);
            for (unsigned r = 0; r <= 6; ++r) {
                for (unsigned s = 0; r + s <= 6; ++s) {
                    const Scalar factor = cvm::binomial(r + s, r, field);
                    const Poly composed = p.hasse_derivative(s).hasse_derivative(r);
                    check(composed == p.hasse_derivative(r + s).scale(factor),
                          "composition identity failed");
                    check(composed == cvmtest::oracle_hasse(p, r + s).scale(factor),
                          "composition disagrees with the bivariate oracle");
                }
            }
        }

        // Direct oracle agreement.
        for (int rep = 0; rep < 25; ++rep) {
            const Poly p = cvmtest::random_poly(field, 6, rng);
            for (unsigned r = 0; r <= 4; ++r) {
                check(p.hasse_derivative(r) == cvmtest::oracle_hasse(p, r),
                      "Hasse derivative disagrees with the bivariate oracle");
            }
        }
    }

    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    expect(checks >= 5000, "fewer than 5000 assertions executed");
    expect(seconds < 10.0, "runtime exceeded 10 s");
    char note[96];
    std::snprintf(note, sizeof(note), "%zu assertions, %.2f s", checks, seconds);
    return note;
}

// ---------------------------------------------------------------------------
// 6. LU / determinant property suite.

std::string criterion_lu_properties() {
    std::size_t cases = 0;
    cvmtest::Rng rng(227);
    for (const auto& field : {kQ, FieldDescriptor::prime_field(101)}) {
        for (int rep = 0; rep < 50; ++rep, ++cases) {
            const NodeMultiset nodes = cvmtest::random_multiset(field, 10, rng);
            const DenseMatrix v = cvm::vandermonde::build(nodes).matrix;
            const cvm::vandermonde::LUFactors lu = cvm::vandermonde::lu_factorize(nodes);
            expect(lu.lower * lu.upper == v, "L U does not reproduce V");

            const Scalar formula = cvm::vandermonde::det_formula(nodes);
            expect(formula == v.det_elimination(), "formula and elimination determinants differ");
            Scalar diag = Scalar::one(field);
            for (std::size_t i = 0; i < nodes.dimension(); ++i) diag *= lu.lower.at(i, i);
            expect(formula == diag, "determinant is not the product of diag(L)");

            for (std::size_t j = 0; j < nodes.block_count(); ++j) {
                Scalar value = Scalar::one(field);
                for (std::size_t k = 0; k < j; ++k) {
                    value *= (nodes.entry(j).node - nodes.entry(k).node)
                                 .pow(nodes.entry(k).multiplicity);
                }
                for (unsigned r = 0; r < nodes.entry(j).multiplicity; ++r) {
                    const std::size_t i = nodes.block_offset(j) + r;
                    expect(lu.lower.at(i, i) == value, "diag(L) block value is wrong");
                }
            }
        }
    }
    return std::to_string(cases) + " random multisets";
}

// ---------------------------------------------------------------------------
// 7. Partial fractions / Hermite interpolation property suite.

std::string criterion_pfd_hermite_properties() {
    std::size_t cases = 0;
    cvmtest::Rng rng(229);
    for (const auto& field : {kQ, FieldDescriptor::prime_field(101)}) {
        for (int rep = 0; rep < 60; ++rep, ++cases) {
            const NodeMultiset nodes = cvmtest::random_multiset(field, 9, rng);
            const Poly p =
                cvmtest::random_poly(field, static_cast<int>(nodes.dimension()) - 1, rng);

            expect(cvm::pfd::recombine(cvm::pfd::decompose(nodes, p)) == p,
                   "recombine(decompose(p)) != p");
            expect(cvm::hermite::interpolate(cvm::vandermonde::eval_map(nodes, p)) == p,
                   "interpolate(eval(p)) != p");

            const DenseMatrix v = cvm::vandermonde::build(nodes).matrix;
            const DenseMatrix inverse = cvm::hermite::vandermonde_inverse(nodes);
            expect(inverse == v.inverse_elimination(),
                   "structured inverse differs from elimination");

            const cvm::hermite::HermiteBasis basis = cvm::hermite::hermite_basis(nodes);
            for (std::size_t k = 0; k < basis.polys.size(); ++k) {
                const std::vector<Scalar> values =
                    cvm::vandermonde::eval_map(nodes, basis.polys[k]).values();
                for (std::size_t i = 0; i < values.size(); ++i) {
                    expect(values[i] == (i == k ? Scalar::one(field) : Scalar::zero(field)),
                           "Hermite duality failed");
                }
            }

            std::vector<Poly> residues;
            for (const cvm::NodeEntry& e : nodes.entries()) {
                const Poly modulus = Poly::from_roots({{e.node, e.multiplicity}}, field);
                residues.push_back(cvmtest::poly_divmod(p, modulus).second);
            }
            expect(cvm::hermite::crt_reconstruct(nodes, residues) == p,
                   "remainder reconstruction failed");
        }
    }
    return std::to_string(cases) + " random (multiset, polynomial) pairs";
}

// ---------------------------------------------------------------------------
// 8. Companion matrix property suite.

std::string criterion_companion_properties() {
    std::size_t cases = 0;
    cvmtest::Rng rng(233);
    for (const auto& field : {kQ, FieldDescriptor::prime_field(101)}) {
        for (int rep = 0; rep < 40; ++rep, ++cases) {
            const NodeMultiset nodes = cvmtest::random_multiset(field, 12, rng);
            const std::size_t d = nodes.dimension();
            const DenseMatrix v = cvm::vandermonde::build(nodes).matrix;
            const DenseMatrix c = cvm::companion::companion(nodes).matrix;
            const DenseMatrix j = cvm::companion::jordan(nodes).matrix;
            expect(v * c == j * v, "V C != J V");

            const Poly f = cvmtest::random_poly(field, static_cast<int>(d) - 2, rng);
            const Poly xf = f.mul_linear(Scalar::zero(field));
            expect(cvm::vandermonde::eval_map(nodes, xf).values() ==
                       j.apply(cvm::vandermonde::eval_map(nodes, f).values()),
                   "eval(x f) != J eval(f)");

            const Poly monic = nodes.monic_polynomial();
            for (const cvm::NodeEntry& e : nodes.entries()) {
                const std::vector<Scalar> taylor = monic.taylor_at(e.node);
                for (unsigned r = 0; r < e.multiplicity; ++r) {
                    expect(taylor[r].is_zero(), "monic polynomial does not annihilate");
                }
            }

            const Poly g = cvmtest::random_poly(field, static_cast<int>(d) - 1, rng);
            expect(cvm::companion::mulx_mod(nodes, g).padded_coeffs(d) ==
                       c.apply(g.padded_coeffs(d)),
                   "mulx_mod disagrees with the companion matrix");
        }
    }
    return std::to_string(cases) + " random multisets";
}

// ---------------------------------------------------------------------------
// 9. The full worked pipeline again, over GF(7).

std::string criterion_gf7_pipeline() {
    const FieldDescriptor gf7 = FieldDescriptor::prime_field(7);
    const NodeMultiset nodes = cvmtest::nodes136(gf7);  // 1, 3, 6 stay distinct mod 7

    const DenseMatrix v = cvm::vandermonde::build(nodes).matrix;
    expect(v == cvmtest::golden_matrix(cvmtest::kV136, gf7), "V mod 7 differs");

    const cvm::vandermonde::LUFactors lu = cvm::vandermonde::lu_factorize(nodes);
    expect(lu.upper_inverse == cvmtest::golden_matrix(cvmtest::kUinv136, gf7),
           "U^{-1} mod 7 differs");
    expect(lu.lower == cvmtest::golden_matrix(cvmtest::kL136, gf7), "L mod 7 differs");
    expect(lu.lower * lu.upper == v, "L U != V over GF(7)");

    const cvm::pfd::HatBasisMatrix hat = cvm::pfd::hat_matrix(nodes);
    expect(hat.matrix == cvmtest::golden_matrix(cvmtest::kHatMatrix136, gf7),
           "hat matrix mod 7 differs");
    const cvm::pfd::TMatrix t = cvm::pfd::build_T(nodes);
    expect(t.matrix == cvmtest::golden_matrix(cvmtest::kT136, gf7), "T mod 7 differs");
    expect(t.matrix == v * hat.matrix, "T != V H over GF(7)");
    expect(cvm::pfd::invert_T(t) == cvmtest::golden_matrix(cvmtest::kTinv136, gf7),
           "T^{-1} mod 7 differs");

    const DenseMatrix inverse = cvm::hermite::vandermonde_inverse(nodes);
    expect(v * inverse == DenseMatrix::identity(5, gf7), "V V^{-1} != I over GF(7)");
    expect(cvm::companion::jordanize(nodes).certificate, "GF(7) similarity certificate failed");

    const Scalar det = cvm::vandermonde::det_formula(nodes);
    expect(det == v.det_elimination(), "GF(7) determinants disagree");
    expect(det == Scalar::from_integer(8100L, gf7), "det != image of 8100 in GF(7)");
    expect(det.str() == "1", "8100 mod 7 should be 1");
    return "";
}

// ---------------------------------------------------------------------------
// 10. Integer companion matrices for adjacent integer nodes.

std::string criterion_integer_case() {
    const auto is_integer_m = [](const DenseMatrix& m) {
        for (std::size_t i = 0; i < m.rows(); ++i) {
            for (std::size_t j = 0; j < m.cols(); ++j) {
                if (!m.at(i, j).is_integer()) return false;
            }
        }
        return true;
    };
    const auto unit = [](const Scalar& s) { return s.is_one() || (-s).is_one(); };

    for (const char* spec : {"0^2,1^2", "3^2,4^3"}) {
        const NodeMultiset nodes(cvm::text::parse_nodes(spec, kQ).entries, kQ);
        expect(cvm::companion::integer_case_check(nodes),
               std::string(spec) + " should pass the integer case");
        expect(unit(cvm::vandermonde::det_formula(nodes)),
               std::string(spec) + " should have unit determinant");
        expect(is_integer_m(cvm::hermite::vandermonde_inverse(nodes)),
               std::string(spec) + " should give an integer inverse");
        expect(is_integer_m(cvm::companion::companion(nodes).matrix),
               std::string(spec) + " should give an integer companion matrix");
        expect(is_integer_m(cvm::companion::jordan(nodes).matrix),
               std::string(spec) + " should give an integer Jordan form");
    }

    // Distance greater than one: outside the stated shape, and indeed not
    // integral, so the check is not vacuous.
    const NodeMultiset far = cvmtest::nodes136(kQ);
    expect(!is_integer_m(cvm::hermite::vandermonde_inverse(far)),
           "1,3^2,6^2 unexpectedly has an integer inverse");
    bool rejected = false;
    try {
        cvm::companion::integer_case_check(far);
    } catch (const cvm::PreconditionViolation&) {
        rejected = true;
    }
    expect(rejected, "shape precondition was not enforced");
    return "";
}

// ---------------------------------------------------------------------------
// 11. CLI contract.

struct CliResult {
    int exit_code;
    std::string out;
    std::string err;
};

std::string read_file(const char* path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

CliResult run_command(const std::string& command_line) {
    const char* out_path = "acceptance_stdout.tmp";
    const char* err_path = "acceptance_stderr.tmp";
    const std::string command = command_line + " >" + out_path + " 2>" + err_path;
    const int status = std::system(command.c_str());
    CliResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = read_file(out_path);
    result.err = read_file(err_path);
    std::remove(out_path);
    std::remove(err_path);
    return result;
}

CliResult run_cli(const std::string& cli, const std::string& args) {
    return run_command("\"" + cli + "\" " + args);
}

std::string cli_path;  // set from argv

std::string criterion_cli_contract() {
    expect(!cli_path.empty(), "no CLI path given (pass it as the first argument)");

    const CliResult det = run_cli(cli_path, "det --field q --nodes 1,3^2,6^2");
    expect(det.exit_code == 0, "det exited with " + std::to_string(det.exit_code));
    expect(det.out == "8100\n", "det printed '" + det.out + "'");

    const CliResult eval = run_cli(cli_path, "eval --field q --nodes 1,3^2,6^2 --poly 1");
    expect(eval.exit_code == 0, "eval exited with " + std::to_string(eval.exit_code));
    expect(eval.out == "1,1,0,1,0\n", "eval printed '" + eval.out + "'");

    const CliResult dup = run_cli(cli_path, "build --field gf:2 --nodes 1,3");
    expect(dup.exit_code == 1, "duplicate build exited with " + std::to_string(dup.exit_code));
    expect(dup.err == "duplicate node: 3 ≡ 1 in GF(2)\n",
           "diagnostic was '" + dup.err + "'");
    expect(dup.out.empty(), "diagnostic leaked to stdout");

    // JSON round-trip: parse the emitted matrix and basis back into exact
    // values and compare with the library objects.
    const NodeMultiset nodes = cvmtest::nodes136(kQ);
    const CliResult build = run_cli(cli_path, "build --field q --nodes 1,3^2,6^2 --json");
    expect(build.exit_code == 0, "json build failed");
    const nlohmann::json parsed = nlohmann::json::parse(build.out);
    expect(parsed.at("field").get<std::string>() == "q", "json field selector differs");
    expect(parsed.at("nodes").size() == 3, "json node list size differs");
    expect(parsed.at("nodes").at(1).at(0).get<std::string>() == "3" &&
               parsed.at("nodes").at(1).at(1).get<unsigned>() == 2,
           "json node entry differs");
    const auto& rows = parsed.at("result").at("matrix");
    const DenseMatrix v = cvm::vandermonde::build(nodes).matrix;
    expect(rows.size() == v.rows(), "json matrix row count differs");
    for (std::size_t i = 0; i < v.rows(); ++i) {
        for (std::size_t j = 0; j < v.cols(); ++j) {
            const Scalar entry =
                cvm::text::parse_scalar(rows.at(i).at(j).get<std::string>(), kQ);
            expect(entry == v.at(i, j), "json matrix entry differs after reparsing");
        }
    }

    const CliResult hermite = run_cli(cli_path, "hermite --field q --nodes 1,3^2,6^2 --json");
    expect(hermite.exit_code == 0, "json hermite failed");
    const nlohmann::json hparsed = nlohmann::json::parse(hermite.out);
    const cvm::hermite::HermiteBasis basis = cvm::hermite::hermite_basis(nodes);
    const auto& items = hparsed.at("result").at("basis");
    expect(items.size() == basis.polys.size(), "json basis size differs");
    for (std::size_t k = 0; k < basis.polys.size(); ++k) {
        std::vector<Scalar> coeffs;
        for (const auto& c : items.at(k).at("coeffs")) {
            coeffs.push_back(cvm::text::parse_scalar(c.get<std::string>(), kQ));
        }
        expect(Poly::from_coeffs(coeffs, kQ) == basis.polys[k],
               "json polynomial differs after reparsing");
    }

    // Remaining contract points: stdin payloads, the input size cap, and the
    // usage exit code.
    const CliResult stdin_eval =
        run_command("echo 1,2,3 | \"" + cli_path + "\" eval --nodes 0^3 --poly -");
    expect(stdin_eval.exit_code == 0 && stdin_eval.out == "1,2,3\n",
           "stdin polynomial payload failed");

    const CliResult too_big = run_cli(cli_path, "det --nodes 0^65");
    expect(too_big.exit_code == 1, "oversized input not rejected as a domain error");

    const CliResult usage = run_cli(cli_path, "det");
    expect(usage.exit_code == 2, "missing required option should exit 2");
    return "";
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) cli_path = argv[1];

    const std::vector<std::pair<std::string, std::function<std::string()>>> criteria = {
        {"worked 5x5 example: V, U^{-1}, L, det = 8100", criterion_lu_golden},
        {"worked 5x5 example: hat matrix, T, T^{-1}", criterion_pfd_golden},
        {"worked 5x5 example: Hermite basis polynomials", criterion_hermite_golden},
        {"Jordan layout for multiplicities (1,2,2) with certificate", criterion_jordan_structure},
        {"Hasse property suite over Q and GF(7)", criterion_hasse_properties},
        {"LU and determinant properties over Q and GF(101)", criterion_lu_properties},
        {"partial fraction and interpolation properties", criterion_pfd_hermite_properties},
        {"companion matrix properties up to d = 12", criterion_companion_properties},
        {"worked pipeline over GF(7), det = 1", criterion_gf7_pipeline},
        {"integer matrices for adjacent integer nodes", criterion_integer_case},
        {"CLI byte contract and JSON round-trip", criterion_cli_contract},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::string note;
        std::string failure;
        try {
            note = criteria[i].second();
        } catch (const CheckFail& f) {
            failure = f.what;
        } catch (const std::exception& e) {
            failure = std::string("unexpected exception: ") + e.what();
        }
        if (failure.empty()) {
            std::cout << "PASS  " << (i + 1) << "  " << criteria[i].first;
            if (!note.empty()) std::cout << "  (" << note << ")";
            std::cout << '\n';
        } else {
            ++failures;
            std::cout << "FAIL  " << (i + 1) << "  " << criteria[i].first << ": " << failure
                      << '\n';
        }
    }
    return failures;
}
