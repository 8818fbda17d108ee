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

#include "cvm/text.hpp"

#include <cctype>
#include <charconv>

namespace cvm::text {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

bool is_integer_token(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

mpz_class parse_mpz(std::string_view s) {
    if (!is_integer_token(s)) {
        throw ParseError("malformed integer: '" + std::string(s) + "'");
    }
    if (s.front() == '+') s.remove_prefix(1);  // GMP rejects an explicit plus
    return mpz_class(std::string(s));
}

}  // namespace

FieldDescriptor parse_field(std::string_view selector) {
    selector = trim(selector);
    if (selector == "q") return FieldDescriptor::rationals();
    if (selector.substr(0, 3) == "gf:") {
        const std::string_view digits = selector.substr(3);
        std::uint64_t p = 0;
        const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec != std::errc() || ptr != digits.data() + digits.size()) {
            throw ParseError("malformed field selector: '" + std::string(selector) + "'");
        }
        return FieldDescriptor::prime_field(p);
    }
    throw ParseError("unknown field selector: '" + std::string(selector) +
                     "' (expected q or gf:<p>)");
}

Scalar parse_scalar(std::string_view s, const FieldDescriptor& field) {
    s = trim(s);
    const std::size_t slash = s.find('/');
    if (slash == std::string_view::npos) {
        return Scalar::from_integer(parse_mpz(s), field);
    }
    const mpz_class num = parse_mpz(trim(s.substr(0, slash)));
    const mpz_class den = parse_mpz(trim(s.substr(slash + 1)));
    if (den == 0) {
        throw ParseError("zero denominator: '" + std::string(s) + "'");
    }
    return Scalar::from_fraction(num, den, field);
}

std::string format_scalar(const Scalar& s) { return s.str(); }

std::vector<Scalar> parse_scalar_list(std::string_view s, const FieldDescriptor& field) {
    std::vector<Scalar> out;
    for (std::string_view token : split(s, ',')) out.push_back(parse_scalar(token, field));
    return out;
}

std::string format_scalar_list(std::span<const Scalar> values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ',';
        out += values[i].str();
    }
    return out;
}

Poly parse_poly(std::string_view s, const FieldDescriptor& field) {
    return Poly::from_coeffs(parse_scalar_list(s, field), field);
}

std::string format_poly(const Poly& p) {
    if (p.is_zero()) return "0";
    return format_scalar_list(p.coeffs());
}

std::vector<Poly> parse_poly_list(std::string_view s, const FieldDescriptor& field) {
    std::vector<Poly> out;
    for (std::string_view token : split(s, ';')) out.push_back(parse_poly(token, field));
    return out;
}

ParsedNodes parse_nodes(std::string_view s, const FieldDescriptor& field) {
    ParsedNodes parsed;
    for (std::string_view token : split(s, ',')) {
        token = trim(token);
        std::string_view node_part = token;
        unsigned multiplicity = 1;
        const std::size_t caret = token.rfind('^');
        if (caret != std::string_view::npos) {
            node_part = trim(token.substr(0, caret));
            const std::string_view mult_part = trim(token.substr(caret + 1));
            std::uint32_t m = 0;
            const auto [ptr, ec] =
                std::from_chars(mult_part.data(), mult_part.data() + mult_part.size(), m);
            if (ec != std::errc() || ptr != mult_part.data() + mult_part.size() || m == 0) {
                throw ParseError("malformed multiplicity: '" + std::string(token) + "'");
            }
            multiplicity = m;
        }
        parsed.entries.push_back(NodeEntry{parse_scalar(node_part, field), multiplicity});
        parsed.node_tokens.emplace_back(node_part);
    }
    return parsed;
}

std::string format_nodes(const NodeMultiset& nodes) {
    std::string out;
    for (std::size_t j = 0; j < nodes.block_count(); ++j) {
        if (j > 0) out += ',';
        out += nodes.entry(j).node.str();
        if (nodes.entry(j).multiplicity != 1) {
            out += '^';
            out += std::to_string(nodes.entry(j).multiplicity);
        }
    }
    return out;
}

DenseMatrix parse_matrix(std::string_view s, const FieldDescriptor& field) {
    const std::vector<std::string_view> rows = split(s, ';');
    std::vector<std::vector<Scalar>> parsed;
    parsed.reserve(rows.size());
    for (std::string_view row : rows) parsed.push_back(parse_scalar_list(row, field));
    const std::size_t cols = parsed.empty() ? 0 : parsed[0].size();
    for (const auto& row : parsed) {
        if (row.size() != cols) {
            throw ParseError("ragged matrix rows");
        }
    }
    DenseMatrix m(parsed.size(), cols, field);
    for (std::size_t i = 0; i < parsed.size(); ++i) {
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = parsed[i][j];
    }
    return m;
}

std::string format_matrix(const DenseMatrix& m) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i > 0) out += ';';
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j > 0) out += ',';
            out += m.at(i, j).str();
        }
    }
    return out;
}

}  // namespace cvm::text
