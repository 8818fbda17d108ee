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

#ifndef CVM_TEXT_HPP
#define CVM_TEXT_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "field.hpp"
#include "matrix.hpp"
#include "nodes.hpp"
#include "poly.hpp"

// Text formats shared by the CLI and external callers.  All formatting is
// canonical (lowest-terms rationals, residues in [0, p)), so output is
// byte-stable for a fixed input.
//
//   field    q | gf:<p>
//   scalar   a/b | a          (prime fields print decimal residues)
//   poly     c0,c1,...        (ascending degree)
//   nodes    n | n^m, comma-separated, e.g. 1,3^2,6^2
//   matrix   rows ';'-separated, entries ','-separated, e.g. 1,0;1,2
//   polys    ';'-separated poly list (one residue per node)

namespace cvm::text {

FieldDescriptor parse_field(std::string_view selector);

Scalar parse_scalar(std::string_view s, const FieldDescriptor& field);
std::string format_scalar(const Scalar& s);

std::vector<Scalar> parse_scalar_list(std::string_view s, const FieldDescriptor& field);
std::string format_scalar_list(std::span<const Scalar> values);

Poly parse_poly(std::string_view s, const FieldDescriptor& field);
std::string format_poly(const Poly& p);  // "0" for the zero polynomial

std::vector<Poly> parse_poly_list(std::string_view s, const FieldDescriptor& field);

struct ParsedNodes {
    std::vector<NodeEntry> entries;
    std::vector<std::string> node_tokens;  // original node spellings, for diagnostics
};

ParsedNodes parse_nodes(std::string_view s, const FieldDescriptor& field);
std::string format_nodes(const NodeMultiset& nodes);

DenseMatrix parse_matrix(std::string_view s, const FieldDescriptor& field);
std::string format_matrix(const DenseMatrix& m);

}  // namespace cvm::text

#endif  // CVM_TEXT_HPP
