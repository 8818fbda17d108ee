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

#ifndef CVM_COMPANION_HPP
#define CVM_COMPANION_HPP

#include <cstddef>
#include <vector>

#include "matrix.hpp"
#include "nodes.hpp"
#include "poly.hpp"

namespace cvm::companion {

/// Matrix of multiplication-by-x modulo the monic polynomial of the multiset,
/// in the standard monomial basis: ones on the subdiagonal, the negated
/// coefficients in the last column.
struct CompanionMatrix {
    NodeMultiset nodes;
    Poly monic;  // degree d, leading coefficient 1
    DenseMatrix matrix;
};

/// Block diagonal of lower-triangular Jordan blocks (node on the diagonal,
/// ones on the subdiagonal), one block per distinct node, in entry order.
struct JordanForm {
    DenseMatrix matrix;
    std::vector<NodeEntry> blocks;
};

struct JordanizeResult {
    DenseMatrix vandermonde;
    JordanForm jordan_form;
    bool certificate;  // exact check of V * C * V^{-1} == J
};

CompanionMatrix companion(const NodeMultiset& nodes);

JordanForm jordan(const NodeMultiset& nodes);

/// Builds V, C, and J, then verifies the similarity V * C * V^{-1} == J
/// entrywise in exact arithmetic rather than trusting it.
JordanizeResult jordanize(const NodeMultiset& nodes);

/// x * f(x) reduced modulo the monic polynomial of the multiset; the linear
/// map whose standard-basis matrix is the companion matrix.
Poly mulx_mod(const NodeMultiset& nodes, const Poly& f);

/// For integer nodes over the rationals with either a single node or two
/// nodes at distance one: true iff det V = +-1 and V^{-1} is an integer
/// matrix (then V, C, V^{-1}, J are all integer matrices).  Other shapes are
/// rejected.
bool integer_case_check(const NodeMultiset& nodes);

}  // namespace cvm::companion

#endif  // CVM_COMPANION_HPP
