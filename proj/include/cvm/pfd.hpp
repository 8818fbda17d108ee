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

#ifndef CVM_PFD_HPP
#define CVM_PFD_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "matrix.hpp"
#include "nodes.hpp"
#include "poly.hpp"
#include "vandermonde.hpp"

namespace cvm::pfd {

/// Columns are the coefficient vectors of the hat-basis polynomials, in block
/// order, zero-padded to length d.
struct HatBasisMatrix {
    NodeMultiset nodes;
    DenseMatrix matrix;
};

/// The product of the confluent Vandermonde matrix with the hat-basis matrix:
/// block diagonal, one lower-triangular Toeplitz block per distinct node.
/// Block j is determined by its first column, the Taylor coefficients of the
/// cofactor product at node j truncated to m_j terms.
struct TMatrix {
    NodeMultiset nodes;
    DenseMatrix matrix;
    std::vector<std::vector<Scalar>> block_columns;  // first column of each block
};

/// Coordinates of a polynomial in the hat basis; equivalently the numerator
/// coefficients of its partial fraction decomposition, block by block in
/// ascending powers of (x - lambda_j).
struct PFDecomposition {
    NodeMultiset nodes;
    std::vector<Scalar> coefficients;
};

HatBasisMatrix hat_matrix(const NodeMultiset& nodes);

TMatrix build_T(const NodeMultiset& nodes);

/// Blockwise inverse: each lower-triangular Toeplitz block is inverted from
/// its first column alone and stays lower-triangular Toeplitz.
DenseMatrix invert_T(const TMatrix& t);

/// Inverse first column of a lower-triangular Toeplitz block given its first
/// column; forward substitution against the unit vector.
std::vector<Scalar> invert_toeplitz_column(std::span<const Scalar> column);

/// T^{-1} * eval(p): the hat-basis coordinates of p, i.e. the partial
/// fraction numerators of p over the monic polynomial of the multiset.
PFDecomposition decompose(const NodeMultiset& nodes, const Poly& p);

/// Sum of coefficient * hat-basis polynomial; inverse of decompose.
Poly recombine(const PFDecomposition& decomposition);

/// Standard-form numerator above (x - lambda_j)^{m_j}: the block's shifted
/// power series expanded into plain coefficients.
Poly numerator(const PFDecomposition& decomposition, std::size_t block);

}  // namespace cvm::pfd

#endif  // CVM_PFD_HPP
