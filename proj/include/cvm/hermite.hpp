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

#ifndef CVM_HERMITE_HPP
#define CVM_HERMITE_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "matrix.hpp"
#include "nodes.hpp"
#include "poly.hpp"
#include "vandermonde.hpp"

namespace cvm::hermite {

/// The dual basis to the evaluation functionals: evaluating h_{j,m} over the
/// multiset gives the standard basis vector with the single 1 in slot (j, m).
/// With all multiplicities 1 these are the Lagrange basis polynomials.
struct HermiteBasis {
    NodeMultiset nodes;
    std::vector<Poly> polys;  // block by block, ascending derivative order
};

/// Each basis polynomial is a combination of hat-basis polynomials within a
/// single block, weighted by the inverse Toeplitz column of that block.
HermiteBasis hermite_basis(const NodeMultiset& nodes);

/// The inverse of the confluent Vandermonde matrix, assembled column-wise
/// from the Hermite basis; no elimination is performed.
DenseMatrix vandermonde_inverse(const NodeMultiset& nodes);

/// The unique polynomial of degree at most d-1 whose evaluation vector equals
/// the given values (in block order).
Poly interpolate(const NodeMultiset& nodes, std::span<const Scalar> values);
Poly interpolate(const vandermonde::EvalVector& values);

/// Chinese-remainder reconstruction: the unique polynomial of degree at most
/// d-1 congruent to residue_j modulo (x - lambda_j)^{m_j} for every j.
/// Residue j must have degree below m_j.
Poly crt_reconstruct(const NodeMultiset& nodes, const std::vector<Poly>& residues);

}  // namespace cvm::hermite

#endif  // CVM_HERMITE_HPP
