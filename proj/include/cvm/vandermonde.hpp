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

#ifndef CVM_VANDERMONDE_HPP
#define CVM_VANDERMONDE_HPP

#include <cstddef>
#include <vector>

#include "matrix.hpp"
#include "nodes.hpp"
#include "poly.hpp"

namespace cvm::vandermonde {

/// Stacked Hasse-derivative evaluations of a polynomial, ordered block by
/// block as the node multiset dictates: slot (j, r) holds the order-r Hasse
/// derivative evaluated at node j.
class EvalVector {
   public:
    EvalVector(NodeMultiset nodes, std::vector<Scalar> values);

    const NodeMultiset& nodes() const noexcept { return nodes_; }
    const std::vector<Scalar>& values() const noexcept { return values_; }

    const Scalar& at(std::size_t block, std::size_t order) const;

    friend bool operator==(const EvalVector& lhs, const EvalVector& rhs) noexcept {
        return lhs.nodes_ == rhs.nodes_ && lhs.values_ == rhs.values_;
    }

   private:
    NodeMultiset nodes_;
    std::vector<Scalar> values_;
};

struct ConfluentVandermonde {
    NodeMultiset nodes;
    DenseMatrix matrix;  // d x d, row block j evaluates Hasse orders 0..m_j-1 at node j
};

struct LUFactors {
    DenseMatrix lower;          // L, columns eval(p_0), ..., eval(p_{d-1})
    DenseMatrix upper;          // U, unit upper triangular
    DenseMatrix upper_inverse;  // U^{-1}, columns [p_0], ..., [p_{d-1}]
};

/// The m x d row block of one node: entry (r, i) = C(i, r) * lambda^{i-r} for
/// i >= r, zero below.  Requires 1 <= m <= d.
DenseMatrix build_block(const Scalar& node, std::size_t multiplicity, std::size_t dimension);

/// Vertical stack of the per-node blocks in entry order.
ConfluentVandermonde build(const NodeMultiset& nodes);

/// eval(p): the length-d vector of Taylor coefficients of p at each node,
/// truncated to the node's multiplicity.  Satisfies V * [p] = eval(p).
EvalVector eval_map(const NodeMultiset& nodes, const Poly& p);

/// Analytic LU factorization from the monic node-sequence basis: U^{-1} holds
/// the basis coefficients column-wise, L their evaluations; no elimination is
/// performed.  L * U equals the confluent Vandermonde matrix.
LUFactors lu_factorize(const NodeMultiset& nodes);

/// Closed-form determinant prod_{i<j} (lambda_j - lambda_i)^{m_i m_j} over
/// ordered pairs in entry order.  Reordering entries can flip the sign when
/// an exponent is odd.
Scalar det_formula(const NodeMultiset& nodes);

}  // namespace cvm::vandermonde

#endif  // CVM_VANDERMONDE_HPP
