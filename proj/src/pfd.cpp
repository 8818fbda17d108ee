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

#include "cvm/pfd.hpp"

#include <cassert>
#include <utility>

namespace cvm::pfd {

HatBasisMatrix hat_matrix(const NodeMultiset& nodes) {
    const std::size_t d = nodes.dimension();
    DenseMatrix matrix(d, d, nodes.field());
    const std::vector<Poly> basis = nodes.hat_basis();
    for (std::size_t col = 0; col < d; ++col) {
        const std::vector<Scalar> coeffs = basis[col].padded_coeffs(d);
        for (std::size_t row = 0; row < d; ++row) matrix.at(row, col) = coeffs[row];
    }
    return HatBasisMatrix{nodes, std::move(matrix)};
}

TMatrix build_T(const NodeMultiset& nodes) {
    const std::size_t d = nodes.dimension();
    const FieldDescriptor& field = nodes.field();
    DenseMatrix matrix(d, d, field);
    std::vector<std::vector<Scalar>> block_columns;
    block_columns.reserve(nodes.block_count());

    for (std::size_t j = 0; j < nodes.block_count(); ++j) {
        const NodeEntry& e = nodes.entry(j);
        std::vector<Scalar> taylor = nodes.cofactor(j).taylor_at(e.node);
        taylor.resize(e.multiplicity, Scalar::zero(field));

        const std::size_t offset = nodes.block_offset(j);
        for (std::size_t r = 0; r < e.multiplicity; ++r) {
            for (std::size_t c = 0; c <= r; ++c) {
                matrix.at(offset + r, offset + c) = taylor[r - c];
            }
        }
        block_columns.push_back(std::move(taylor));
    }

    // The Taylor route must agree with the defining product.
    assert(matrix == vandermonde::build(nodes).matrix * hat_matrix(nodes).matrix);

    return TMatrix{nodes, std::move(matrix), std::move(block_columns)};
}

std::vector<Scalar> invert_toeplitz_column(std::span<const Scalar> column) {
    if (column.empty()) {
        throw PreconditionViolation("empty Toeplitz column");
    }
    if (column[0].is_zero()) {
        throw ZeroDiagonal("Toeplitz block has zero diagonal");
    }
    const Scalar head = column[0].inverse();
    std::vector<Scalar> out;
    out.reserve(column.size());
    out.push_back(head);
    for (std::size_t i = 1; i < column.size(); ++i) {
        Scalar acc = Scalar::zero(head.field());
        for (std::size_t k = 1; k <= i; ++k) acc += column[k] * out[i - k];
        out.push_back(-(acc * head));
    }
    return out;
}

DenseMatrix invert_T(const TMatrix& t) {
    const std::size_t d = t.nodes.dimension();
    DenseMatrix inv(d, d, t.nodes.field());
    for (std::size_t j = 0; j < t.nodes.block_count(); ++j) {
        const std::vector<Scalar> column = invert_toeplitz_column(t.block_columns[j]);
        const std::size_t offset = t.nodes.block_offset(j);
        for (std::size_t r = 0; r < column.size(); ++r) {
            for (std::size_t c = 0; c <= r; ++c) {
                inv.at(offset + r, offset + c) = column[r - c];
            }
        }
    }
    return inv;
}

PFDecomposition decompose(const NodeMultiset& nodes, const Poly& p) {
    const TMatrix t = build_T(nodes);
    const vandermonde::EvalVector evals = vandermonde::eval_map(nodes, p);

    // Blockwise forward substitution against the Toeplitz columns.
    std::vector<Scalar> coefficients;
    coefficients.reserve(nodes.dimension());
    for (std::size_t j = 0; j < nodes.block_count(); ++j) {
        const std::vector<Scalar>& column = t.block_columns[j];
        const std::size_t offset = nodes.block_offset(j);
        std::vector<Scalar> x;
        x.reserve(column.size());
        for (std::size_t r = 0; r < column.size(); ++r) {
            Scalar acc = evals.values()[offset + r];
            for (std::size_t k = 1; k <= r; ++k) acc -= column[k] * x[r - k];
            x.push_back(acc / column[0]);
        }
        coefficients.insert(coefficients.end(), x.begin(), x.end());
    }
    return PFDecomposition{nodes, std::move(coefficients)};
}

Poly recombine(const PFDecomposition& decomposition) {
    const NodeMultiset& nodes = decomposition.nodes;
    if (decomposition.coefficients.size() != nodes.dimension()) {
        throw LengthMismatch("decomposition length does not match d");
    }
    const std::vector<Poly> basis = nodes.hat_basis();
    Poly out = Poly::zero(nodes.field());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        out += basis[i].scale(decomposition.coefficients[i]);
    }
    return out;
}

Poly numerator(const PFDecomposition& decomposition, std::size_t block) {
    const NodeMultiset& nodes = decomposition.nodes;
    const NodeEntry& e = nodes.entry(block);
    const std::size_t offset = nodes.block_offset(block);
    Poly out = Poly::zero(nodes.field());
    Poly shifted_power = Poly::one(nodes.field());
    for (unsigned m = 0; m < e.multiplicity; ++m) {
        out += shifted_power.scale(decomposition.coefficients[offset + m]);
        shifted_power = shifted_power.mul_linear(e.node);
    }
    return out;
}

}  // namespace cvm::pfd
