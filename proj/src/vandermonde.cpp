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

#include "cvm/vandermonde.hpp"

#include <utility>

namespace cvm::vandermonde {

EvalVector::EvalVector(NodeMultiset nodes, std::vector<Scalar> values)
    : nodes_(std::move(nodes)), values_(std::move(values)) {
    if (values_.size() != nodes_.dimension()) {
        throw LengthMismatch("evaluation vector length " + std::to_string(values_.size()) +
                             " does not match d = " + std::to_string(nodes_.dimension()));
    }
    for (const Scalar& v : values_) require_same_field(v.field(), nodes_.field());
}

const Scalar& EvalVector::at(std::size_t block, std::size_t order) const {
    if (block >= nodes_.block_count() || order >= nodes_.entry(block).multiplicity) {
        throw PreconditionViolation("evaluation slot out of range");
    }
    return values_[nodes_.block_offset(block) + order];
}

DenseMatrix build_block(const Scalar& node, std::size_t multiplicity, std::size_t dimension) {
    if (multiplicity < 1 || multiplicity > dimension) {
        throw PreconditionViolation("block multiplicity must lie in [1, d]");
    }
    const FieldDescriptor& field = node.field();
    DenseMatrix block(multiplicity, dimension, field);

    std::vector<Scalar> powers;
    powers.reserve(dimension);
    powers.push_back(Scalar::one(field));
    for (std::size_t i = 1; i < dimension; ++i) powers.push_back(powers.back() * node);

    // Column i needs C(i, 0..min(i, m-1)); one Pascal pass covers all columns.
    std::vector<mpz_class> row;
    pascal_row(0, row);
    for (std::size_t i = 0; i < dimension; ++i) {
        for (std::size_t r = 0; r < multiplicity && r <= i; ++r) {
            block.at(r, i) = Scalar::from_integer(row[r], field) * powers[i - r];
        }
        row.emplace_back(0);
        for (std::size_t j = i + 1; j >= 1; --j) row[j] += row[j - 1];
    }
    return block;
}

ConfluentVandermonde build(const NodeMultiset& nodes) {
    const std::size_t d = nodes.dimension();
    DenseMatrix matrix(d, d, nodes.field());
    for (std::size_t j = 0; j < nodes.block_count(); ++j) {
        const NodeEntry& e = nodes.entry(j);
        DenseMatrix block = build_block(e.node, e.multiplicity, d);
        const std::size_t offset = nodes.block_offset(j);
        for (std::size_t r = 0; r < e.multiplicity; ++r) {
            for (std::size_t i = 0; i < d; ++i) matrix.at(offset + r, i) = block.at(r, i);
        }
    }
    return ConfluentVandermonde{nodes, std::move(matrix)};
}

EvalVector eval_map(const NodeMultiset& nodes, const Poly& p) {
    require_same_field(p.field(), nodes.field());
    const std::size_t d = nodes.dimension();
    if (p.degree() >= 0 && static_cast<std::size_t>(p.degree()) > d - 1) {
        throw DegreeTooHigh("polynomial degree " + std::to_string(p.degree()) +
                            " exceeds d - 1 = " + std::to_string(d - 1));
    }
    std::vector<Scalar> values;
    values.reserve(d);
    for (const NodeEntry& e : nodes.entries()) {
        const std::vector<Scalar> taylor = p.taylor_at(e.node);
        for (unsigned r = 0; r < e.multiplicity; ++r) {
            values.push_back(r < taylor.size() ? taylor[r] : Scalar::zero(nodes.field()));
        }
    }
    return EvalVector(nodes, std::move(values));
}

LUFactors lu_factorize(const NodeMultiset& nodes) {
    const std::size_t d = nodes.dimension();
    const FieldDescriptor& field = nodes.field();
    const std::vector<Poly> basis = nodes.newton_basis();

    DenseMatrix upper_inverse(d, d, field);
    DenseMatrix lower(d, d, field);
    for (std::size_t col = 0; col < d; ++col) {
        const std::vector<Scalar> coeffs = basis[col].padded_coeffs(d);
        const EvalVector evals = eval_map(nodes, basis[col]);
        for (std::size_t row = 0; row < d; ++row) {
            upper_inverse.at(row, col) = coeffs[row];
            lower.at(row, col) = evals.values()[row];
        }
    }

    // U^{-1} is unit upper triangular; invert it column by column.
    DenseMatrix upper(d, d, field);
    std::vector<Scalar> unit(d, Scalar::zero(field));
    for (std::size_t col = 0; col < d; ++col) {
        unit[col] = Scalar::one(field);
        const std::vector<Scalar> x = solve_upper_triangular(upper_inverse, unit);
        for (std::size_t row = 0; row < d; ++row) upper.at(row, col) = x[row];
        unit[col] = Scalar::zero(field);
    }

    return LUFactors{std::move(lower), std::move(upper), std::move(upper_inverse)};
}

Scalar det_formula(const NodeMultiset& nodes) {
    Scalar det = Scalar::one(nodes.field());
    for (std::size_t i = 0; i < nodes.block_count(); ++i) {
        for (std::size_t j = i + 1; j < nodes.block_count(); ++j) {
            const Scalar diff = nodes.entry(j).node - nodes.entry(i).node;
            const std::uint64_t exp = static_cast<std::uint64_t>(nodes.entry(i).multiplicity) *
                                      nodes.entry(j).multiplicity;
            det *= diff.pow(exp);
        }
    }
    return det;
}

}  // namespace cvm::vandermonde
