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

#include "cvm/companion.hpp"

#include <cstdlib>
#include <utility>

#include "cvm/hermite.hpp"
#include "cvm/vandermonde.hpp"

namespace cvm::companion {

CompanionMatrix companion(const NodeMultiset& nodes) {
    const std::size_t d = nodes.dimension();
    const FieldDescriptor& field = nodes.field();
    Poly monic = nodes.monic_polynomial();
    DenseMatrix matrix(d, d, field);
    for (std::size_t i = 0; i + 1 < d; ++i) matrix.at(i + 1, i) = Scalar::one(field);
    for (std::size_t i = 0; i < d; ++i) matrix.at(i, d - 1) = -monic.coeff(i);
    return CompanionMatrix{nodes, std::move(monic), std::move(matrix)};
}

JordanForm jordan(const NodeMultiset& nodes) {
    const std::size_t d = nodes.dimension();
    DenseMatrix matrix(d, d, nodes.field());
    for (std::size_t j = 0; j < nodes.block_count(); ++j) {
        const NodeEntry& e = nodes.entry(j);
        const std::size_t offset = nodes.block_offset(j);
        for (unsigned r = 0; r < e.multiplicity; ++r) {
            matrix.at(offset + r, offset + r) = e.node;
            if (r + 1 < e.multiplicity) {
                matrix.at(offset + r + 1, offset + r) = Scalar::one(nodes.field());
            }
        }
    }
    return JordanForm{std::move(matrix), nodes.entries()};
}

JordanizeResult jordanize(const NodeMultiset& nodes) {
    vandermonde::ConfluentVandermonde v = vandermonde::build(nodes);
    const DenseMatrix inverse = hermite::vandermonde_inverse(nodes);
    const CompanionMatrix c = companion(nodes);
    JordanForm j = jordan(nodes);
    const bool certificate = (v.matrix * c.matrix) * inverse == j.matrix;
    return JordanizeResult{std::move(v.matrix), std::move(j), certificate};
}

Poly mulx_mod(const NodeMultiset& nodes, const Poly& f) {
    const std::size_t d = nodes.dimension();
    if (f.degree() >= 0 && static_cast<std::size_t>(f.degree()) > d - 1) {
        throw DegreeTooHigh("polynomial degree " + std::to_string(f.degree()) +
                            " exceeds d - 1 = " + std::to_string(d - 1));
    }
    Poly shifted = f.mul_linear(Scalar::zero(nodes.field()));  // x * f
    if (shifted.degree() == static_cast<int>(d)) {
        shifted -= nodes.monic_polynomial().scale(shifted.coeff(d));
    }
    return shifted;
}

namespace {

bool is_integer_matrix(const DenseMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!m.at(i, j).is_integer()) return false;
        }
    }
    return true;
}

}  // namespace

bool integer_case_check(const NodeMultiset& nodes) {
    if (!nodes.field().is_rationals()) {
        throw PreconditionViolation("integer case applies over the rationals only");
    }
    for (const NodeEntry& e : nodes.entries()) {
        if (!e.node.is_integer()) {
            throw PreconditionViolation("integer case requires integer nodes");
        }
    }
    const std::size_t q = nodes.block_count();
    if (q > 2) {
        throw PreconditionViolation("integer case requires one node or two adjacent nodes");
    }
    if (q == 2) {
        const Scalar diff = nodes.entry(1).node - nodes.entry(0).node;
        if (!(diff.is_one() || (-diff).is_one())) {
            throw PreconditionViolation("integer case requires node difference of one");
        }
    }
    const Scalar det = vandermonde::det_formula(nodes);
    const bool unit_det = det.is_one() || (-det).is_one();
    return unit_det && is_integer_matrix(hermite::vandermonde_inverse(nodes));
}

}  // namespace cvm::companion
