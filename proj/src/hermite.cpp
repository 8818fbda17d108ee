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

#include "cvm/hermite.hpp"

#include <utility>

#include "cvm/pfd.hpp"

namespace cvm::hermite {

HermiteBasis hermite_basis(const NodeMultiset& nodes) {
    const std::vector<Poly> hat = nodes.hat_basis();
    const pfd::TMatrix t = pfd::build_T(nodes);

    std::vector<Poly> polys;
    polys.reserve(nodes.dimension());
    for (std::size_t j = 0; j < nodes.block_count(); ++j) {
        const std::vector<Scalar> inv_column = pfd::invert_toeplitz_column(t.block_columns[j]);
        const std::size_t offset = nodes.block_offset(j);
        const unsigned mult = nodes.entry(j).multiplicity;
        // Column (j, m) of T^{-1} weights the hat polynomials of block j only.
        for (unsigned m = 0; m < mult; ++m) {
            Poly h = Poly::zero(nodes.field());
            for (unsigned mp = m; mp < mult; ++mp) {
                h += hat[offset + mp].scale(inv_column[mp - m]);
            }
            polys.push_back(std::move(h));
        }
    }
    return HermiteBasis{nodes, std::move(polys)};
}

DenseMatrix vandermonde_inverse(const NodeMultiset& nodes) {
    const std::size_t d = nodes.dimension();
    DenseMatrix inverse(d, d, nodes.field());
    const HermiteBasis basis = hermite_basis(nodes);
    for (std::size_t col = 0; col < d; ++col) {
        const std::vector<Scalar> coeffs = basis.polys[col].padded_coeffs(d);
        for (std::size_t row = 0; row < d; ++row) inverse.at(row, col) = coeffs[row];
    }
    return inverse;
}

Poly interpolate(const NodeMultiset& nodes, std::span<const Scalar> values) {
    if (values.size() != nodes.dimension()) {
        throw LengthMismatch("value vector length " + std::to_string(values.size()) +
                             " does not match d = " + std::to_string(nodes.dimension()));
    }
    const HermiteBasis basis = hermite_basis(nodes);
    Poly out = Poly::zero(nodes.field());
    for (std::size_t i = 0; i < values.size(); ++i) {
        require_same_field(values[i].field(), nodes.field());
        out += basis.polys[i].scale(values[i]);
    }
    return out;
}

Poly interpolate(const vandermonde::EvalVector& values) {
    return interpolate(values.nodes(), values.values());
}

Poly crt_reconstruct(const NodeMultiset& nodes, const std::vector<Poly>& residues) {
    if (residues.size() != nodes.block_count()) {
        throw LengthMismatch("expected one residue per node, got " +
                             std::to_string(residues.size()) + " for q = " +
                             std::to_string(nodes.block_count()));
    }
    std::vector<Scalar> values;
    values.reserve(nodes.dimension());
    for (std::size_t j = 0; j < nodes.block_count(); ++j) {
        const NodeEntry& e = nodes.entry(j);
        require_same_field(residues[j].field(), nodes.field());
        if (residues[j].degree() >= static_cast<int>(e.multiplicity)) {
            throw ResidueDegreeTooHigh("residue " + std::to_string(j) + " has degree " +
                                       std::to_string(residues[j].degree()) +
                                       ", expected below " + std::to_string(e.multiplicity));
        }
        // The class of p mod (x - lambda)^m is determined by the first m
        // Taylor coefficients at lambda.
        const std::vector<Scalar> taylor = residues[j].taylor_at(e.node);
        for (unsigned r = 0; r < e.multiplicity; ++r) {
            values.push_back(r < taylor.size() ? taylor[r] : Scalar::zero(nodes.field()));
        }
    }
    return interpolate(nodes, values);
}

}  // namespace cvm::hermite
