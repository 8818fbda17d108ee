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

#ifndef CVM_NODES_HPP
#define CVM_NODES_HPP

#include <cstddef>
#include <vector>

#include "field.hpp"
#include "poly.hpp"

namespace cvm {

struct NodeEntry {
    Scalar node;
    unsigned multiplicity;
};

/// A multiset of distinct nodes with positive multiplicities.  Distinctness
/// is field-relative: node differences are tested against zero in the working
/// field, so e.g. 1 and 3 coincide over GF(2).  Entry order is preserved and
/// defines every derived row/column ordering.
class NodeMultiset {
   public:
    NodeMultiset(std::vector<NodeEntry> entries, const FieldDescriptor& field);

    const FieldDescriptor& field() const noexcept { return field_; }
    const std::vector<NodeEntry>& entries() const noexcept { return entries_; }
    const NodeEntry& entry(std::size_t j) const { return entries_.at(j); }

    std::size_t block_count() const noexcept { return entries_.size(); }  // q
    std::size_t dimension() const noexcept { return dimension_; }         // d

    /// Row offset of block j: m_1 + ... + m_{j-1}.
    std::size_t block_offset(std::size_t j) const { return offsets_.at(j); }

    /// Monic polynomials p_0, ..., p_{d-1} with p_0 = 1 and p_{k+1} =
    /// (x - lambda) p_k, the node lambda running through the entries in order,
    /// each repeated according to its multiplicity.  deg p_i = i.
    std::vector<Poly> newton_basis() const;

    /// The d polynomials (x - lambda_j)^m * cofactor(j) for m = 0..m_j-1,
    /// flattened block by block.  Each has degree at most d-1.
    std::vector<Poly> hat_basis() const;

    /// prod_{k != j} (x - lambda_k)^{m_k}.
    Poly cofactor(std::size_t j) const;

    /// prod_j (x - lambda_j)^{m_j}, monic of degree d.
    Poly monic_polynomial() const;

    friend bool operator==(const NodeMultiset& lhs, const NodeMultiset& rhs) noexcept;

   private:
    FieldDescriptor field_;
    std::vector<NodeEntry> entries_;
    std::vector<std::size_t> offsets_;
    std::size_t dimension_;
};

}  // namespace cvm

#endif  // CVM_NODES_HPP
