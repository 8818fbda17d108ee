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

#include "cvm/nodes.hpp"

#include <utility>

namespace cvm {

NodeMultiset::NodeMultiset(std::vector<NodeEntry> entries, const FieldDescriptor& field)
    : field_(field), entries_(std::move(entries)), dimension_(0) {
    if (entries_.empty()) {
        throw EmptyMultiset("node multiset must contain at least one entry");
    }
    for (const NodeEntry& e : entries_) {
        require_same_field(e.node.field(), field_);
        if (e.multiplicity == 0) {
            throw PreconditionViolation("node multiplicity must be positive");
        }
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        for (std::size_t j = i + 1; j < entries_.size(); ++j) {
            if ((entries_[i].node - entries_[j].node).is_zero()) {
                throw DuplicateNode("duplicate node: entries " + std::to_string(i) + " and " +
                                        std::to_string(j) + " coincide in " + field_.name(),
                                    i, j, entries_[i].node.str());
            }
        }
    }
    offsets_.reserve(entries_.size());
    for (const NodeEntry& e : entries_) {
        offsets_.push_back(dimension_);
        dimension_ += e.multiplicity;
    }
}

std::vector<Poly> NodeMultiset::newton_basis() const {
    std::vector<Poly> basis;
    basis.reserve(dimension_);
    Poly p = Poly::one(field_);
    basis.push_back(p);
    for (const NodeEntry& e : entries_) {
        for (unsigned m = 0; m < e.multiplicity && basis.size() < dimension_; ++m) {
            p = p.mul_linear(e.node);
            basis.push_back(p);
        }
    }
    return basis;
}

std::vector<Poly> NodeMultiset::hat_basis() const {
    std::vector<Poly> basis;
    basis.reserve(dimension_);
    for (std::size_t j = 0; j < entries_.size(); ++j) {
        Poly p = cofactor(j);
        for (unsigned m = 0; m < entries_[j].multiplicity; ++m) {
            basis.push_back(p);
            p = p.mul_linear(entries_[j].node);
        }
    }
    return basis;
}

Poly NodeMultiset::cofactor(std::size_t j) const {
    Poly p = Poly::one(field_);
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        if (k == j) continue;
        for (unsigned m = 0; m < entries_[k].multiplicity; ++m) {
            p = p.mul_linear(entries_[k].node);
        }
    }
    return p;
}

Poly NodeMultiset::monic_polynomial() const {
    Poly p = Poly::one(field_);
    for (const NodeEntry& e : entries_) {
        for (unsigned m = 0; m < e.multiplicity; ++m) p = p.mul_linear(e.node);
    }
    return p;
}

bool operator==(const NodeMultiset& lhs, const NodeMultiset& rhs) noexcept {
    if (!(lhs.field_ == rhs.field_) || lhs.entries_.size() != rhs.entries_.size()) return false;
    for (std::size_t i = 0; i < lhs.entries_.size(); ++i) {
        if (!(lhs.entries_[i].node == rhs.entries_[i].node) ||
            lhs.entries_[i].multiplicity != rhs.entries_[i].multiplicity) {
            return false;
        }
    }
    return true;
}

}  // namespace cvm
