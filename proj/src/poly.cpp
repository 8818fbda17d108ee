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

#include "cvm/poly.hpp"

#include <algorithm>

namespace cvm {

Poly Poly::zero(const FieldDescriptor& field) { return Poly(field); }

Poly Poly::one(const FieldDescriptor& field) { return constant(Scalar::one(field)); }

Poly Poly::constant(const Scalar& c) {
    Poly p(c.field());
    if (!c.is_zero()) p.coeffs_.push_back(c);
    return p;
}

Poly Poly::from_coeffs(std::vector<Scalar> coeffs, const FieldDescriptor& field) {
    for (const Scalar& c : coeffs) require_same_field(c.field(), field);
    Poly p(field);
    p.coeffs_ = std::move(coeffs);
    p.normalize();
    return p;
}

Poly Poly::from_roots(const std::vector<std::pair<Scalar, unsigned>>& roots,
                      const FieldDescriptor& field) {
    Poly p = one(field);
    for (const auto& [root, multiplicity] : roots) {
        require_same_field(root.field(), field);
        for (unsigned i = 0; i < multiplicity; ++i) p = p.mul_linear(root);
    }
    return p;
}

void Poly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Scalar Poly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Scalar::zero(field_);
}

std::vector<Scalar> Poly::padded_coeffs(std::size_t length) const {
    if (coeffs_.size() > length) {
        throw DegreeTooHigh("degree " + std::to_string(degree()) + " does not fit in length " +
                            std::to_string(length));
    }
    std::vector<Scalar> out = coeffs_;
    out.resize(length, Scalar::zero(field_));
    return out;
}

Poly Poly::operator-() const {
    Poly out(field_);
    out.coeffs_.reserve(coeffs_.size());
    for (const Scalar& c : coeffs_) out.coeffs_.push_back(-c);
    return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
    require_same_field(field_, rhs.field_);
    if (coeffs_.size() < rhs.coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size(), Scalar::zero(field_));
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    require_same_field(field_, rhs.field_);
    if (coeffs_.size() < rhs.coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size(), Scalar::zero(field_));
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
    require_same_field(lhs.field_, rhs.field_);
    if (lhs.is_zero() || rhs.is_zero()) return Poly::zero(lhs.field_);
    Poly out(lhs.field_);
    out.coeffs_.assign(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Scalar::zero(lhs.field_));
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
        }
    }
    out.normalize();
    return out;
}

Poly Poly::scale(const Scalar& s) const {
    require_same_field(field_, s.field());
    Poly out(field_);
    out.coeffs_.reserve(coeffs_.size());
    for (const Scalar& c : coeffs_) out.coeffs_.push_back(c * s);
    out.normalize();
    return out;
}

Poly Poly::mul_linear(const Scalar& lambda) const {
    require_same_field(field_, lambda.field());
    if (is_zero()) return *this;
    Poly out(field_);
    out.coeffs_.assign(coeffs_.size() + 1, Scalar::zero(field_));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        out.coeffs_[i + 1] += coeffs_[i];
        out.coeffs_[i] -= lambda * coeffs_[i];
    }
    out.normalize();
    return out;
}

Poly Poly::hasse_derivative(unsigned r) const {
    Poly out(field_);
    if (coeffs_.size() <= r) return out;
    out.coeffs_.reserve(coeffs_.size() - r);
    // One Pascal pass supplies every C(i, r) for i = r..deg.
    std::vector<mpz_class> row;
    pascal_row(r, row);
    for (std::size_t i = r; i < coeffs_.size(); ++i) {
        out.coeffs_.push_back(coeffs_[i] * Scalar::from_integer(row[r], field_));
        row.emplace_back(0);
        for (std::size_t j = i + 1; j >= 1; --j) row[j] += row[j - 1];
    }
    out.normalize();
    return out;
}

Scalar Poly::eval(const Scalar& lambda) const {
    require_same_field(field_, lambda.field());
    Scalar acc = Scalar::zero(field_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * lambda + *it;
    }
    return acc;
}

std::vector<Scalar> Poly::taylor_at(const Scalar& lambda) const {
    require_same_field(field_, lambda.field());
    std::vector<Scalar> work = coeffs_;
    std::vector<Scalar> out;
    out.reserve(work.size());
    for (std::size_t k = 0; k < work.size(); ++k) {
        // Synthetic division of work[k..] by (x - lambda); the remainder
        // lands in work[k] and the quotient shifts into work[k+1..].
        for (std::size_t i = work.size() - 1; i > k; --i) {
            work[i - 1] += lambda * work[i];
        }
        out.push_back(work[k]);
    }
    return out;
}

}  // namespace cvm
