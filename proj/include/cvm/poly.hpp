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

#ifndef CVM_POLY_HPP
#define CVM_POLY_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "field.hpp"

namespace cvm {

/// Dense univariate polynomial over the working field, coefficients stored in
/// ascending degree.  Normal form: no trailing zero coefficients; the zero
/// polynomial is the empty coefficient vector (degree -1).
class Poly {
   public:
    static Poly zero(const FieldDescriptor& field);
    static Poly one(const FieldDescriptor& field);
    static Poly constant(const Scalar& c);

    /// Coefficients c_0,...,c_n ascending; normalizes.  All coefficients must
    /// share the given field.
    static Poly from_coeffs(std::vector<Scalar> coeffs, const FieldDescriptor& field);

    /// Monic product of (x - root)^multiplicity over the given list.
    /// The empty product is the constant 1.
    static Poly from_roots(const std::vector<std::pair<Scalar, unsigned>>& roots,
                           const FieldDescriptor& field);

    const FieldDescriptor& field() const noexcept { return field_; }
    const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

    /// c_i, zero beyond the degree.
    Scalar coeff(std::size_t i) const;

    /// Coefficient vector zero-padded to the given length (>= degree+1).
    std::vector<Scalar> padded_coeffs(std::size_t length) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);

    Poly scale(const Scalar& s) const;

    /// (x - lambda) * p.
    Poly mul_linear(const Scalar& lambda) const;

    /// Hasse derivative of order r: sum_{i>=r} c_i * C(i, r) * x^{i-r}.
    /// Well defined in any characteristic.
    Poly hasse_derivative(unsigned r) const;

    /// Horner evaluation.
    Scalar eval(const Scalar& lambda) const;

    /// Coefficients (a_0,...,a_n) of p in powers of (x - lambda), computed by
    /// repeated synthetic division; a_r equals the order-r Hasse derivative at
    /// lambda.  Empty for the zero polynomial.
    std::vector<Scalar> taylor_at(const Scalar& lambda) const;

    friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
    friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
    friend Poly operator*(const Poly& lhs, const Poly& rhs);
    friend bool operator==(const Poly& lhs, const Poly& rhs) noexcept {
        return lhs.field_ == rhs.field_ && lhs.coeffs_ == rhs.coeffs_;
    }

   private:
    explicit Poly(const FieldDescriptor& field) : field_(field) {}

    void normalize();

    FieldDescriptor field_;
    std::vector<Scalar> coeffs_;
};

}  // namespace cvm

#endif  // CVM_POLY_HPP
