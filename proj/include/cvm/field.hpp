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

#ifndef CVM_FIELD_HPP
#define CVM_FIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"

namespace cvm {

enum class FieldKind { rationals, prime_field };

/// Runtime description of the working field: the rationals, or GF(p) for a
/// prime p.  Descriptors are small immutable values; scalars carry one and
/// arithmetic between scalars of different descriptors is rejected.
class FieldDescriptor {
   public:
    static FieldDescriptor rationals() noexcept { return FieldDescriptor(FieldKind::rationals, 0); }

    /// The modulus is checked for primality by trial division.
    static FieldDescriptor prime_field(std::uint64_t p);

    FieldKind kind() const noexcept { return kind_; }
    bool is_rationals() const noexcept { return kind_ == FieldKind::rationals; }
    bool is_prime_field() const noexcept { return kind_ == FieldKind::prime_field; }

    std::uint64_t modulus() const;
    std::uint64_t characteristic() const noexcept { return modulus_; }

    std::string name() const;      // "Q" or "GF(p)"
    std::string selector() const;  // "q" or "gf:p"

    friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;

   private:
    FieldDescriptor(FieldKind kind, std::uint64_t modulus) noexcept
        : kind_(kind), modulus_(modulus) {}

    FieldKind kind_;
    std::uint64_t modulus_;  // 0 for the rationals
};

/// An element of the working field, kept in canonical form: rationals in
/// lowest terms with positive denominator, prime-field elements as residues
/// in [0, p) with denominator one.  Equality is structural.
class Scalar {
   public:
    static Scalar zero(const FieldDescriptor& field);
    static Scalar one(const FieldDescriptor& field);
    static Scalar from_integer(long value, const FieldDescriptor& field);
    static Scalar from_integer(const mpz_class& value, const FieldDescriptor& field);

    /// num/den as a field element; in GF(p) this is num * den^{-1}.
    static Scalar from_fraction(const mpz_class& num, const mpz_class& den,
                                const FieldDescriptor& field);

    const FieldDescriptor& field() const noexcept { return field_; }
    const mpq_class& value() const noexcept { return value_; }

    bool is_zero() const noexcept { return sgn(value_) == 0; }
    bool is_one() const noexcept { return value_ == 1; }

    /// True when the canonical form has denominator one (always, in GF(p)).
    bool is_integer() const noexcept { return value_.get_den() == 1; }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);

    Scalar inverse() const;
    Scalar pow(std::uint64_t exponent) const;

    std::string str() const { return value_.get_str(); }

    friend bool operator==(const Scalar& lhs, const Scalar& rhs) noexcept {
        return lhs.field_ == rhs.field_ && lhs.value_ == rhs.value_;
    }

   private:
    Scalar(FieldDescriptor field, mpq_class value) noexcept
        : field_(field), value_(std::move(value)) {}

    void reduce();  // restore canonical form after raw construction

    FieldDescriptor field_;
    mpq_class value_;
};

Scalar operator+(Scalar lhs, const Scalar& rhs);
Scalar operator-(Scalar lhs, const Scalar& rhs);
Scalar operator*(Scalar lhs, const Scalar& rhs);
Scalar operator/(Scalar lhs, const Scalar& rhs);

/// Image in the field of the integer binomial coefficient C(n, k), computed
/// over the integers by Pascal's recurrence and reduced afterward, so that it
/// stays meaningful in positive characteristic.  Zero when k > n.
Scalar binomial(std::uint64_t n, std::uint64_t k, const FieldDescriptor& field);

/// Integer binomial coefficients C(n, 0..n) by Pascal's recurrence.
/// Shared by binomial() and the row-block constructions.
void pascal_row(std::uint64_t n, std::vector<mpz_class>& row);

void require_same_field(const Scalar& a, const Scalar& b);
void require_same_field(const FieldDescriptor& a, const FieldDescriptor& b);

}  // namespace cvm

#endif  // CVM_FIELD_HPP
