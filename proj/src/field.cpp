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

#include "cvm/field.hpp"

#include <utility>
#include <vector>

namespace cvm {

namespace {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t i = 3; i <= n / i; i += 2) {
        if (n % i == 0) return false;
    }
    return true;
}

}  // namespace

FieldDescriptor FieldDescriptor::prime_field(std::uint64_t p) {
    if (!is_prime_u64(p)) {
        throw InvalidModulus("modulus is not prime: " + std::to_string(p));
    }
    return FieldDescriptor(FieldKind::prime_field, p);
}

std::uint64_t FieldDescriptor::modulus() const {
    if (!is_prime_field()) {
        throw PreconditionViolation("modulus requested from the rational field");
    }
    return modulus_;
}

std::string FieldDescriptor::name() const {
    return is_rationals() ? "Q" : "GF(" + std::to_string(modulus_) + ")";
}

std::string FieldDescriptor::selector() const {
    return is_rationals() ? "q" : "gf:" + std::to_string(modulus_);
}

void require_same_field(const FieldDescriptor& a, const FieldDescriptor& b) {
    if (!(a == b)) {
        throw FieldMismatch("field mismatch: " + a.name() + " vs " + b.name());
    }
}

void require_same_field(const Scalar& a, const Scalar& b) {
    require_same_field(a.field(), b.field());
}

Scalar Scalar::zero(const FieldDescriptor& field) { return Scalar(field, mpq_class(0)); }

Scalar Scalar::one(const FieldDescriptor& field) { return Scalar(field, mpq_class(1)); }

Scalar Scalar::from_integer(long value, const FieldDescriptor& field) {
    Scalar s(field, mpq_class(value));
    s.reduce();
    return s;
}

Scalar Scalar::from_integer(const mpz_class& value, const FieldDescriptor& field) {
    Scalar s(field, mpq_class(value));
    s.reduce();
    return s;
}

Scalar Scalar::from_fraction(const mpz_class& num, const mpz_class& den,
                             const FieldDescriptor& field) {
    if (den == 0) {
        throw DivisionByZero("zero denominator");
    }
    if (field.is_prime_field()) {
        return from_integer(num, field) / from_integer(den, field);
    }
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(field, std::move(q));
}

void Scalar::reduce() {
    if (field_.is_prime_field()) {
        const mpz_class p(static_cast<unsigned long>(field_.characteristic()));
        mpz_class r = value_.get_num() % p;  // truncated toward zero
        if (r < 0) r += p;
        value_ = mpq_class(r);
    } else {
        value_.canonicalize();
    }
}

Scalar Scalar::operator-() const {
    Scalar s(field_, -value_);
    if (field_.is_prime_field()) s.reduce();
    return s;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    require_same_field(*this, rhs);
    value_ += rhs.value_;
    if (field_.is_prime_field()) reduce();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    require_same_field(*this, rhs);
    value_ -= rhs.value_;
    if (field_.is_prime_field()) reduce();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
    require_same_field(*this, rhs);
    value_ *= rhs.value_;
    if (field_.is_prime_field()) reduce();
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
    require_same_field(*this, rhs);
    if (rhs.is_zero()) {
        throw DivisionByZero("division by zero in " + field_.name());
    }
    if (field_.is_prime_field()) {
        return *this *= rhs.inverse();
    }
    value_ /= rhs.value_;
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) {
        throw DivisionByZero("zero has no inverse in " + field_.name());
    }
    if (field_.is_rationals()) {
        return Scalar(field_, 1 / value_);
    }
    const mpz_class p(static_cast<unsigned long>(field_.characteristic()));
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), value_.get_num().get_mpz_t(), p.get_mpz_t()) == 0) {
        throw DivisionByZero("no inverse modulo " + p.get_str());
    }
    return Scalar(field_, mpq_class(inv));
}

Scalar Scalar::pow(std::uint64_t exponent) const {
    Scalar result = one(field_);
    Scalar base = *this;
    while (exponent > 0) {
        if (exponent & 1) result *= base;
        base *= base;
        exponent >>= 1;
    }
    return result;
}

Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

void pascal_row(std::uint64_t n, std::vector<mpz_class>& row) {
    row.assign(1, mpz_class(1));
    for (std::uint64_t i = 1; i <= n; ++i) {
        row.emplace_back(0);
        for (std::size_t j = i; j >= 1; --j) {
            row[j] += row[j - 1];
        }
    }
}

Scalar binomial(std::uint64_t n, std::uint64_t k, const FieldDescriptor& field) {
    if (k > n) return Scalar::zero(field);
    std::vector<mpz_class> row;
    pascal_row(n, row);
    return Scalar::from_integer(row[k], field);
}

}  // namespace cvm
