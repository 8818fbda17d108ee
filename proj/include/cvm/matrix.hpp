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

#ifndef CVM_MATRIX_HPP
#define CVM_MATRIX_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "field.hpp"

namespace cvm {

/// Exact dense row-major matrix over the working field.  The generic
/// substrate (products, elimination, triangular solves) that the structured
/// constructions are tested against.
class DenseMatrix {
   public:
    DenseMatrix(std::size_t rows, std::size_t cols, const FieldDescriptor& field);

    static DenseMatrix identity(std::size_t n, const FieldDescriptor& field);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const FieldDescriptor& field() const noexcept { return field_; }

    Scalar& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    DenseMatrix transpose() const;

    /// Matrix-vector product.
    std::vector<Scalar> apply(std::span<const Scalar> x) const;

    /// Gaussian elimination with first-nonzero-pivot row swaps; zero for a
    /// singular matrix, with the swap sign tracked.
    Scalar det_elimination() const;

    /// Gauss-Jordan on [A | I]; throws SingularMatrix when no pivot exists.
    DenseMatrix inverse_elimination() const;

    friend DenseMatrix operator*(const DenseMatrix& lhs, const DenseMatrix& rhs);
    friend bool operator==(const DenseMatrix& lhs, const DenseMatrix& rhs) noexcept;

   private:
    void require_square() const;

    std::size_t rows_;
    std::size_t cols_;
    FieldDescriptor field_;
    std::vector<Scalar> entries_;
};

/// Forward substitution; only the lower triangle of L is read.
std::vector<Scalar> solve_lower_triangular(const DenseMatrix& L, std::span<const Scalar> b);

/// Back substitution; only the upper triangle of U is read.
std::vector<Scalar> solve_upper_triangular(const DenseMatrix& U, std::span<const Scalar> b);

}  // namespace cvm

#endif  // CVM_MATRIX_HPP
