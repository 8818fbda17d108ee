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

#include "cvm/matrix.hpp"

#include <utility>

namespace cvm {

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, const FieldDescriptor& field)
    : rows_(rows), cols_(cols), field_(field), entries_(rows * cols, Scalar::zero(field)) {}

DenseMatrix DenseMatrix::identity(std::size_t n, const FieldDescriptor& field) {
    DenseMatrix m(n, n, field);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(field);
    return m;
}

void DenseMatrix::require_square() const {
    if (rows_ != cols_) {
        throw DimensionMismatch("square matrix required, got " + std::to_string(rows_) + "x" +
                                std::to_string(cols_));
    }
}

DenseMatrix DenseMatrix::transpose() const {
    DenseMatrix out(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    }
    return out;
}

std::vector<Scalar> DenseMatrix::apply(std::span<const Scalar> x) const {
    if (x.size() != cols_) {
        throw DimensionMismatch("matrix-vector size mismatch: " + std::to_string(cols_) +
                                " columns vs vector of length " + std::to_string(x.size()));
    }
    std::vector<Scalar> out(rows_, Scalar::zero(field_));
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * x[j];
    }
    return out;
}

DenseMatrix operator*(const DenseMatrix& lhs, const DenseMatrix& rhs) {
    require_same_field(lhs.field_, rhs.field_);
    if (lhs.cols_ != rhs.rows_) {
        throw DimensionMismatch("product size mismatch: " + std::to_string(lhs.rows_) + "x" +
                                std::to_string(lhs.cols_) + " times " + std::to_string(rhs.rows_) +
                                "x" + std::to_string(rhs.cols_));
    }
    DenseMatrix out(lhs.rows_, rhs.cols_, lhs.field_);
    for (std::size_t i = 0; i < lhs.rows_; ++i) {
        for (std::size_t k = 0; k < lhs.cols_; ++k) {
            const Scalar& a = lhs.at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                out.at(i, j) += a * rhs.at(k, j);
            }
        }
    }
    return out;
}

bool operator==(const DenseMatrix& lhs, const DenseMatrix& rhs) noexcept {
    if (lhs.rows_ != rhs.rows_ || lhs.cols_ != rhs.cols_ || !(lhs.field_ == rhs.field_)) {
        return false;
    }
    return lhs.entries_ == rhs.entries_;
}

Scalar DenseMatrix::det_elimination() const {
    require_square();
    DenseMatrix work = *this;
    const std::size_t n = rows_;
    bool negate = false;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && work.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n) return Scalar::zero(field_);
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(work.at(col, j), work.at(pivot, j));
            negate = !negate;
        }
        const Scalar p = work.at(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (work.at(r, col).is_zero()) continue;
            const Scalar factor = work.at(r, col) / p;
            for (std::size_t j = col; j < n; ++j) {
                work.at(r, j) -= factor * work.at(col, j);
            }
        }
    }
    Scalar det = Scalar::one(field_);
    for (std::size_t i = 0; i < n; ++i) det *= work.at(i, i);
    return negate ? -det : det;
}

DenseMatrix DenseMatrix::inverse_elimination() const {
    require_square();
    DenseMatrix work = *this;
    DenseMatrix inv = identity(rows_, field_);
    const std::size_t n = rows_;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && work.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n) {
            throw SingularMatrix("matrix is singular");
        }
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(work.at(col, j), work.at(pivot, j));
                std::swap(inv.at(col, j), inv.at(pivot, j));
            }
        }
        const Scalar p_inv = work.at(col, col).inverse();
        for (std::size_t j = 0; j < n; ++j) {
            work.at(col, j) *= p_inv;
            inv.at(col, j) *= p_inv;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || work.at(r, col).is_zero()) continue;
            const Scalar factor = work.at(r, col);
            for (std::size_t j = 0; j < n; ++j) {
                work.at(r, j) -= factor * work.at(col, j);
                inv.at(r, j) -= factor * inv.at(col, j);
            }
        }
    }
    return inv;
}

namespace {

void require_solve_shape(const DenseMatrix& m, std::span<const Scalar> b) {
    if (m.rows() != m.cols()) {
        throw DimensionMismatch("triangular solve requires a square matrix");
    }
    if (b.size() != m.rows()) {
        throw DimensionMismatch("right-hand side length " + std::to_string(b.size()) +
                                " does not match " + std::to_string(m.rows()));
    }
}

}  // namespace

std::vector<Scalar> solve_lower_triangular(const DenseMatrix& L, std::span<const Scalar> b) {
    require_solve_shape(L, b);
    const std::size_t n = L.rows();
    std::vector<Scalar> x;
    x.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (L.at(i, i).is_zero()) {
            throw ZeroDiagonal("zero diagonal entry at position " + std::to_string(i));
        }
        Scalar acc = b[i];
        for (std::size_t j = 0; j < i; ++j) acc -= L.at(i, j) * x[j];
        x.push_back(acc / L.at(i, i));
    }
    return x;
}

std::vector<Scalar> solve_upper_triangular(const DenseMatrix& U, std::span<const Scalar> b) {
    require_solve_shape(U, b);
    const std::size_t n = U.rows();
    std::vector<Scalar> x(n, Scalar::zero(U.field()));
    for (std::size_t ip = n; ip > 0; --ip) {
        const std::size_t i = ip - 1;
        if (U.at(i, i).is_zero()) {
            throw ZeroDiagonal("zero diagonal entry at position " + std::to_string(i));
        }
        Scalar acc = b[i];
        for (std::size_t j = i + 1; j < n; ++j) acc -= U.at(i, j) * x[j];
        x[i] = acc / U.at(i, i);
    }
    return x;
}

}  // namespace cvm
