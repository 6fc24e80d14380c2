/*
   Copyright 2026 The orefrob Authors

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

#ifndef OREFROB_LINALG_HPP
#define OREFROB_LINALG_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "orefrob/field.hpp"

namespace orefrob {

using Vector = std::vector<FieldElement>;

Vector zero_vector(const Field& f, std::size_t n);
Vector unit_vector(const Field& f, std::size_t n, std::size_t i);
Vector add(const Field& f, std::span<const FieldElement> x, std::span<const FieldElement> y);
Vector sub(const Field& f, std::span<const FieldElement> x, std::span<const FieldElement> y);
Vector scale(const Field& f, FieldElement c, std::span<const FieldElement> x);
FieldElement dot(const Field& f, std::span<const FieldElement> x, std::span<const FieldElement> y);
bool is_zero(std::span<const FieldElement> x) noexcept;

/// Dense row-major matrix over a finite field.
class Matrix {
   public:
    Matrix(Field field, std::size_t rows, std::size_t cols);
    static Matrix identity(const Field& field, std::size_t n);
    /// Matrix whose columns are the given vectors (all of length `rows`).
    static Matrix from_columns(const Field& field, std::size_t rows, std::span<const Vector> columns);
    static Matrix from_rows(const Field& field, std::size_t cols, std::span<const Vector> rows);

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    FieldElement& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    FieldElement operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const FieldElement> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    Vector column(std::size_t c) const;

    Vector apply(std::span<const FieldElement> x) const;
    /// x^T M, i.e. the row vector x times this matrix.
    Vector apply_left(std::span<const FieldElement> x) const;

    Matrix transpose() const;
    Matrix operator*(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix scaled(FieldElement c) const;

    /// Appends the rows of `below` (same column count).
    void append_rows(const Matrix& below);

    bool is_zero() const noexcept;

    friend bool operator==(const Matrix& a, const Matrix& b);

   private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<FieldElement> data_;
};

struct EchelonForm {
    Matrix reduced;
    /// Pivot column of each nonzero row, strictly increasing.
    std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination, first nonzero entry as pivot.
EchelonForm reduced_echelon(Matrix m);

std::size_t rank(const Matrix& m);

/// Basis of {v : Mv = 0}: one vector per free column in ascending order,
/// with a 1 in that column and zeros in the other free columns.
std::vector<Vector> kernel_basis(const Matrix& m);

struct AffineSolutionSpace {
    std::optional<Vector> particular;
    std::vector<Vector> kernel_basis;

    bool feasible() const noexcept { return particular.has_value(); }
    std::size_t dimension() const noexcept { return kernel_basis.size(); }
};

/// All solutions of Mv = b. Free variables are zero in the particular solution.
AffineSolutionSpace solve_affine(const Matrix& m, std::span<const FieldElement> b);

/// Throws StructuralError for non-square input.
bool det_nonzero(const Matrix& m);

std::optional<Matrix> inverse(const Matrix& m);

}  // namespace orefrob

#endif  // OREFROB_LINALG_HPP
