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

#include "orefrob/linalg.hpp"

#include "orefrob/error.hpp"

namespace orefrob {

Vector zero_vector(const Field& f, std::size_t n) { return Vector(n, f.zero()); }

Vector unit_vector(const Field& f, std::size_t n, std::size_t i) {
    Vector v(n, f.zero());
    v.at(i) = f.one();
    return v;
}

Vector add(const Field& f, std::span<const FieldElement> x, std::span<const FieldElement> y) {
    if (x.size() != y.size()) throw StructuralError("vector length mismatch");
    Vector r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = f.add(x[i], y[i]);
    return r;
}

Vector sub(const Field& f, std::span<const FieldElement> x, std::span<const FieldElement> y) {
    if (x.size() != y.size()) throw StructuralError("vector length mismatch");
    Vector r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = f.sub(x[i], y[i]);
    return r;
}

Vector scale(const Field& f, FieldElement c, std::span<const FieldElement> x) {
    Vector r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = f.mul(c, x[i]);
    return r;
}

FieldElement dot(const Field& f, std::span<const FieldElement> x, std::span<const FieldElement> y) {
    if (x.size() != y.size()) throw StructuralError("vector length mismatch");
    FieldElement s = f.zero();
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero() && !y[i].is_zero()) s = f.add(s, f.mul(x[i], y[i]));
    return s;
}

bool is_zero(std::span<const FieldElement> x) noexcept {
    for (auto e : x)
        if (!e.is_zero()) return false;
    return true;
}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

Matrix Matrix::identity(const Field& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
}

Matrix Matrix::from_columns(const Field& field, std::size_t rows, std::span<const Vector> columns) {
    Matrix m(field, rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) throw StructuralError("column length mismatch");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
}

Matrix Matrix::from_rows(const Field& field, std::size_t cols, std::span<const Vector> rows) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw StructuralError("row length mismatch");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Vector Matrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

Vector Matrix::apply(std::span<const FieldElement> x) const {
    if (x.size() != cols_) throw StructuralError("matrix-vector dimension mismatch");
    Vector y(rows_);
    for (std::size_t r = 0; r < rows_; ++r) y[r] = dot(field_, row(r), x);
    return y;
}

Vector Matrix::apply_left(std::span<const FieldElement> x) const {
    if (x.size() != rows_) throw StructuralError("vector-matrix dimension mismatch");
    Vector y(cols_, field_.zero());
    for (std::size_t r = 0; r < rows_; ++r) {
        if (x[r].is_zero()) continue;
        for (std::size_t c = 0; c < cols_; ++c) {
            const auto e = (*this)(r, c);
            if (!e.is_zero()) y[c] = field_.add(y[c], field_.mul(x[r], e));
        }
    }
    return y;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw StructuralError("matrix product dimension mismatch");
    Matrix out(field_, rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const auto a = (*this)(r, k);
            if (a.is_zero()) continue;
            for (std::size_t c = 0; c < rhs.cols_; ++c) {
                const auto b = rhs(k, c);
                if (!b.is_zero()) out(r, c) = field_.add(out(r, c), field_.mul(a, b));
            }
        }
    return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw StructuralError("matrix sum dimension mismatch");
    Matrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.add(data_[i], rhs.data_[i]);
    return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw StructuralError("matrix difference dimension mismatch");
    Matrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.sub(data_[i], rhs.data_[i]);
    return out;
}

Matrix Matrix::scaled(FieldElement c) const {
    Matrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.mul(c, data_[i]);
    return out;
}

void Matrix::append_rows(const Matrix& below) {
    if (below.cols_ != cols_) throw StructuralError("append_rows: column count mismatch");
    if (!(below.field_ == field_)) throw StructuralError("append_rows: field mismatch");
    data_.insert(data_.end(), below.data_.begin(), below.data_.end());
    rows_ += below.rows_;
}

bool Matrix::is_zero() const noexcept { return orefrob::is_zero(data_); }

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

EchelonForm reduced_echelon(Matrix m) {
    const Field f = m.field();
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t prow = 0;
    for (std::size_t c = 0; c < cols && prow < rows; ++c) {
        std::size_t sel = prow;
        while (sel < rows && m(sel, c).is_zero()) ++sel;
        if (sel == rows) continue;
        if (sel != prow)
            for (std::size_t k = 0; k < cols; ++k) std::swap(m(sel, k), m(prow, k));
        const auto inv = f.inv(m(prow, c));
        // Nonzero tail of the pivot row; reused for every eliminated row.
        std::vector<std::size_t> support;
        for (std::size_t k = c; k < cols; ++k) {
            if (!m(prow, k).is_zero()) {
                m(prow, k) = f.mul(m(prow, k), inv);
                support.push_back(k);
            }
        }
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == prow) continue;
            const auto factor = m(r, c);
            if (factor.is_zero()) continue;
            for (auto k : support) m(r, k) = f.sub(m(r, k), f.mul(factor, m(prow, k)));
        }
        pivots.push_back(c);
        ++prow;
    }
    return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return reduced_echelon(m).pivots.size(); }

std::vector<Vector> kernel_basis(const Matrix& m) {
    const Field& f = m.field();
    const auto ech = reduced_echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : ech.pivots) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v(m.cols(), f.zero());
        v[free] = f.one();
        for (std::size_t i = 0; i < ech.pivots.size(); ++i) v[ech.pivots[i]] = f.neg(ech.reduced(i, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

AffineSolutionSpace solve_affine(const Matrix& m, std::span<const FieldElement> b) {
    if (b.size() != m.rows()) throw StructuralError("solve_affine: right-hand side length mismatch");
    const Field& f = m.field();
    Matrix aug(f, m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
        aug(r, m.cols()) = b[r];
    }
    const auto ech = reduced_echelon(std::move(aug));
    AffineSolutionSpace out;
    if (!ech.pivots.empty() && ech.pivots.back() == m.cols()) return out;

    Vector particular(m.cols(), f.zero());
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) particular[ech.pivots[i]] = ech.reduced(i, m.cols());
    out.particular = std::move(particular);

    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : ech.pivots) is_pivot[c] = true;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v(m.cols(), f.zero());
        v[free] = f.one();
        for (std::size_t i = 0; i < ech.pivots.size(); ++i) v[ech.pivots[i]] = f.neg(ech.reduced(i, free));
        out.kernel_basis.push_back(std::move(v));
    }
    return out;
}

bool det_nonzero(const Matrix& m) {
    if (m.rows() != m.cols()) throw StructuralError("det_nonzero: matrix is not square");
    return rank(m) == m.rows();
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw StructuralError("inverse: matrix is not square");
    const std::size_t n = m.rows();
    const Field& f = m.field();
    Matrix aug(f, n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = f.one();
    }
    const auto ech = reduced_echelon(std::move(aug));
    if (ech.pivots.size() < n || ech.pivots[n - 1] != n - 1) return std::nullopt;
    Matrix inv(f, n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = ech.reduced(r, n + c);
    return inv;
}

}  // namespace orefrob
