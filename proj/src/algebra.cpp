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

#include "orefrob/algebra.hpp"

#include <sstream>

#include "orefrob/error.hpp"

namespace orefrob {

namespace {

std::string label_of(const std::vector<std::string>& labels, std::size_t i) {
    return i < labels.size() ? labels[i] : "b" + std::to_string(i);
}

}  // namespace

Algebra::Algebra(Field field, std::size_t dim, std::vector<FieldElement> structure_constants, Vector unit,
                 std::vector<std::string> labels)
    : field_(std::move(field)),
      dim_(dim),
      constants_(std::move(structure_constants)),
      unit_{std::move(unit)},
      labels_(std::move(labels)) {
    if (dim_ == 0) throw ValidationError(ValidationCode::bad_dimensions, "algebra dimension must be positive");
    if (constants_.size() != dim_ * dim_ * dim_)
        throw ValidationError(ValidationCode::bad_dimensions, "expected r^3 = " + std::to_string(dim_ * dim_ * dim_) + " structure constants");
    if (unit_.coords.size() != dim_) throw ValidationError(ValidationCode::bad_dimensions, "unit must have r coordinates");
    if (!labels_.empty() && labels_.size() != dim_) throw ValidationError(ValidationCode::bad_dimensions, "labels must be empty or have r entries");
    for (auto c : constants_)
        if (!field_.contains(c)) throw StructuralError("structure constant outside the base field");
    for (auto c : unit_.coords)
        if (!field_.contains(c)) throw StructuralError("unit coordinate outside the base field");

    for (std::size_t i = 0; i < dim_; ++i) {
        const auto ai = basis(i);
        if (!(mul(unit_, ai) == ai) || !(mul(ai, unit_) == ai))
            throw ValidationError(ValidationCode::unit, "unit axiom fails on basis element " + std::to_string(i) + " (" + label_of(labels_, i) + ")");
    }
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) {
            const auto ij = mul(basis(i), basis(j));
            for (std::size_t k = 0; k < dim_; ++k) {
                const auto jk = mul(basis(j), basis(k));
                if (!(mul(ij, basis(k)) == mul(basis(i), jk)))
                    throw ValidationError(ValidationCode::associativity, "associativity fails on basis triple (" + std::to_string(i) + ", " +
                                                                             std::to_string(j) + ", " + std::to_string(k) + ")");
            }
        }
}

void Algebra::set_functional_hints(std::vector<LinearFunctional> hints) {
    for (const auto& h : hints)
        if (h.values.size() != dim_) throw StructuralError("functional hint has wrong length");
    hints_ = std::move(hints);
}

void Algebra::check(const AlgebraElement& x) const {
    if (x.coords.size() != dim_) throw StructuralError("algebra element has " + std::to_string(x.coords.size()) + " coordinates, expected " + std::to_string(dim_));
}

AlgebraElement Algebra::zero() const { return {zero_vector(field_, dim_)}; }

AlgebraElement Algebra::basis(std::size_t i) const {
    if (i >= dim_) throw StructuralError("basis index out of range");
    return {unit_vector(field_, dim_, i)};
}

AlgebraElement Algebra::element(Vector coords) const {
    AlgebraElement x{std::move(coords)};
    check(x);
    return x;
}

AlgebraElement Algebra::add(const AlgebraElement& x, const AlgebraElement& y) const {
    check(x);
    check(y);
    return {orefrob::add(field_, x.coords, y.coords)};
}

AlgebraElement Algebra::sub(const AlgebraElement& x, const AlgebraElement& y) const {
    check(x);
    check(y);
    return {orefrob::sub(field_, x.coords, y.coords)};
}

AlgebraElement Algebra::neg(const AlgebraElement& x) const { return sub(zero(), x); }

AlgebraElement Algebra::scale(FieldElement c, const AlgebraElement& x) const {
    check(x);
    return {orefrob::scale(field_, c, x.coords)};
}

AlgebraElement Algebra::mul(const AlgebraElement& x, const AlgebraElement& y) const {
    check(x);
    check(y);
    Vector out(dim_, field_.zero());
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x.coords[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (y.coords[j].is_zero()) continue;
            const auto c = field_.mul(x.coords[i], y.coords[j]);
            const FieldElement* row = &constants_[(i * dim_ + j) * dim_];
            for (std::size_t k = 0; k < dim_; ++k)
                if (!row[k].is_zero()) out[k] = field_.add(out[k], field_.mul(c, row[k]));
        }
    }
    return {std::move(out)};
}

AlgebraElement Algebra::pow(const AlgebraElement& x, std::size_t e) const {
    AlgebraElement r = one();
    for (std::size_t i = 0; i < e; ++i) r = mul(r, x);
    return r;
}

Matrix Algebra::left_mul_matrix(const AlgebraElement& x) const {
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < dim_; ++j) cols.push_back(mul(x, basis(j)).coords);
    return Matrix::from_columns(field_, dim_, cols);
}

Matrix Algebra::right_mul_matrix(const AlgebraElement& x) const {
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < dim_; ++j) cols.push_back(mul(basis(j), x).coords);
    return Matrix::from_columns(field_, dim_, cols);
}

LinMap Algebra::identity_map() const { return {Matrix::identity(field_, dim_)}; }
LinMap Algebra::zero_map() const { return {Matrix(field_, dim_, dim_)}; }

FieldElement Algebra::evaluate(const LinearFunctional& eps, const AlgebraElement& x) const {
    check(x);
    if (eps.values.size() != dim_) throw StructuralError("functional has wrong length");
    return dot(field_, eps.values, x.coords);
}

std::string Algebra::format(const AlgebraElement& x) const {
    check(x);
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x.coords[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (!(x.coords[i] == field_.one())) os << '(' << field_.to_string(x.coords[i]) << ")*";
        os << label_of(labels_, i);
    }
    return first ? "0" : os.str();
}

Algebra opposite_algebra(const Algebra& a) {
    const std::size_t r = a.dim();
    std::vector<FieldElement> c(r * r * r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t k = 0; k < r; ++k) c[(i * r + j) * r + k] = a.structure_constant(j, i, k);
    Algebra op(a.field(), r, std::move(c), a.one().coords, a.labels());
    op.set_functional_hints(a.functional_hints());
    return op;
}

MapCheck validate_automorphism(const Algebra& a, const LinMap& sigma) {
    MapCheck res;
    const std::size_t r = a.dim();
    if (sigma.matrix.rows() != r || sigma.matrix.cols() != r) {
        res.ok = false;
        res.detail = "sigma must be an r x r matrix";
        return res;
    }
    if (!det_nonzero(sigma.matrix)) {
        res.ok = false;
        res.detail = "sigma is not invertible";
        return res;
    }
    if (!(sigma(a.one()) == a.one())) {
        res.ok = false;
        res.detail = "sigma(1) != 1";
        return res;
    }
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            const auto lhs = sigma(a.mul(a.basis(i), a.basis(j)));
            const auto rhs = a.mul(sigma(a.basis(i)), sigma(a.basis(j)));
            if (!(lhs == rhs)) res.failing_pairs.emplace_back(i, j);
        }
    if (!res.failing_pairs.empty()) {
        res.ok = false;
        const auto [i, j] = res.failing_pairs.front();
        res.detail = "sigma is not multiplicative on basis pair (" + std::to_string(i) + ", " + std::to_string(j) + ")";
    }
    return res;
}

MapCheck validate_sigma_derivation(const Algebra& a, const LinMap& delta, const LinMap& sigma) {
    MapCheck res;
    const std::size_t r = a.dim();
    if (delta.matrix.rows() != r || delta.matrix.cols() != r) {
        res.ok = false;
        res.detail = "delta must be an r x r matrix";
        return res;
    }
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            const auto ai = a.basis(i);
            const auto aj = a.basis(j);
            const auto lhs = delta(a.mul(ai, aj));
            const auto rhs = a.add(a.mul(sigma(ai), delta(aj)), a.mul(delta(ai), aj));
            if (!(lhs == rhs)) res.failing_pairs.emplace_back(i, j);
        }
    if (!res.failing_pairs.empty()) {
        res.ok = false;
        const auto [i, j] = res.failing_pairs.front();
        res.detail = "twisted Leibniz rule fails on basis pair (" + std::to_string(i) + ", " + std::to_string(j) + ")";
    }
    return res;
}

LinMap inner_derivation(const Algebra& a, const LinMap& sigma, const AlgebraElement& b) {
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < a.dim(); ++j) {
        const auto aj = a.basis(j);
        cols.push_back(a.sub(a.mul(b, aj), a.mul(sigma(aj), b)).coords);
    }
    return {Matrix::from_columns(a.field(), a.dim(), cols)};
}

TensorSquareElement tensor_zero(const Algebra& a) { return {Matrix(a.field(), a.dim(), a.dim())}; }

TensorSquareElement tensor_pure(const Algebra& a, const AlgebraElement& x, const AlgebraElement& y) {
    const Field& f = a.field();
    TensorSquareElement p = tensor_zero(a);
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) p.coeffs(i, j) = f.mul(x.coords.at(i), y.coords.at(j));
    return p;
}

TensorSquareElement tensor_add(const TensorSquareElement& x, const TensorSquareElement& y) { return {x.coeffs + y.coeffs}; }

Vector tensor_flatten(const TensorSquareElement& p) {
    Vector v;
    v.reserve(p.coeffs.rows() * p.coeffs.cols());
    for (std::size_t i = 0; i < p.coeffs.rows(); ++i) {
        const auto row = p.coeffs.row(i);
        v.insert(v.end(), row.begin(), row.end());
    }
    return v;
}

TensorSquareElement tensor_unflatten(const Algebra& a, std::span<const FieldElement> v) {
    const std::size_t r = a.dim();
    if (v.size() != r * r) throw StructuralError("tensor coordinate vector must have r^2 entries");
    TensorSquareElement p = tensor_zero(a);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) p.coeffs(i, j) = v[i * r + j];
    return p;
}

AlgebraElement tensor_mu(const Algebra& a, const TensorSquareElement& p) {
    const Field& f = a.field();
    const std::size_t r = a.dim();
    if (p.coeffs.rows() != r || p.coeffs.cols() != r) throw StructuralError("tensor has wrong dimensions");
    Vector out(r, f.zero());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            const auto c = p.coeffs(i, j);
            if (c.is_zero()) continue;
            for (std::size_t k = 0; k < r; ++k) {
                const auto s = a.structure_constant(i, j, k);
                if (!s.is_zero()) out[k] = f.add(out[k], f.mul(c, s));
            }
        }
    return {std::move(out)};
}

TensorSquareElement tensor_left_mul(const Algebra& a, const AlgebraElement& x, const TensorSquareElement& p) {
    return {a.left_mul_matrix(x) * p.coeffs};
}

TensorSquareElement tensor_right_mul(const Algebra& a, const TensorSquareElement& p, const AlgebraElement& x) {
    return {p.coeffs * a.right_mul_matrix(x).transpose()};
}

TensorSquareElement tensor_twist(const TensorSquareElement& p, TwistKind kind, const LinMap& sigma, const LinMap& delta) {
    const Matrix& s = sigma.matrix;
    if (kind == TwistKind::sigma) return {s * p.coeffs * s.transpose()};
    const Matrix& d = delta.matrix;
    return {s * p.coeffs * d.transpose() + d * p.coeffs};
}

std::vector<TensorSquareElement> casimir_defect(const Algebra& a, const TensorSquareElement& p) {
    std::vector<TensorSquareElement> out;
    out.reserve(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const auto ai = a.basis(i);
        out.push_back({tensor_left_mul(a, ai, p).coeffs - tensor_right_mul(a, p, ai).coeffs});
    }
    return out;
}

}  // namespace orefrob
