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

#ifndef OREFROB_ALGEBRA_HPP
#define OREFROB_ALGEBRA_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "orefrob/field.hpp"
#include "orefrob/linalg.hpp"

namespace orefrob {

/// Coordinates relative to the fixed basis a_1, ..., a_r of the algebra.
struct AlgebraElement {
    Vector coords;

    friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
};

/// An F-linear map A -> A; column j holds the image of a_j.
struct LinMap {
    Matrix matrix;

    AlgebraElement operator()(const AlgebraElement& x) const { return {matrix.apply(x.coords)}; }
    LinMap then(const LinMap& outer) const { return {outer.matrix * matrix}; }

    friend bool operator==(const LinMap&, const LinMap&) = default;
};

/// sum c_ij a_i (x) a_j in A (x)_F A; entry (i, j) of `coeffs` is c_ij.
struct TensorSquareElement {
    Matrix coeffs;

    friend bool operator==(const TensorSquareElement&, const TensorSquareElement&) = default;
};

/// A linear functional A -> F, stored as its values on the basis.
struct LinearFunctional {
    Vector values;

    friend bool operator==(const LinearFunctional&, const LinearFunctional&) = default;
};

/**
 * Finite-dimensional unital associative F-algebra given by structure
 * constants a_i a_j = sum_k c[i][j][k] a_k. The constructor checks
 * associativity on all basis triples and the unit axiom on all basis
 * elements, throwing ValidationError naming the first offending indices.
 */
class Algebra {
   public:
    Algebra(Field field, std::size_t dim, std::vector<FieldElement> structure_constants, Vector unit,
            std::vector<std::string> labels = {});

    const Field& field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return dim_; }
    FieldElement structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
        return constants_[(i * dim_ + j) * dim_ + k];
    }
    const std::vector<FieldElement>& structure_constants() const noexcept { return constants_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    /// Functionals worth trying first when searching for a nondegenerate one
    /// (set by the builders, e.g. the trace form of a matrix algebra).
    const std::vector<LinearFunctional>& functional_hints() const noexcept { return hints_; }
    void set_functional_hints(std::vector<LinearFunctional> hints);

    AlgebraElement zero() const;
    AlgebraElement one() const { return unit_; }
    AlgebraElement basis(std::size_t i) const;
    AlgebraElement element(Vector coords) const;

    AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y) const;
    AlgebraElement sub(const AlgebraElement& x, const AlgebraElement& y) const;
    AlgebraElement neg(const AlgebraElement& x) const;
    AlgebraElement scale(FieldElement c, const AlgebraElement& x) const;
    AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y) const;
    AlgebraElement pow(const AlgebraElement& x, std::size_t e) const;
    bool is_zero(const AlgebraElement& x) const noexcept { return orefrob::is_zero(x.coords); }

    /// Matrix of y -> x y.
    Matrix left_mul_matrix(const AlgebraElement& x) const;
    /// Matrix of y -> y x.
    Matrix right_mul_matrix(const AlgebraElement& x) const;

    LinMap identity_map() const;
    LinMap zero_map() const;
    FieldElement evaluate(const LinearFunctional& eps, const AlgebraElement& x) const;

    std::string format(const AlgebraElement& x) const;

   private:
    void check(const AlgebraElement& x) const;

    Field field_;
    std::size_t dim_;
    std::vector<FieldElement> constants_;
    AlgebraElement unit_;
    std::vector<std::string> labels_;
    std::vector<LinearFunctional> hints_;
};

/// Algebra with multiplication reversed.
Algebra opposite_algebra(const Algebra& a);

struct MapCheck {
    bool ok = true;
    std::string detail;
    /// Every basis pair (i, j) on which the multiplicative rule fails.
    std::vector<std::pair<std::size_t, std::size_t>> failing_pairs;
};

/// Invertible, unital and multiplicative on all basis pairs.
MapCheck validate_automorphism(const Algebra& a, const LinMap& sigma);

/// delta(a_i a_j) = sigma(a_i) delta(a_j) + delta(a_i) a_j on all basis pairs.
MapCheck validate_sigma_derivation(const Algebra& a, const LinMap& delta, const LinMap& sigma);

/// x -> b x - sigma(x) b.
LinMap inner_derivation(const Algebra& a, const LinMap& sigma, const AlgebraElement& b);

// Tensor square A (x)_F A.

TensorSquareElement tensor_zero(const Algebra& a);
TensorSquareElement tensor_pure(const Algebra& a, const AlgebraElement& x, const AlgebraElement& y);
TensorSquareElement tensor_add(const TensorSquareElement& x, const TensorSquareElement& y);
/// Row-major flattening of the r x r coefficient matrix, and back.
Vector tensor_flatten(const TensorSquareElement& p);
TensorSquareElement tensor_unflatten(const Algebra& a, std::span<const FieldElement> v);

/// mu(sum c_ij a_i (x) a_j) = sum c_ij a_i a_j.
AlgebraElement tensor_mu(const Algebra& a, const TensorSquareElement& p);

/// x . p and p . x for the outer bimodule action.
TensorSquareElement tensor_left_mul(const Algebra& a, const AlgebraElement& x, const TensorSquareElement& p);
TensorSquareElement tensor_right_mul(const Algebra& a, const TensorSquareElement& p, const AlgebraElement& x);

enum class TwistKind { sigma, delta };

/// sigma (x) sigma, or sigma (x) delta + delta (x) id.
TensorSquareElement tensor_twist(const TensorSquareElement& p, TwistKind kind, const LinMap& sigma, const LinMap& delta);

/// Entry i is a_i p - p a_i.
std::vector<TensorSquareElement> casimir_defect(const Algebra& a, const TensorSquareElement& p);

}  // namespace orefrob

#endif  // OREFROB_ALGEBRA_HPP
