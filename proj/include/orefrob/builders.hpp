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

#ifndef OREFROB_BUILDERS_HPP
#define OREFROB_BUILDERS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "orefrob/algebra.hpp"

namespace orefrob {

/// An F_p-basis of an extension field K = GF(p^k), with coordinate conversion.
class FieldBasis {
   public:
    /// Throws DomainError if the elements are not linearly independent over F_p.
    FieldBasis(Field extension, std::vector<FieldElement> elements, std::vector<std::string> labels = {});

    /// 1, a, ..., a^(k-1).
    static FieldBasis power(const Field& extension);
    /// alpha, alpha^p, ..., alpha^(p^(k-1)).
    static FieldBasis normal(const Field& extension, FieldElement alpha);

    const Field& extension() const noexcept { return extension_; }
    const Field& prime_field() const noexcept { return prime_; }
    std::size_t size() const noexcept { return elements_.size(); }
    FieldElement operator[](std::size_t i) const { return elements_.at(i); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    /// Coordinates over F_p (as prime-field elements).
    Vector coords(FieldElement x) const;
    FieldElement from_coords(std::span<const FieldElement> c) const;

   private:
    Field extension_;
    Field prime_;
    std::vector<FieldElement> elements_;
    std::vector<std::string> labels_;
    Matrix to_coords_;
};

/// Absolute trace K -> F_p, returned as an element of F_p.
FieldElement field_trace(const FieldBasis& basis, FieldElement x);

/// First element (increasing code order) whose Frobenius conjugates form an F_p-basis.
FieldElement find_normal_element(const Field& extension);

/// A = F as a one-dimensional F-algebra.
Algebra base_field_algebra(const Field& field);

/// K viewed as an F_p-algebra in the given basis; hint: the trace form.
Algebra field_as_algebra(const FieldBasis& basis);

/// The Frobenius automorphism of K as an F_p-linear map in the given basis.
LinMap field_frobenius_map(const FieldBasis& basis);

/**
 * M_n(K) as an F_p-algebra with basis c_i E_st ordered by field-basis index
 * first, then by (s, t) row-major. Hint: the field trace of the matrix trace.
 */
Algebra matrix_algebra(std::size_t n, const FieldBasis& basis);

/// Coordinates of the K-matrix with row-major entries `entries` in matrix_algebra(n, basis).
AlgebraElement matrix_element(std::size_t n, const FieldBasis& basis, std::span<const FieldElement> entries);

/// Entrywise Frobenius on matrix_algebra(n, basis).
LinMap matrix_entrywise_frobenius(std::size_t n, const FieldBasis& basis);

/// F[t]/(t^m) with basis 1, t, ..., t^(m-1); hint: the coefficient of t^(m-1).
Algebra truncated_polynomials(const Field& field, std::size_t m);

/// Upper-triangular n x n matrices over F with basis E_st (s <= t) row-major.
Algebra upper_triangular(const Field& field, std::size_t n);

}  // namespace orefrob

#endif  // OREFROB_BUILDERS_HPP
