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

#ifndef OREFROB_TESTS_SUPPORT_HPP
#define OREFROB_TESTS_SUPPORT_HPP

#include <random>
#include <string>
#include <vector>

#include "orefrob/builders.hpp"
#include "orefrob/examples.hpp"
#include "orefrob/ore.hpp"

namespace orefrob::testing {

struct NamedExtension {
    std::string name;
    OreExtension ext;
};

inline AlgebraElement random_element(const Algebra& a, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> pick(0, a.field().order() - 1);
    Vector v;
    for (std::size_t i = 0; i < a.dim(); ++i) v.push_back(a.field().from_code(pick(rng)));
    return a.element(v);
}

inline OrePoly random_poly(const OreExtension& ext, std::size_t max_degree, std::mt19937_64& rng) {
    std::vector<AlgebraElement> c;
    const std::size_t deg = rng() % (max_degree + 1);
    for (std::size_t i = 0; i <= deg; ++i) c.push_back(random_element(ext.algebra(), rng));
    return ext.normalize(std::move(c));
}

/// F[t]/(t^m) with sigma = id and delta = d/dt (a derivation when p divides m).
inline OreExtension truncated_with_derivative(const Field& f, std::size_t m) {
    auto alg = truncated_polynomials(f, m);
    Matrix d(f, m, m);
    for (std::size_t i = 1; i < m; ++i) d(i - 1, i) = f.from_int(static_cast<std::int64_t>(i));
    auto id = alg.identity_map();
    return OreExtension(std::move(alg), std::move(id), LinMap{d});
}

/// M_2(F_2), sigma = conjugation by E12 + E21, delta inner with b = E11.
inline OreExtension m2f2_swap() {
    auto alg = matrix_algebra(2, FieldBasis::power(Field::prime(2)));
    const Field& f = alg.field();
    const auto w = alg.element({f.zero(), f.one(), f.one(), f.zero()});
    LinMap sigma{alg.left_mul_matrix(w) * alg.right_mul_matrix(w)};
    auto b = alg.basis(0);
    return OreExtension::with_inner_derivation(std::move(alg), std::move(sigma), std::move(b));
}

/// Upper-triangular 2x2 over F_2, sigma = id, delta inner with b = E12.
inline OreExtension upper_triangular_inner() {
    auto alg = upper_triangular(Field::prime(2), 2);
    auto id = alg.identity_map();
    auto b = alg.basis(1);
    return OreExtension::with_inner_derivation(std::move(alg), std::move(id), std::move(b));
}

/// F_2[t]/(t^2) with sigma = id and the inner derivation of b = t (which is zero).
inline OreExtension dual_numbers_inner() {
    auto alg = truncated_polynomials(Field::prime(2), 2);
    auto id = alg.identity_map();
    auto b = alg.basis(1);
    return OreExtension::with_inner_derivation(std::move(alg), std::move(id), std::move(b));
}

inline std::vector<Vector> all_vectors(const Field& f, std::size_t n) {
    std::vector<Vector> out;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= f.order();
    for (std::uint64_t c = 0; c < total; ++c) {
        Vector v;
        auto t = c;
        for (std::size_t i = 0; i < n; ++i) {
            v.push_back(f.from_code(t % f.order()));
            t /= f.order();
        }
        out.push_back(v);
    }
    return out;
}

// eps is degenerate iff its kernel holds a nonzero left ideal A x (equivalently a right ideal x A).
inline bool has_ideal_in_kernel(const Algebra& a, const LinearFunctional& eps, bool left) {
    for (const auto& v : all_vectors(a.field(), a.dim())) {
        if (is_zero(v)) continue;
        const auto x = a.element(v);
        bool inside = true;
        for (std::size_t i = 0; i < a.dim() && inside; ++i)
            inside = a.evaluate(eps, left ? a.mul(a.basis(i), x) : a.mul(x, a.basis(i))).is_zero();
        if (inside) return true;
    }
    return false;
}

inline Algebra f2_times_f2() {
    const Field f = Field::prime(2);
    std::vector<FieldElement> c(8, f.zero());
    c[0] = f.one();
    c[7] = f.one();
    return Algebra(f, 2, c, {f.one(), f.one()}, {"e", "e'"});
}

/// Built-in algebras of dimension at most 4 over F_2.
inline std::vector<Algebra> small_f2_algebras() {
    const Field f2 = Field::prime(2);
    return {base_field_algebra(f2),
            truncated_polynomials(f2, 2),
            truncated_polynomials(f2, 3),
            truncated_polynomials(f2, 4),
            upper_triangular(f2, 2),
            matrix_algebra(2, FieldBasis::power(f2)),
            field_as_algebra(FieldBasis::power(Field(2, {1, 1, 1}))),
            field_as_algebra(f8_normal_basis()),
            f2_times_f2()};
}

inline std::vector<NamedExtension> builtin_extensions() {
    std::vector<NamedExtension> out;
    out.push_back({"paper-counterexample", paper_counterexample()});
    out.push_back({"semi-not-frobenius(2,3)", semi_not_frobenius(2, 3)});
    out.push_back({"semi-not-frobenius(3,2)", semi_not_frobenius(3, 2)});
    out.push_back({"semi-not-frobenius(2,4)", semi_not_frobenius(2, 4)});
    out.push_back({"F3[t]/(t^3), d/dt", truncated_with_derivative(Field::prime(3), 3)});
    out.push_back({"F2[t]/(t^2), inner", dual_numbers_inner()});
    out.push_back({"M2(F2), swap", m2f2_swap()});
    out.push_back({"UT2(F2), inner", upper_triangular_inner()});
    return out;
}

}  // namespace orefrob::testing

#endif  // OREFROB_TESTS_SUPPORT_HPP
