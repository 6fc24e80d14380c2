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

#ifndef OREFROB_DECIDE_HPP
#define OREFROB_DECIDE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orefrob/algebra.hpp"
#include "orefrob/linalg.hpp"
#include "orefrob/ore.hpp"

namespace orefrob {

struct SearchOptions {
    /// Largest q^d a nondegeneracy search may enumerate.
    std::uint64_t max_candidates = std::uint64_t{1} << 20;
};

// Frobenius functionals on A.

/// G_ij = eps(a_i a_j).
Matrix gram_matrix(const Algebra& a, const LinearFunctional& eps);

/// Nondegeneracy of (a, b) -> eps(ab), i.e. no nonzero one-sided ideal in ker eps.
bool is_frobenius_functional(const Algebra& a, const LinearFunctional& eps);

/// All eps with eps sigma = m eps and eps delta = n eps, optionally with eps(1) = 1.
/// Coordinates are the values of eps on the basis. Throws DomainError for m = 0.
AffineSolutionSpace functional_space(const OreExtension& ext, FieldElement m, FieldElement n, bool unit_normalized);

struct FunctionalSearch {
    std::optional<LinearFunctional> witness;
    /// Dimension of the space that was searched.
    std::size_t space_dimension = 0;
    std::uint64_t candidates_checked = 0;
    bool from_hint = false;
};

/**
 * First nondegenerate functional in the span of `span_basis`, enumerating the
 * coordinate tuples (c_1, ..., c_d) lexicographically with c_1 most significant
 * and the field elements of each coordinate in code order. Throws
 * BudgetExceeded when q^d exceeds the cap.
 */
FunctionalSearch search_nondegenerate(const Algebra& a, const std::vector<Vector>& span_basis, const SearchOptions& opts,
                                      const std::string& what);

/// R subset S is Frobenius iff some Frobenius eps has eps sigma = eps and eps delta = 0.
FunctionalSearch decide_frobenius(const OreExtension& ext, const SearchOptions& opts = {});

/// Semi-Frobenius iff A is a Frobenius algebra; tries the algebra's hints first.
FunctionalSearch decide_semi_frobenius(const Algebra& a, const SearchOptions& opts = {});

struct SecondKindWitness {
    FieldElement m;
    FieldElement n;
    LinearFunctional functional;
};

struct SecondKindSearch {
    std::optional<SecondKindWitness> witness;
    std::uint64_t candidates_checked = 0;
};

/// Iterates (m, n) over F* x F in code order and searches each constrained space.
SecondKindSearch decide_second_kind(const OreExtension& ext, const SearchOptions& opts = {});

struct SplitSearch {
    AffineSolutionSpace space;
    /// The particular solution; absent means no lifted certificate.
    std::optional<LinearFunctional> witness;
};

/// xi(1) = 1, xi sigma = xi, xi delta = 0.
SplitSearch decide_split_lift(const OreExtension& ext);

// Separability.

struct SeparabilityCheck {
    bool mu_is_one = false;
    bool casimir = false;
    bool sigma_fixed = false;
    bool delta_killed = false;

    bool base_ok() const noexcept { return mu_is_one && casimir; }
    bool all() const noexcept { return mu_is_one && casimir && sigma_fixed && delta_killed; }
};

SeparabilityCheck verify_separability_element(const OreExtension& ext, const TensorSquareElement& p);

/// Some p with mu(p) = 1 and a p = p a for all a; absence proves A is not separable over F.
std::optional<TensorSquareElement> decide_base_separability(const Algebra& a);

/// Some b with delta = delta_{sigma,b}, preferring the element the extension was built from.
std::optional<AlgebraElement> find_inner_element(const OreExtension& ext);

enum class LiftVerdict { certified, no_certificate, not_separable };

struct SeparabilityLift {
    LiftVerdict verdict = LiftVerdict::no_certificate;
    std::optional<TensorSquareElement> witness;
    std::optional<AlgebraElement> inner_element;
    bool base_separable = false;
};

/**
 * Separability element p of F subset A with sigma(x)(p) = p and delta(x)(p) = 0.
 * If none exists, delta is inner and A is not separable, the verdict is
 * not_separable; otherwise only the certificate is missing.
 */
SeparabilityLift decide_separability_lift(const OreExtension& ext);

/**
 * The affine space of graded P = sum_{k <= max_degree} P_k x^k in S (x)_R S with
 * a P = P a for every basis a and mu(P) = 1. Unknowns are the flattened
 * parts, degree by degree.
 */
AffineSolutionSpace graded_casimir_space(const OreExtension& ext, std::size_t max_degree);
GradedTensor graded_from_vector(const OreExtension& ext, std::size_t max_degree, std::span<const FieldElement> v);

/// p_hat = sum_j (id (x) right multiplication by b^j)(P_j); requires delta = delta_{sigma,b}.
TensorSquareElement descend_separability(const OreExtension& ext, const GradedTensor& p, const AlgebraElement& b);

// The right S-isomorphism S -> S* attached to a Frobenius functional.

/// b_1, ..., b_r with eps(b_j images_i) = [i == j].
std::vector<AlgebraElement> dual_basis_for(const Algebra& a, const LinearFunctional& eps,
                                           std::span<const AlgebraElement> images);

/// Ascending coefficients in F, trailing zeros removed.
using PlainPoly = std::vector<FieldElement>;

/// sum_i eps(h_i) x^i for h = f g.
PlainPoly alpha_apply(const OreExtension& ext, const LinearFunctional& eps, const OrePoly& f, const OrePoly& g);

/// g of degree n with alpha_apply(eps, g, a_j) = [i == j] x^n for every j (i is 0-based).
OrePoly alpha_dual_preimage(const OreExtension& ext, const LinearFunctional& eps, std::size_t n, std::size_t i);

/// Orbits of basis indices when sigma permutes the basis, ordered by smallest member.
std::optional<std::vector<std::vector<std::size_t>>> sigma_orbits(const LinMap& sigma);

// Aggregate report.

enum class Status { yes, no, no_certificate, budget_exceeded };

const char* to_string(Status s) noexcept;
std::optional<Status> status_from_string(const std::string& s) noexcept;

struct Decision {
    Status status = Status::no;
    std::optional<LinearFunctional> functional;
    std::optional<TensorSquareElement> tensor;
    std::optional<FieldElement> m;
    std::optional<FieldElement> n;
    std::optional<std::size_t> space_dimension;
    /// Values of the functional witness on each sigma-orbit of the basis.
    std::optional<Vector> orbit_values;
    std::uint64_t candidates_checked = 0;
    std::string message;

    friend bool operator==(const Decision&, const Decision&) = default;
};

struct CheckSelection {
    bool frobenius = true;
    bool semi = true;
    bool second_kind = true;
    bool split = true;
    bool separable = true;

    static CheckSelection all() { return {}; }
    static CheckSelection none() { return {false, false, false, false, false}; }
};

struct AnalysisReport {
    std::size_t algebra_dim = 0;
    std::uint64_t field_order = 0;
    std::optional<Decision> frobenius;
    std::optional<Decision> semi_frobenius;
    std::optional<Decision> base_frobenius;
    std::optional<Decision> second_kind;
    std::optional<Decision> split;
    std::optional<Decision> separable;
    std::optional<Decision> base_separable;
    std::optional<AlgebraElement> inner_element;
    std::vector<std::string> notes;

    friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

/// Runs the selected deciders; a budget failure in one field does not stop the others.
AnalysisReport analyze(const OreExtension& ext, const CheckSelection& checks = CheckSelection::all(),
                       const SearchOptions& opts = {});

}  // namespace orefrob

#endif  // OREFROB_DECIDE_HPP
