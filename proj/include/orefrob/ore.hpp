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

#ifndef OREFROB_ORE_HPP
#define OREFROB_ORE_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "orefrob/algebra.hpp"

namespace orefrob {

/// sum f_i x^i with coefficients on the left. Empty means zero; otherwise the
/// leading coefficient is nonzero.
struct OrePoly {
    std::vector<AlgebraElement> coeffs;

    std::optional<std::size_t> degree() const noexcept {
        if (coeffs.empty()) return std::nullopt;
        return coeffs.size() - 1;
    }
    bool is_zero() const noexcept { return coeffs.empty(); }

    friend bool operator==(const OrePoly&, const OrePoly&) = default;
};

/// Element of S (x)_R S in the graded model: parts[k] is the A (x)_F A
/// coefficient of x^k, i.e. sum c_ij a_i (x)_R a_j x^k.
struct GradedTensor {
    std::vector<TensorSquareElement> parts;

    friend bool operator==(const GradedTensor&, const GradedTensor&) = default;
};

/**
 * The Ore extension S = A[x; sigma, delta] with x a = sigma(a) x + delta(a).
 *
 * Construction validates sigma as an algebra automorphism and delta as a
 * sigma-derivation (ValidationError otherwise). The N_i^n operators are
 * memoised in a cache shared between copies; concurrent readers are safe.
 */
class OreExtension {
   public:
    OreExtension(Algebra algebra, LinMap sigma, LinMap delta);
    /// delta = delta_{sigma,b}: a -> b a - sigma(a) b.
    static OreExtension with_inner_derivation(Algebra algebra, LinMap sigma, AlgebraElement b);

    const Algebra& algebra() const noexcept { return algebra_; }
    const Field& field() const noexcept { return algebra_.field(); }
    const LinMap& sigma() const noexcept { return sigma_; }
    const LinMap& delta() const noexcept { return delta_; }
    /// The element b when the extension was built from an inner derivation.
    const std::optional<AlgebraElement>& inner_element() const noexcept { return inner_; }

    /// N_i^n, with N_0^0 = id and N_i^{n+1} = sigma N_{i-1}^n + delta N_i^n; zero outside 0 <= i <= n.
    const LinMap& n_operator(std::ptrdiff_t i, std::ptrdiff_t n) const;

    OrePoly normalize(std::vector<AlgebraElement> coeffs) const;
    OrePoly constant(const AlgebraElement& a) const;
    OrePoly monomial(const AlgebraElement& a, std::size_t n) const;
    OrePoly x_power(std::size_t n) const;

    OrePoly add(const OrePoly& f, const OrePoly& g) const;
    OrePoly sub(const OrePoly& f, const OrePoly& g) const;
    /// x . f, by the commutation rule applied to every coefficient.
    OrePoly left_mul_x(const OrePoly& f) const;
    /// Ring product, by repeated application of the commutation rule.
    OrePoly mul(const OrePoly& f, const OrePoly& g) const;
    /// f . a via the coefficient formula sum_{k >= i} f_k N_i^k(a).
    OrePoly right_const_mul(const OrePoly& f, const AlgebraElement& a) const;

   private:
    struct NCache;
    void check(const OrePoly& f) const;

    Algebra algebra_;
    LinMap sigma_;
    LinMap delta_;
    LinMap zero_map_;
    std::optional<AlgebraElement> inner_;
    std::shared_ptr<NCache> cache_;
};

/// S^op = A^op[x; sigma^-1, -delta sigma^-1].
OreExtension opposite_extension(const OreExtension& ext);

GradedTensor graded_zero(const OreExtension& ext, std::size_t max_degree);
/// a . P: the left factor is multiplied by a.
GradedTensor graded_left_mul(const OreExtension& ext, const AlgebraElement& a, const GradedTensor& p);
/// P . a: (a_i (x) g x^j) a = sum_k a_i (x) g N_k^j(a) x^k.
GradedTensor graded_right_mul(const OreExtension& ext, const GradedTensor& p, const AlgebraElement& a);
/// mu(P) = sum_k (sum c_ij a_i a_j) x^k in S.
OrePoly graded_mu(const OreExtension& ext, const GradedTensor& p);

}  // namespace orefrob

#endif  // OREFROB_ORE_HPP
