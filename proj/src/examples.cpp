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

#include "orefrob/examples.hpp"

#include <array>
#include <optional>

#include "orefrob/error.hpp"

namespace orefrob {

FieldBasis f8_normal_basis() {
    const Field k(2, {1, 0, 1, 1});
    const auto a = k.generator();
    return FieldBasis(k, {a, k.pow(a, 2), k.pow(a, 4)}, {"a", "a^2", "a^4"});
}

OreExtension paper_counterexample() {
    const auto basis = f8_normal_basis();
    const Field& k = basis.extension();
    auto alg = matrix_algebra(2, basis);
    const std::array<FieldElement, 4> m{k.zero(), k.zero(), k.zero(), k.generator()};
    auto b = matrix_element(2, basis, m);
    auto sigma = matrix_entrywise_frobenius(2, basis);
    return OreExtension::with_inner_derivation(std::move(alg), std::move(sigma), std::move(b));
}

TensorSquareElement paper_separability_element() {
    const auto basis = f8_normal_basis();
    const Field& k = basis.extension();
    const auto alg = matrix_algebra(2, basis);
    auto unit_matrix = [&](std::size_t pos, FieldElement c) {
        std::array<FieldElement, 4> e{k.zero(), k.zero(), k.zero(), k.zero()};
        e[pos] = c;
        return matrix_element(2, basis, e);
    };
    TensorSquareElement p = tensor_zero(alg);
    for (std::size_t i = 0; i < 3; ++i) {
        const auto c = basis[i];
        p = tensor_add(p, tensor_pure(alg, unit_matrix(0, c), unit_matrix(0, c)));
        p = tensor_add(p, tensor_pure(alg, unit_matrix(2, c), unit_matrix(1, c)));
    }
    return p;
}

OreExtension semi_not_frobenius(std::uint32_t p, std::uint32_t n) {
    if (n < 2) throw DomainError("semi-not-frobenius needs n >= 2");
    std::optional<FieldBasis> basis;
    if (p == 2 && n == 3) {
        basis = f8_normal_basis();
    } else {
        const Field k(p, find_irreducible(p, n));
        basis = FieldBasis::normal(k, find_normal_element(k));
    }
    const Field& k = basis->extension();
    const auto alpha = (*basis)[0];
    // delta = delta_{sigma,c} with c = -alpha / (sigma(alpha) - alpha)
    const auto c = k.neg(k.div(alpha, k.sub(k.frobenius(alpha), alpha)));
    auto alg = field_as_algebra(*basis);
    auto sigma = field_frobenius_map(*basis);
    AlgebraElement b{basis->coords(c)};
    return OreExtension::with_inner_derivation(std::move(alg), std::move(sigma), std::move(b));
}

const std::vector<std::string>& builtin_example_names() {
    static const std::vector<std::string> names{"paper-counterexample", "semi-not-frobenius"};
    return names;
}

}  // namespace orefrob
