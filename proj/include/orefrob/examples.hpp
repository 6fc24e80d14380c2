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

#ifndef OREFROB_EXAMPLES_HPP
#define OREFROB_EXAMPLES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "orefrob/builders.hpp"
#include "orefrob/ore.hpp"

namespace orefrob {

/// F_8 = F_2[a]/(a^3 + a^2 + 1) with the self-dual normal basis {a, a^2, a^4}.
FieldBasis f8_normal_basis();

/**
 * M_2(F_8) over F_2 with entrywise Frobenius and delta(X) = M X - sigma(X) M,
 * M = diag(0, a). Basis index = 4 l + (2 s + t) for a^(2^l) E_(s+1)(t+1).
 */
OreExtension paper_counterexample();

/// sum_i a^(2^i) e0 (x) a^(2^i) e0 + a^(2^i) e2 (x) a^(2^i) e1 in the basis above.
TensorSquareElement paper_separability_element();

/**
 * F_(p^n) over F_p with sigma = Frobenius and
 * delta(b) = (sigma(b) - b) alpha / (sigma(alpha) - alpha) for a normal element alpha.
 * Requires n >= 2.
 */
OreExtension semi_not_frobenius(std::uint32_t p, std::uint32_t n);

/// Names accepted by the `example` command.
const std::vector<std::string>& builtin_example_names();

}  // namespace orefrob

#endif  // OREFROB_EXAMPLES_HPP
