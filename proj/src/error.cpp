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

#include "orefrob/error.hpp"

namespace orefrob {

const char* to_string(ValidationCode code) noexcept {
    switch (code) {
        case ValidationCode::parse: return "parse";
        case ValidationCode::not_prime: return "not-prime";
        case ValidationCode::bad_modulus: return "bad-modulus";
        case ValidationCode::reducible_modulus: return "reducible-modulus";
        case ValidationCode::bad_dimensions: return "bad-dimensions";
        case ValidationCode::associativity: return "associativity";
        case ValidationCode::unit: return "unit";
        case ValidationCode::not_automorphism: return "not-automorphism";
        case ValidationCode::not_derivation: return "not-derivation";
    }
    return "unknown";
}

}  // namespace orefrob
