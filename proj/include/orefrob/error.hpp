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

#ifndef OREFROB_ERROR_HPP
#define OREFROB_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace orefrob {

/// Mismatched fields, dimensions or contexts.
class StructuralError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

/// An argument outside the domain of an operation (m = 0, non-inner delta, ...).
class DomainError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

class DivisionByZero : public std::domain_error {
   public:
    DivisionByZero() : std::domain_error("division by zero in finite field") {}
};

/// A search space of size q^d larger than the configured candidate cap.
class BudgetExceeded : public std::runtime_error {
   public:
    BudgetExceeded(std::size_t dimension, std::uint64_t cap, const std::string& what)
        : std::runtime_error(what + ": search space dimension " + std::to_string(dimension) +
                             " exceeds the enumeration cap of " + std::to_string(cap) + " candidates"),
          dimension_(dimension) {}

    std::size_t dimension() const noexcept { return dimension_; }

   private:
    std::size_t dimension_;
};

enum class ValidationCode {
    parse,
    not_prime,
    bad_modulus,
    reducible_modulus,
    bad_dimensions,
    associativity,
    unit,
    not_automorphism,
    not_derivation,
};

const char* to_string(ValidationCode code) noexcept;

/// Input data that fails an axiom. The message names the offending basis indices.
class ValidationError : public std::runtime_error {
   public:
    ValidationError(ValidationCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ValidationCode code() const noexcept { return code_; }

   private:
    ValidationCode code_;
};

}  // namespace orefrob

#endif  // OREFROB_ERROR_HPP
