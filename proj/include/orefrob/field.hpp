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

#ifndef OREFROB_FIELD_HPP
#define OREFROB_FIELD_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace orefrob {

class Field;

/**
 * Element of GF(p^k), stored as the base-p packing of its ascending
 * coefficient vector (coefficient of the generator power i is digit i).
 * The tag identifies the field the element was created in.
 */
class FieldElement {
   public:
    constexpr FieldElement() noexcept = default;

    constexpr std::uint32_t code() const noexcept { return code_; }
    constexpr bool is_zero() const noexcept { return code_ == 0; }

    friend constexpr bool operator==(FieldElement, FieldElement) noexcept = default;

   private:
    friend class Field;
    constexpr FieldElement(std::uint32_t code, std::uint32_t tag) noexcept : code_(code), tag_(tag) {}

    std::uint32_t code_ = 0;
    std::uint32_t tag_ = 0;
};

/**
 * The finite field F_p[t]/(m(t)) for a monic irreducible modulus m of degree k.
 *
 * Field is a cheap handle onto immutable shared state; copies compare equal
 * and elements may be freely mixed between copies. Every binary operation
 * throws StructuralError when handed an element of a different field.
 */
class Field {
   public:
    /// Validates primality of p and irreducibility of the modulus (ascending, monic).
    Field(std::uint32_t p, std::vector<std::uint32_t> modulus);

    /// The prime field F_p, presented by the modulus t.
    static Field prime(std::uint32_t p);

    std::uint32_t characteristic() const noexcept;
    std::uint32_t degree() const noexcept;
    std::uint64_t order() const noexcept;
    const std::vector<std::uint32_t>& modulus() const noexcept;

    FieldElement zero() const noexcept;
    FieldElement one() const noexcept;
    /// The class of t; for the prime field this is -m_0.
    FieldElement generator() const;
    FieldElement from_int(std::int64_t value) const;
    FieldElement from_coeffs(std::span<const std::uint32_t> coeffs) const;
    /// Inverse of code(); throws on codes outside [0, q).
    FieldElement from_code(std::uint64_t code) const;
    std::vector<std::uint32_t> coeffs(FieldElement x) const;

    bool contains(FieldElement x) const noexcept;

    FieldElement add(FieldElement x, FieldElement y) const;
    FieldElement sub(FieldElement x, FieldElement y) const;
    FieldElement neg(FieldElement x) const;
    FieldElement mul(FieldElement x, FieldElement y) const;
    /// Throws DivisionByZero on zero.
    FieldElement inv(FieldElement x) const;
    FieldElement div(FieldElement x, FieldElement y) const;
    FieldElement pow(FieldElement x, std::uint64_t e) const;
    /// x -> x^p.
    FieldElement frobenius(FieldElement x) const;

    /// All q elements in increasing code order.
    std::vector<FieldElement> enumerate() const;

    std::string to_string(FieldElement x) const;

    friend bool operator==(const Field& a, const Field& b) noexcept;

   private:
    struct Impl;
    void check(FieldElement x) const;

    std::shared_ptr<const Impl> impl_;
};

bool is_prime(std::uint64_t n) noexcept;

/// Exhaustive search for a monic factor of degree in [1, deg/2] over F_p.
bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> monic);

/// First monic irreducible polynomial of the given degree over F_p, in increasing code order.
std::vector<std::uint32_t> find_irreducible(std::uint32_t p, std::uint32_t degree);

}  // namespace orefrob

#endif  // OREFROB_FIELD_HPP
