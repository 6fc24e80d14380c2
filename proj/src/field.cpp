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

#include "orefrob/field.hpp"

#include <limits>
#include <sstream>

#include "orefrob/error.hpp"

namespace orefrob {

struct Field::Impl {
    std::uint32_t p = 0;
    std::uint32_t k = 0;
    std::vector<std::uint32_t> modulus;
    std::uint64_t q = 0;
    std::uint32_t tag = 0;
    std::vector<std::uint64_t> place;  // p^i

    std::vector<std::uint32_t> unpack(std::uint32_t code) const {
        std::vector<std::uint32_t> d(k);
        for (std::uint32_t i = 0; i < k; ++i) {
            d[i] = code % p;
            code /= p;
        }
        return d;
    }

    std::uint32_t pack(std::span<const std::uint32_t> d) const {
        std::uint64_t code = 0;
        for (std::uint32_t i = 0; i < k; ++i) code += d[i] * place[i];
        return static_cast<std::uint32_t>(code);
    }
};

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

// Remainder of a by the monic polynomial m over F_p; both ascending.
std::vector<std::uint32_t> poly_rem(std::uint32_t p, std::vector<std::uint32_t> a,
                                    std::span<const std::uint32_t> m) {
    const std::size_t dm = m.size() - 1;
    for (std::size_t d = a.size(); d-- > dm;) {
        const std::uint64_t c = a[d];
        if (c == 0) continue;
        for (std::size_t i = 0; i <= dm; ++i) {
            const std::uint64_t sub = (c * m[i]) % p;
            a[d - dm + i] = static_cast<std::uint32_t>((a[d - dm + i] + p - sub) % p);
        }
    }
    a.resize(std::min(a.size(), dm));
    return a;
}

bool all_zero(std::span<const std::uint32_t> v) {
    for (auto c : v)
        if (c != 0) return false;
    return true;
}

}  // namespace

bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> monic) {
    if (monic.size() < 2 || monic.back() != 1) throw ValidationError(ValidationCode::bad_modulus, "modulus must be monic of degree >= 1");
    const std::size_t k = monic.size() - 1;
    std::vector<std::uint32_t> a(monic.begin(), monic.end());
    for (std::size_t d = 1; d <= k / 2; ++d) {
        // Every monic candidate of degree d, lower coefficients enumerated as base-p digits.
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        std::vector<std::uint32_t> cand(d + 1, 0);
        cand[d] = 1;
        for (std::uint64_t c = 0; c < count; ++c) {
            std::uint64_t rest = c;
            for (std::size_t i = 0; i < d; ++i) {
                cand[i] = static_cast<std::uint32_t>(rest % p);
                rest /= p;
            }
            if (all_zero(poly_rem(p, a, cand))) return false;
        }
    }
    return true;
}

std::vector<std::uint32_t> find_irreducible(std::uint32_t p, std::uint32_t degree) {
    if (!is_prime(p) || degree == 0) throw DomainError("find_irreducible: need prime p and degree >= 1");
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < degree; ++i) count *= p;
    std::vector<std::uint32_t> m(degree + 1, 0);
    m[degree] = 1;
    for (std::uint64_t c = 0; c < count; ++c) {
        std::uint64_t rest = c;
        for (std::uint32_t i = 0; i < degree; ++i) {
            m[i] = static_cast<std::uint32_t>(rest % p);
            rest /= p;
        }
        if (is_irreducible(p, m)) return m;
    }
    throw DomainError("no irreducible polynomial found");  // unreachable for prime p
}

Field::Field(std::uint32_t p, std::vector<std::uint32_t> modulus) {
    if (!is_prime(p) || p > (1u << 15)) throw ValidationError(ValidationCode::not_prime, "field characteristic " + std::to_string(p) + " is not a supported prime");
    if (modulus.size() < 2) throw ValidationError(ValidationCode::bad_modulus, "modulus must have degree >= 1");
    for (auto c : modulus)
        if (c >= p) throw ValidationError(ValidationCode::bad_modulus, "modulus coefficient out of range [0, p)");
    if (modulus.back() != 1) throw ValidationError(ValidationCode::bad_modulus, "modulus must be monic");

    auto impl = std::make_shared<Impl>();
    impl->p = p;
    impl->k = static_cast<std::uint32_t>(modulus.size() - 1);
    impl->q = 1;
    for (std::uint32_t i = 0; i < impl->k; ++i) {
        impl->place.push_back(impl->q);
        impl->q *= p;
        if (impl->q > (1ull << 31)) throw ValidationError(ValidationCode::bad_modulus, "field order exceeds 2^31");
    }
    if (!is_irreducible(p, modulus)) {
        std::ostringstream os;
        os << "modulus [";
        for (std::size_t i = 0; i < modulus.size(); ++i) os << (i ? "," : "") << modulus[i];
        os << "] is reducible over F_" << p;
        throw ValidationError(ValidationCode::reducible_modulus, os.str());
    }
    impl->modulus = std::move(modulus);

    // FNV-1a over the presentation.
    std::uint32_t h = 2166136261u;
    auto mix = [&h](std::uint32_t v) {
        for (int b = 0; b < 4; ++b) {
            h ^= (v >> (8 * b)) & 0xffu;
            h *= 16777619u;
        }
    };
    mix(p);
    for (auto c : impl->modulus) mix(c);
    impl->tag = h == 0 ? 1 : h;
    impl_ = std::move(impl);
}

Field Field::prime(std::uint32_t p) { return Field(p, {0, 1}); }

std::uint32_t Field::characteristic() const noexcept { return impl_->p; }
std::uint32_t Field::degree() const noexcept { return impl_->k; }
std::uint64_t Field::order() const noexcept { return impl_->q; }
const std::vector<std::uint32_t>& Field::modulus() const noexcept { return impl_->modulus; }

FieldElement Field::zero() const noexcept { return {0, impl_->tag}; }
FieldElement Field::one() const noexcept { return {1, impl_->tag}; }

FieldElement Field::generator() const {
    if (impl_->k > 1) return {static_cast<std::uint32_t>(impl_->p), impl_->tag};
    return neg(from_int(impl_->modulus[0]));
}

FieldElement Field::from_int(std::int64_t value) const {
    const auto p = static_cast<std::int64_t>(impl_->p);
    const auto r = ((value % p) + p) % p;
    return {static_cast<std::uint32_t>(r), impl_->tag};
}

FieldElement Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
    if (coeffs.size() != impl_->k) throw StructuralError("field element needs exactly " + std::to_string(impl_->k) + " coefficients");
    for (auto c : coeffs)
        if (c >= impl_->p) throw StructuralError("field element coefficient out of range [0, p)");
    return {impl_->pack(coeffs), impl_->tag};
}

FieldElement Field::from_code(std::uint64_t code) const {
    if (code >= impl_->q) throw StructuralError("field element code out of range");
    return {static_cast<std::uint32_t>(code), impl_->tag};
}

std::vector<std::uint32_t> Field::coeffs(FieldElement x) const {
    check(x);
    return impl_->unpack(x.code_);
}

bool Field::contains(FieldElement x) const noexcept { return x.tag_ == impl_->tag && x.code_ < impl_->q; }

void Field::check(FieldElement x) const {
    if (x.tag_ != impl_->tag) throw StructuralError("field element belongs to a different field");
}

FieldElement Field::add(FieldElement x, FieldElement y) const {
    check(x);
    check(y);
    const auto& f = *impl_;
    if (f.p == 2) return {x.code_ ^ y.code_, f.tag};
    if (f.k == 1) return {(x.code_ + y.code_) % f.p, f.tag};
    auto a = f.unpack(x.code_);
    auto b = f.unpack(y.code_);
    for (std::uint32_t i = 0; i < f.k; ++i) a[i] = (a[i] + b[i]) % f.p;
    return {f.pack(a), f.tag};
}

FieldElement Field::neg(FieldElement x) const {
    check(x);
    const auto& f = *impl_;
    if (f.p == 2) return x;
    if (f.k == 1) return {(f.p - x.code_) % f.p, f.tag};
    auto a = f.unpack(x.code_);
    for (auto& c : a) c = (f.p - c) % f.p;
    return {f.pack(a), f.tag};
}

FieldElement Field::sub(FieldElement x, FieldElement y) const { return add(x, neg(y)); }

FieldElement Field::mul(FieldElement x, FieldElement y) const {
    check(x);
    check(y);
    const auto& f = *impl_;
    if (f.k == 1) {
        if (f.p == 2) return {x.code_ & y.code_, f.tag};
        return {static_cast<std::uint32_t>((std::uint64_t{x.code_} * y.code_) % f.p), f.tag};
    }
    if (x.code_ == 0 || y.code_ == 0) return zero();
    const auto a = f.unpack(x.code_);
    const auto b = f.unpack(y.code_);
    std::vector<std::uint32_t> prod(2 * f.k - 1, 0);
    for (std::uint32_t i = 0; i < f.k; ++i) {
        if (a[i] == 0) continue;
        for (std::uint32_t j = 0; j < f.k; ++j)
            prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{a[i]} * b[j]) % f.p);
    }
    const auto r = poly_rem(f.p, std::move(prod), f.modulus);
    return {f.pack(r), f.tag};
}

FieldElement Field::pow(FieldElement x, std::uint64_t e) const {
    check(x);
    FieldElement result = one();
    while (e > 0) {
        if (e & 1) result = mul(result, x);
        x = mul(x, x);
        e >>= 1;
    }
    return result;
}

FieldElement Field::inv(FieldElement x) const {
    check(x);
    if (x.is_zero()) throw DivisionByZero();
    return pow(x, impl_->q - 2);
}

FieldElement Field::div(FieldElement x, FieldElement y) const { return mul(x, inv(y)); }

FieldElement Field::frobenius(FieldElement x) const { return pow(x, impl_->p); }

std::vector<FieldElement> Field::enumerate() const {
    std::vector<FieldElement> all;
    all.reserve(impl_->q);
    for (std::uint64_t c = 0; c < impl_->q; ++c) all.push_back({static_cast<std::uint32_t>(c), impl_->tag});
    return all;
}

std::string Field::to_string(FieldElement x) const {
    const auto c = coeffs(x);
    if (impl_->k == 1) return std::to_string(c[0]);
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        if (!first) os << '+';
        first = false;
        if (i == 0) {
            os << c[i];
            continue;
        }
        if (c[i] != 1) os << c[i] << '*';
        os << 'a';
        if (i > 1) os << '^' << i;
    }
    return first ? "0" : os.str();
}

bool operator==(const Field& a, const Field& b) noexcept {
    return a.impl_ == b.impl_ || (a.impl_->p == b.impl_->p && a.impl_->modulus == b.impl_->modulus);
}

}  // namespace orefrob
