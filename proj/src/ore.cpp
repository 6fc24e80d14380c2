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

#include "orefrob/ore.hpp"

#include <deque>
#include <mutex>

#include "orefrob/error.hpp"

namespace orefrob {

struct OreExtension::NCache {
    std::mutex mutex;
    // rows[n][i] = N_i^n; deque keeps references stable while it grows.
    std::deque<std::vector<LinMap>> rows;
};

OreExtension::OreExtension(Algebra algebra, LinMap sigma, LinMap delta)
    : algebra_(std::move(algebra)),
      sigma_(std::move(sigma)),
      delta_(std::move(delta)),
      zero_map_(algebra_.zero_map()),
      cache_(std::make_shared<NCache>()) {
    if (const auto chk = validate_automorphism(algebra_, sigma_); !chk.ok)
        throw ValidationError(ValidationCode::not_automorphism, chk.detail);
    if (const auto chk = validate_sigma_derivation(algebra_, delta_, sigma_); !chk.ok)
        throw ValidationError(ValidationCode::not_derivation, chk.detail);
}

OreExtension OreExtension::with_inner_derivation(Algebra algebra, LinMap sigma, AlgebraElement b) {
    if (b.coords.size() != algebra.dim()) throw StructuralError("inner derivation element has wrong length");
    if (const auto chk = validate_automorphism(algebra, sigma); !chk.ok)
        throw ValidationError(ValidationCode::not_automorphism, chk.detail);
    LinMap delta = inner_derivation(algebra, sigma, b);
    OreExtension ext(std::move(algebra), std::move(sigma), std::move(delta));
    ext.inner_ = std::move(b);
    return ext;
}

const LinMap& OreExtension::n_operator(std::ptrdiff_t i, std::ptrdiff_t n) const {
    if (n < 0 || i < 0 || i > n) return zero_map_;
    std::lock_guard lock(cache_->mutex);
    auto& rows = cache_->rows;
    if (rows.empty()) rows.push_back({algebra_.identity_map()});
    while (rows.size() <= static_cast<std::size_t>(n)) {
        const auto& prev = rows.back();
        const std::size_t m = prev.size() - 1;  // degree of prev row
        std::vector<LinMap> next;
        next.reserve(m + 2);
        for (std::size_t k = 0; k <= m + 1; ++k) {
            Matrix acc(field(), algebra_.dim(), algebra_.dim());
            if (k >= 1) acc = acc + sigma_.matrix * prev[k - 1].matrix;
            if (k <= m) acc = acc + delta_.matrix * prev[k].matrix;
            next.push_back({std::move(acc)});
        }
        rows.push_back(std::move(next));
    }
    return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];
}

void OreExtension::check(const OrePoly& f) const {
    for (const auto& c : f.coeffs)
        if (c.coords.size() != algebra_.dim()) throw StructuralError("Ore polynomial coefficient has wrong dimension for this extension");
}

OrePoly OreExtension::normalize(std::vector<AlgebraElement> coeffs) const {
    while (!coeffs.empty() && algebra_.is_zero(coeffs.back())) coeffs.pop_back();
    OrePoly f{std::move(coeffs)};
    check(f);
    return f;
}

OrePoly OreExtension::constant(const AlgebraElement& a) const { return normalize({a}); }

OrePoly OreExtension::monomial(const AlgebraElement& a, std::size_t n) const {
    std::vector<AlgebraElement> c(n + 1, algebra_.zero());
    c[n] = a;
    return normalize(std::move(c));
}

OrePoly OreExtension::x_power(std::size_t n) const { return monomial(algebra_.one(), n); }

OrePoly OreExtension::add(const OrePoly& f, const OrePoly& g) const {
    check(f);
    check(g);
    std::vector<AlgebraElement> c(std::max(f.coeffs.size(), g.coeffs.size()), algebra_.zero());
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) c[i] = algebra_.add(c[i], f.coeffs[i]);
    for (std::size_t i = 0; i < g.coeffs.size(); ++i) c[i] = algebra_.add(c[i], g.coeffs[i]);
    return normalize(std::move(c));
}

OrePoly OreExtension::sub(const OrePoly& f, const OrePoly& g) const {
    check(g);
    std::vector<AlgebraElement> neg;
    for (const auto& c : g.coeffs) neg.push_back(algebra_.neg(c));
    return add(f, OrePoly{std::move(neg)});
}

OrePoly OreExtension::left_mul_x(const OrePoly& f) const {
    check(f);
    if (f.is_zero()) return f;
    std::vector<AlgebraElement> c(f.coeffs.size() + 1, algebra_.zero());
    for (std::size_t m = 0; m < f.coeffs.size(); ++m) {
        c[m + 1] = algebra_.add(c[m + 1], sigma_(f.coeffs[m]));
        c[m] = algebra_.add(c[m], delta_(f.coeffs[m]));
    }
    return normalize(std::move(c));
}

OrePoly OreExtension::mul(const OrePoly& f, const OrePoly& g) const {
    check(f);
    check(g);
    if (f.is_zero() || g.is_zero()) return {};
    std::vector<AlgebraElement> out(f.coeffs.size() + g.coeffs.size() - 1, algebra_.zero());
    for (std::size_t j = 0; j < g.coeffs.size(); ++j) {
        if (algebra_.is_zero(g.coeffs[j])) continue;
        // t = x^i g_j as i runs over the degrees of f
        OrePoly t = constant(g.coeffs[j]);
        for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
            if (i > 0) t = left_mul_x(t);
            if (algebra_.is_zero(f.coeffs[i])) continue;
            for (std::size_t m = 0; m < t.coeffs.size(); ++m)
                out[m + j] = algebra_.add(out[m + j], algebra_.mul(f.coeffs[i], t.coeffs[m]));
        }
    }
    return normalize(std::move(out));
}

OrePoly OreExtension::right_const_mul(const OrePoly& f, const AlgebraElement& a) const {
    check(f);
    if (f.is_zero()) return f;
    const std::size_t n = f.coeffs.size() - 1;
    std::vector<AlgebraElement> out(n + 1, algebra_.zero());
    for (std::size_t k = 0; k <= n; ++k) {
        if (algebra_.is_zero(f.coeffs[k])) continue;
        for (std::size_t i = 0; i <= k; ++i) {
            const auto image = n_operator(static_cast<std::ptrdiff_t>(i), static_cast<std::ptrdiff_t>(k))(a);
            out[i] = algebra_.add(out[i], algebra_.mul(f.coeffs[k], image));
        }
    }
    return normalize(std::move(out));
}

OreExtension opposite_extension(const OreExtension& ext) {
    const auto inv = inverse(ext.sigma().matrix);
    if (!inv) throw DomainError("sigma is not invertible");
    LinMap sigma_inv{*inv};
    LinMap delta_op{(ext.delta().matrix * *inv).scaled(ext.field().neg(ext.field().one()))};
    return OreExtension(opposite_algebra(ext.algebra()), std::move(sigma_inv), std::move(delta_op));
}

GradedTensor graded_zero(const OreExtension& ext, std::size_t max_degree) {
    return {std::vector<TensorSquareElement>(max_degree + 1, tensor_zero(ext.algebra()))};
}

GradedTensor graded_left_mul(const OreExtension& ext, const AlgebraElement& a, const GradedTensor& p) {
    GradedTensor out;
    for (const auto& part : p.parts) out.parts.push_back(tensor_left_mul(ext.algebra(), a, part));
    return out;
}

GradedTensor graded_right_mul(const OreExtension& ext, const GradedTensor& p, const AlgebraElement& a) {
    const Algebra& alg = ext.algebra();
    GradedTensor out = graded_zero(ext, p.parts.empty() ? 0 : p.parts.size() - 1);
    if (p.parts.empty()) return {};
    for (std::size_t j = 0; j < p.parts.size(); ++j)
        for (std::size_t k = 0; k <= j; ++k) {
            const auto image = ext.n_operator(static_cast<std::ptrdiff_t>(k), static_cast<std::ptrdiff_t>(j))(a);
            out.parts[k] = tensor_add(out.parts[k], tensor_right_mul(alg, p.parts[j], image));
        }
    return out;
}

OrePoly graded_mu(const OreExtension& ext, const GradedTensor& p) {
    std::vector<AlgebraElement> c;
    for (const auto& part : p.parts) c.push_back(tensor_mu(ext.algebra(), part));
    return ext.normalize(std::move(c));
}

}  // namespace orefrob
