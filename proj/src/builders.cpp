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

#include "orefrob/builders.hpp"

#include "orefrob/error.hpp"

namespace orefrob {

FieldBasis::FieldBasis(Field extension, std::vector<FieldElement> elements, std::vector<std::string> labels)
    : extension_(std::move(extension)),
      prime_(Field::prime(extension_.characteristic())),
      elements_(std::move(elements)),
      labels_(std::move(labels)),
      to_coords_(prime_, 0, 0) {
    const std::size_t k = extension_.degree();
    if (elements_.size() != k) throw DomainError("a field basis needs exactly k elements");
    if (labels_.empty())
        for (auto e : elements_) labels_.push_back(extension_.to_string(e));
    if (labels_.size() != k) throw DomainError("field basis labels must match the basis size");
    Matrix b(prime_, k, k);
    for (std::size_t j = 0; j < k; ++j) {
        const auto c = extension_.coeffs(elements_[j]);
        for (std::size_t i = 0; i < k; ++i) b(i, j) = prime_.from_int(c[i]);
    }
    auto inv = inverse(b);
    if (!inv) throw DomainError("field basis elements are linearly dependent over the prime field");
    to_coords_ = std::move(*inv);
}

FieldBasis FieldBasis::power(const Field& extension) {
    std::vector<FieldElement> e;
    FieldElement x = extension.one();
    for (std::uint32_t i = 0; i < extension.degree(); ++i) {
        e.push_back(x);
        x = extension.mul(x, extension.generator());
    }
    return FieldBasis(extension, std::move(e));
}

FieldBasis FieldBasis::normal(const Field& extension, FieldElement alpha) {
    std::vector<FieldElement> e;
    for (std::uint32_t i = 0; i < extension.degree(); ++i) {
        e.push_back(alpha);
        alpha = extension.frobenius(alpha);
    }
    return FieldBasis(extension, std::move(e));
}

Vector FieldBasis::coords(FieldElement x) const {
    const auto c = extension_.coeffs(x);
    Vector v(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) v[i] = prime_.from_int(c[i]);
    return to_coords_.apply(v);
}

FieldElement FieldBasis::from_coords(std::span<const FieldElement> c) const {
    if (c.size() != elements_.size()) throw StructuralError("field basis coordinate length mismatch");
    FieldElement x = extension_.zero();
    for (std::size_t i = 0; i < c.size(); ++i)
        x = extension_.add(x, extension_.mul(extension_.from_int(c[i].code()), elements_[i]));
    return x;
}

FieldElement field_trace(const FieldBasis& basis, FieldElement x) {
    const Field& k = basis.extension();
    FieldElement t = k.zero();
    for (std::uint32_t i = 0; i < k.degree(); ++i) {
        t = k.add(t, x);
        x = k.frobenius(x);
    }
    return basis.prime_field().from_int(k.coeffs(t)[0]);
}

FieldElement find_normal_element(const Field& extension) {
    for (auto alpha : extension.enumerate()) {
        try {
            FieldBasis::normal(extension, alpha);
            return alpha;
        } catch (const DomainError&) {
        }
    }
    throw DomainError("no normal element found");  // every finite extension has one
}

Algebra base_field_algebra(const Field& field) {
    Algebra a(field, 1, {field.one()}, {field.one()}, {"1"});
    a.set_functional_hints({LinearFunctional{{field.one()}}});
    return a;
}

Algebra field_as_algebra(const FieldBasis& basis) {
    const Field& k = basis.extension();
    const Field& f = basis.prime_field();
    const std::size_t r = basis.size();
    std::vector<FieldElement> c;
    c.reserve(r * r * r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            const auto v = basis.coords(k.mul(basis[i], basis[j]));
            c.insert(c.end(), v.begin(), v.end());
        }
    Algebra a(f, r, std::move(c), basis.coords(k.one()), basis.labels());
    LinearFunctional trace{Vector(r)};
    for (std::size_t i = 0; i < r; ++i) trace.values[i] = field_trace(basis, basis[i]);
    a.set_functional_hints({trace});
    return a;
}

LinMap field_frobenius_map(const FieldBasis& basis) {
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < basis.size(); ++j) cols.push_back(basis.coords(basis.extension().frobenius(basis[j])));
    return {Matrix::from_columns(basis.prime_field(), basis.size(), cols)};
}

namespace {

std::size_t matrix_index(std::size_t n, std::size_t l, std::size_t s, std::size_t t) { return l * n * n + s * n + t; }

}  // namespace

Algebra matrix_algebra(std::size_t n, const FieldBasis& basis) {
    const Field& k = basis.extension();
    const Field& f = basis.prime_field();
    const std::size_t kb = basis.size();
    const std::size_t r = kb * n * n;
    std::vector<FieldElement> c(r * r * r, f.zero());
    for (std::size_t li = 0; li < kb; ++li)
        for (std::size_t lj = 0; lj < kb; ++lj) {
            const auto prod = basis.coords(k.mul(basis[li], basis[lj]));
            for (std::size_t s = 0; s < n; ++s)
                for (std::size_t t = 0; t < n; ++t)
                    for (std::size_t v = 0; v < n; ++v) {
                        // (c_i E_st)(c_j E_tv) = (c_i c_j) E_sv
                        const std::size_t i = matrix_index(n, li, s, t);
                        const std::size_t j = matrix_index(n, lj, t, v);
                        for (std::size_t l = 0; l < kb; ++l) c[(i * r + j) * r + matrix_index(n, l, s, v)] = prod[l];
                    }
        }
    std::vector<FieldElement> identity(n * n, k.zero());
    for (std::size_t s = 0; s < n; ++s) identity[s * n + s] = k.one();
    const auto unit = matrix_element(n, basis, identity);

    std::vector<std::string> labels;
    for (std::size_t l = 0; l < kb; ++l)
        for (std::size_t e = 0; e < n * n; ++e) {
            if (n == 1)
                labels.push_back(basis.labels()[l]);
            else if (k.degree() == 1)
                labels.push_back("e" + std::to_string(e));
            else
                labels.push_back(basis.labels()[l] + " e" + std::to_string(e));
        }

    Algebra a(f, r, std::move(c), unit.coords, std::move(labels));
    LinearFunctional trace{Vector(r, f.zero())};
    for (std::size_t l = 0; l < kb; ++l)
        for (std::size_t s = 0; s < n; ++s) trace.values[matrix_index(n, l, s, s)] = field_trace(basis, basis[l]);
    a.set_functional_hints({trace});
    return a;
}

AlgebraElement matrix_element(std::size_t n, const FieldBasis& basis, std::span<const FieldElement> entries) {
    if (entries.size() != n * n) throw StructuralError("matrix_element needs n^2 entries");
    const Field& f = basis.prime_field();
    const std::size_t kb = basis.size();
    Vector v(kb * n * n, f.zero());
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t) {
            const auto c = basis.coords(entries[s * n + t]);
            for (std::size_t l = 0; l < kb; ++l) v[matrix_index(n, l, s, t)] = c[l];
        }
    return {std::move(v)};
}

LinMap matrix_entrywise_frobenius(std::size_t n, const FieldBasis& basis) {
    const Field& k = basis.extension();
    const std::size_t kb = basis.size();
    std::vector<Vector> cols(kb * n * n);
    for (std::size_t l = 0; l < kb; ++l)
        for (std::size_t s = 0; s < n; ++s)
            for (std::size_t t = 0; t < n; ++t) {
                std::vector<FieldElement> entries(n * n, k.zero());
                entries[s * n + t] = k.frobenius(basis[l]);
                cols[matrix_index(n, l, s, t)] = matrix_element(n, basis, entries).coords;
            }
    return {Matrix::from_columns(basis.prime_field(), kb * n * n, cols)};
}

Algebra truncated_polynomials(const Field& field, std::size_t m) {
    if (m == 0) throw DomainError("truncated_polynomials needs m >= 1");
    std::vector<FieldElement> c(m * m * m, field.zero());
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; i + j < m; ++j) c[(i * m + j) * m + i + j] = field.one();
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < m; ++i) labels.push_back(i == 0 ? "1" : i == 1 ? "t" : "t^" + std::to_string(i));
    Algebra a(field, m, std::move(c), unit_vector(field, m, 0), std::move(labels));
    a.set_functional_hints({LinearFunctional{unit_vector(field, m, m - 1)}});
    return a;
}

Algebra upper_triangular(const Field& field, std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> units;
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = s; t < n; ++t) units.emplace_back(s, t);
    const std::size_t r = units.size();
    auto index = [&](std::size_t s, std::size_t t) {
        for (std::size_t i = 0; i < r; ++i)
            if (units[i] == std::pair{s, t}) return i;
        throw StructuralError("not an upper-triangular position");
    };
    std::vector<FieldElement> c(r * r * r, field.zero());
    Vector unit(r, field.zero());
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < r; ++i) {
        const auto [s, t] = units[i];
        if (s == t) unit[i] = field.one();
        labels.push_back("E" + std::to_string(s + 1) + std::to_string(t + 1));
        for (std::size_t j = 0; j < r; ++j) {
            const auto [u, v] = units[j];
            if (t == u) c[(i * r + j) * r + index(s, v)] = field.one();
        }
    }
    return Algebra(field, r, std::move(c), std::move(unit), std::move(labels));
}

}  // namespace orefrob
