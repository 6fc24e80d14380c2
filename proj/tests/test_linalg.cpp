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

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "orefrob/error.hpp"
#include "orefrob/linalg.hpp"

using namespace orefrob;

namespace {

Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng, int zero_bias = 0) {
    std::uniform_int_distribution<std::uint64_t> pick(0, f.order() - 1);
    std::uniform_int_distribution<int> coin(0, 9);
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = coin(rng) < zero_bias ? f.zero() : f.from_code(pick(rng));
    return m;
}

// All vectors of F^n, for tiny q^n.
std::vector<Vector> all_vectors(const Field& f, std::size_t n) {
    std::vector<Vector> out;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= f.order();
    for (std::uint64_t c = 0; c < total; ++c) {
        Vector v;
        auto t = c;
        for (std::size_t i = 0; i < n; ++i) {
            v.push_back(f.from_code(t % f.order()));
            t /= f.order();
        }
        out.push_back(v);
    }
    return out;
}

// Leibniz expansion.
FieldElement leibniz_det(const Matrix& m) {
    const Field& f = m.field();
    const std::size_t n = m.rows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    FieldElement det = f.zero();
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        FieldElement term = f.one();
        for (std::size_t i = 0; i < n; ++i) term = f.mul(term, m(i, perm[i]));
        det = inversions % 2 ? f.sub(det, term) : f.add(det, term);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

}  // namespace

TEST_CASE("linalg: kernel and rank agree with exhaustive enumeration") {
    std::mt19937_64 rng(11);
    for (const Field& f : {Field::prime(2), Field::prime(3), Field(2, {1, 1, 1})}) {
        for (int it = 0; it < 40; ++it) {
            const std::size_t rows = 1 + rng() % 4;
            const std::size_t cols = 1 + rng() % 4;
            const auto m = random_matrix(f, rows, cols, rng, 4);
            const auto kb = kernel_basis(m);
            std::size_t kernel_size = 0;
            for (const auto& v : all_vectors(f, cols))
                if (is_zero(m.apply(v))) ++kernel_size;
            CHECK(kernel_size == ipow(f.order(), kb.size()));
            CHECK(rank(m) + kb.size() == cols);
            for (const auto& v : kb) CHECK(is_zero(m.apply(v)));
        }
    }
}

TEST_CASE("linalg: F2 matrices up to 12 columns against exhaustive enumeration") {
    std::mt19937_64 rng(14);
    const auto f = Field::prime(2);
    for (int it = 0; it < 30; ++it) {
        const std::size_t rows = 1 + rng() % 12;
        const std::size_t cols = 1 + rng() % 12;
        const auto m = random_matrix(f, rows, cols, rng, 6);
        const auto rhs = random_matrix(f, rows, 1, rng, 5).column(0);
        std::size_t kernel_size = 0, solutions = 0;
        for (const auto& v : all_vectors(f, cols)) {
            const auto img = m.apply(v);
            if (is_zero(img)) ++kernel_size;
            if (img == rhs) ++solutions;
        }
        const auto kb = kernel_basis(m);
        CHECK(kernel_size == ipow(2, kb.size()));
        CHECK(rank(m) + kb.size() == cols);
        const auto sol = solve_affine(m, rhs);
        CHECK(sol.feasible() == (solutions > 0));
        if (sol.feasible()) CHECK(solutions == ipow(2, sol.dimension()));
        if (rows == cols) CHECK(det_nonzero(m) == kb.empty());
    }
}

TEST_CASE("linalg: det_nonzero agrees with the Leibniz formula") {
    std::mt19937_64 rng(12);
    for (const Field& f : {Field::prime(2), Field::prime(5), Field(2, {1, 0, 1, 1})}) {
        for (int it = 0; it < 60; ++it) {
            const std::size_t n = 1 + rng() % 5;
            const auto m = random_matrix(f, n, n, rng, 3);
            const bool nz = !leibniz_det(m).is_zero();
            CHECK(det_nonzero(m) == nz);
            const auto inv = inverse(m);
            CHECK(inv.has_value() == nz);
            if (inv) {
                CHECK(*inv * m == Matrix::identity(f, n));
                CHECK(m * *inv == Matrix::identity(f, n));
            }
        }
    }
    CHECK_THROWS_AS(det_nonzero(Matrix(Field::prime(2), 2, 3)), StructuralError);
}

TEST_CASE("linalg: solve_affine agrees with exhaustive enumeration") {
    std::mt19937_64 rng(13);
    for (const Field& f : {Field::prime(2), Field::prime(3)}) {
        for (int it = 0; it < 60; ++it) {
            const std::size_t rows = 1 + rng() % 4;
            const std::size_t cols = 1 + rng() % 4;
            const auto m = random_matrix(f, rows, cols, rng, 5);
            const auto rhs = random_matrix(f, rows, 1, rng, 5).column(0);
            std::size_t count = 0;
            for (const auto& v : all_vectors(f, cols))
                if (m.apply(v) == rhs) ++count;
            const auto sol = solve_affine(m, rhs);
            CHECK(sol.feasible() == (count > 0));
            if (sol.feasible()) {
                CHECK(m.apply(*sol.particular) == rhs);
                CHECK(count == ipow(f.order(), sol.dimension()));
                // Free coordinates of the particular solution are zero.
                const auto pivots = reduced_echelon(m).pivots;
                for (std::size_t c = 0; c < cols; ++c)
                    if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) CHECK(sol.particular->at(c).is_zero());
            }
        }
    }
}

TEST_CASE("linalg: kernel basis layout") {
    const Field f = Field::prime(2);
    const auto one = f.one();
    const auto zero = f.zero();
    // [1 1 0; 0 0 1]: free column 1 only.
    const Matrix m = Matrix::from_rows(f, 3, std::vector<Vector>{{one, one, zero}, {zero, zero, one}});
    const auto kb = kernel_basis(m);
    REQUIRE(kb.size() == 1);
    CHECK(kb[0] == Vector{one, one, zero});
    const auto e = reduced_echelon(m);
    CHECK(e.pivots == std::vector<std::size_t>{0, 2});
}

TEST_CASE("linalg: matrix algebra identities on random inputs") {
    std::mt19937_64 rng(14);
    const Field f(3, {2, 1, 1});
    for (int it = 0; it < 50; ++it) {
        const auto a = random_matrix(f, 3, 4, rng);
        const auto b = random_matrix(f, 4, 2, rng);
        const auto c = random_matrix(f, 2, 3, rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a * b).transpose() == b.transpose() * a.transpose());
        const auto x = random_matrix(f, 4, 1, rng).column(0);
        const auto y = random_matrix(f, 3, 1, rng).column(0);
        CHECK(a.apply(x) == (a * Matrix::from_columns(f, 4, std::vector<Vector>{x})).column(0));
        CHECK(a.apply_left(y) == a.transpose().apply(y));
        CHECK(dot(f, y, a.apply(x)) == dot(f, a.apply_left(y), x));
        CHECK((a - a).is_zero());
        CHECK(a + a.scaled(f.from_int(2)) == Matrix(f, 3, 4));
    }
}

TEST_CASE("linalg: worked examples") {
    const Field f2 = Field::prime(2);
    CHECK(kernel_basis(Matrix::identity(f2, 3)).empty());
    CHECK(kernel_basis(Matrix(f2, 2, 2)).size() == 2);
    CHECK(det_nonzero(Matrix::identity(f2, 4)));
    CHECK_FALSE(det_nonzero(Matrix(f2, 4, 4)));

    const Field f5 = Field::prime(5);
    const Vector b{f5.from_int(3), f5.from_int(1), f5.from_int(4)};
    const auto s = solve_affine(Matrix::identity(f5, 3), b);
    REQUIRE(s.feasible());
    CHECK(*s.particular == b);
    CHECK(s.dimension() == 0);

    const Vector one{f2.one()};
    CHECK_FALSE(solve_affine(Matrix(f2, 1, 1), one).feasible());

    // Frobenius minus identity on F8 in the basis 1, a, a^2 (columns = images).
    const Field k(2, {1, 0, 1, 1});
    Matrix sigma(f2, 3, 3);
    auto x = k.one();
    for (std::size_t j = 0; j < 3; ++j) {
        const auto c = k.coeffs(k.frobenius(x));
        for (std::size_t i = 0; i < 3; ++i) sigma(i, j) = f2.from_int(c[i]);
        x = k.mul(x, k.generator());
    }
    const auto kb = kernel_basis(sigma - Matrix::identity(f2, 3));
    REQUIRE(kb.size() == 1);
    CHECK(kb[0] == Vector{f2.one(), f2.zero(), f2.zero()});
    // Fixed points by enumeration: exactly {0, 1}.
    std::size_t fixed = 0;
    for (auto e : k.enumerate())
        if (k.frobenius(e) == e) ++fixed;
    CHECK(fixed == 2);
}
