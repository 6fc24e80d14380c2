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

#include <random>
#include <thread>

#include "orefrob/error.hpp"
#include "support.hpp"

using namespace orefrob;
using namespace orefrob::testing;

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

AlgebraElement apply_power(const LinMap& m, AlgebraElement x, std::size_t e) {
    while (e--) x = m(x);
    return x;
}

}  // namespace

TEST_CASE("ore: x^n a expands through the N operators") {
    std::mt19937_64 rng(31);
    for (const auto& [name, ext] : builtin_extensions()) {
        CAPTURE(name);
        const auto& alg = ext.algebra();
        for (int it = 0; it < 10; ++it) {
            const auto a = random_element(alg, rng);
            auto f = ext.constant(a);
            for (std::size_t n = 0; n <= 5; ++n) {
                // f = x^n a
                std::vector<AlgebraElement> expect;
                for (std::size_t i = 0; i <= n; ++i)
                    expect.push_back(ext.n_operator(static_cast<std::ptrdiff_t>(i), static_cast<std::ptrdiff_t>(n))(a));
                CHECK(f == ext.normalize(expect));
                f = ext.left_mul_x(f);
            }
        }
        CHECK(ext.n_operator(-1, 2).matrix.is_zero());
        CHECK(ext.n_operator(3, 2).matrix.is_zero());
        CHECK(ext.n_operator(0, 0) == alg.identity_map());
    }
}

TEST_CASE("ore: N operators in the pure cases") {
    std::mt19937_64 rng(32);
    // delta = 0: only N_n^n = sigma^n survives.
    {
        const auto base = paper_counterexample();
        const auto& alg = base.algebra();
        const OreExtension ext(alg, base.sigma(), alg.zero_map());
        for (int it = 0; it < 5; ++it) {
            const auto a = random_element(alg, rng);
            for (std::ptrdiff_t n = 0; n <= 4; ++n)
                for (std::ptrdiff_t i = 0; i <= n; ++i)
                    CHECK(ext.n_operator(i, n)(a) == (i == n ? apply_power(base.sigma(), a, static_cast<std::size_t>(n)) : alg.zero()));
        }
    }
    // sigma = id: N_i^n = C(n, i) delta^(n - i).
    {
        const auto ext = truncated_with_derivative(Field::prime(3), 3);
        const auto& alg = ext.algebra();
        const Field& f = alg.field();
        for (int it = 0; it < 5; ++it) {
            const auto a = random_element(alg, rng);
            for (std::size_t n = 0; n <= 5; ++n)
                for (std::size_t i = 0; i <= n; ++i)
                    CHECK(ext.n_operator(static_cast<std::ptrdiff_t>(i), static_cast<std::ptrdiff_t>(n))(a) ==
                          alg.scale(f.from_int(static_cast<std::int64_t>(binomial(n, i) % 3)), apply_power(ext.delta(), a, n - i)));
        }
    }
}

TEST_CASE("ore: extreme N operators are powers of sigma and delta") {
    for (const auto& [name, ext] : builtin_extensions()) {
        CAPTURE(name);
        auto sn = ext.algebra().identity_map();
        auto dn = ext.algebra().identity_map();
        for (std::ptrdiff_t n = 0; n <= 5; ++n) {
            CHECK(ext.n_operator(n, n) == sn);
            CHECK(ext.n_operator(0, n) == dn);
            sn = sn.then(ext.sigma());
            dn = dn.then(ext.delta());
        }
    }
}

TEST_CASE("ore: degree of a product when sigma is bijective") {
    std::mt19937_64 rng(35);
    for (const auto& [name, ext] : builtin_extensions()) {
        CAPTURE(name);
        const auto& alg = ext.algebra();
        for (int it = 0; it < 50; ++it) {
            const auto f = random_poly(ext, 3, rng);
            const auto g = random_poly(ext, 3, rng);
            if (f.is_zero() || g.is_zero()) continue;
            const auto lf = f.coeffs.back();
            const auto lg = g.coeffs.back();
            // leading term of f g is lf sigma^deg f (lg)
            const auto lead = alg.mul(lf, apply_power(ext.sigma(), lg, *f.degree()));
            const auto h = ext.mul(f, g);
            if (alg.is_zero(lead)) {
                CHECK((h.is_zero() || *h.degree() < *f.degree() + *g.degree()));
            } else {
                REQUIRE(h.degree().has_value());
                CHECK(*h.degree() == *f.degree() + *g.degree());
                CHECK(h.coeffs.back() == lead);
            }
        }
    }
}

TEST_CASE("ore: concurrent readers of the N operator cache") {
    const auto ext = paper_counterexample();
    const auto reference = paper_counterexample();
    std::vector<std::pair<std::ptrdiff_t, std::ptrdiff_t>> index;
    std::vector<LinMap> expect;
    for (std::ptrdiff_t n = 0; n <= 8; ++n)
        for (std::ptrdiff_t i = 0; i <= n; ++i) {
            index.emplace_back(i, n);
            expect.push_back(reference.n_operator(i, n));
        }
    std::vector<std::size_t> mismatches(4, 0);
    std::vector<std::thread> workers;
    for (std::size_t t = 0; t < mismatches.size(); ++t)
        workers.emplace_back([&, t] {
            for (std::size_t k = 0; k < index.size(); ++k) {
                // odd threads walk backwards
                const std::size_t j = t % 2 ? index.size() - 1 - k : k;
                if (!(ext.n_operator(index[j].first, index[j].second) == expect[j])) ++mismatches[t];
            }
        });
    for (auto& w : workers) w.join();
    for (const auto m : mismatches) CHECK(m == 0);
}

TEST_CASE("ore: right_const_mul agrees with the ring product") {
    std::mt19937_64 rng(33);
    for (const auto& [name, ext] : builtin_extensions()) {
        CAPTURE(name);
        for (int it = 0; it < 1000; ++it) {
            const auto f = random_poly(ext, 4, rng);
            const auto a = random_element(ext.algebra(), rng);
            CHECK(ext.right_const_mul(f, a) == ext.mul(f, ext.constant(a)));
        }
    }
}

TEST_CASE("ore: ring axioms on random polynomials") {
    std::mt19937_64 rng(34);
    for (const auto& [name, ext] : builtin_extensions()) {
        CAPTURE(name);
        for (int it = 0; it < 30; ++it) {
            const auto f = random_poly(ext, 3, rng);
            const auto g = random_poly(ext, 3, rng);
            const auto h = random_poly(ext, 3, rng);
            CHECK(ext.mul(ext.mul(f, g), h) == ext.mul(f, ext.mul(g, h)));
            CHECK(ext.mul(f, ext.add(g, h)) == ext.add(ext.mul(f, g), ext.mul(f, h)));
            CHECK(ext.mul(ext.x_power(0), f) == f);
            CHECK(ext.sub(f, f).is_zero());
            // x a = sigma(a) x + delta(a)
            const auto a = random_element(ext.algebra(), rng);
            CHECK(ext.mul(ext.x_power(1), ext.constant(a)) ==
                  ext.add(ext.monomial(ext.sigma()(a), 1), ext.constant(ext.delta()(a))));
        }
    }
}

TEST_CASE("ore: inner derivation power identity on the counterexample") {
    std::mt19937_64 rng(35);
    const auto ext = paper_counterexample();
    const auto& alg = ext.algebra();
    REQUIRE(ext.inner_element());
    const auto b = *ext.inner_element();
    for (int it = 0; it < 50; ++it) {
        const auto a = random_element(alg, rng);
        for (std::size_t j = 0; j <= 4; ++j) {
            AlgebraElement sum = alg.zero();
            for (std::size_t l = 0; l <= j; ++l)
                sum = alg.add(sum, alg.mul(ext.n_operator(static_cast<std::ptrdiff_t>(l), static_cast<std::ptrdiff_t>(j))(a), alg.pow(b, l)));
            CHECK(sum == alg.mul(alg.pow(b, j), a));
        }
    }
}

TEST_CASE("ore: validation of sigma and delta") {
    const auto base = paper_counterexample();
    const auto& alg = base.algebra();
    auto code_of = [](auto&& fn) {
        try {
            fn();
        } catch (const ValidationError& e) {
            return e.code();
        }
        return ValidationCode::parse;
    };
    CHECK(code_of([&] { OreExtension(alg, alg.zero_map(), alg.zero_map()); }) == ValidationCode::not_automorphism);
    CHECK(code_of([&] { OreExtension(alg, base.sigma(), alg.identity_map()); }) == ValidationCode::not_derivation);
    CHECK_NOTHROW(OreExtension(alg, base.sigma(), base.delta()));
}

TEST_CASE("ore: opposite extensions are valid") {
    for (const auto& [name, ext] : builtin_extensions()) {
        CAPTURE(name);
        CHECK_NOTHROW(opposite_extension(ext));
    }
}

TEST_CASE("ore: graded tensor right action matches Ore multiplication") {
    std::mt19937_64 rng(36);
    const auto ext = paper_counterexample();
    const auto& alg = ext.algebra();
    for (int it = 0; it < 20; ++it) {
        const std::size_t j = rng() % 3;
        const auto u = random_element(alg, rng);
        const auto g = random_element(alg, rng);
        const auto a = random_element(alg, rng);
        GradedTensor p = graded_zero(ext, 2);
        p.parts[j] = tensor_pure(alg, u, g);
        const auto q = graded_right_mul(ext, p, a);
        // (u (x) g x^j) a = u (x) (g x^j a)
        const auto right = ext.mul(ext.monomial(g, j), ext.constant(a));
        for (std::size_t k = 0; k < 3; ++k) {
            const auto coeff = k < right.coeffs.size() ? right.coeffs[k] : alg.zero();
            CHECK(q.parts[k] == tensor_pure(alg, u, coeff));
        }
        const auto l = graded_left_mul(ext, a, p);
        CHECK(l.parts[j] == tensor_pure(alg, alg.mul(a, u), g));
        CHECK(graded_mu(ext, p) == ext.monomial(alg.mul(u, g), j));
    }
}

TEST_CASE("ore: worked examples") {
    std::mt19937_64 rng(37);
    const auto ext = paper_counterexample();
    const auto& alg = ext.algebra();
    const auto& s = ext.sigma();
    const auto& d = ext.delta();
    CHECK(ext.n_operator(1, 1) == s);
    CHECK(ext.n_operator(0, 1) == d);
    CHECK(ext.n_operator(1, 2).matrix == s.matrix * d.matrix + d.matrix * s.matrix);
    for (int it = 0; it < 10; ++it) {
        const auto a = random_element(alg, rng);
        const auto c = random_element(alg, rng);
        CHECK(ext.mul(ext.constant(c), ext.constant(a)) == ext.constant(alg.mul(c, a)));
        // x^2 a = sigma^2(a) x^2 + (sigma delta + delta sigma)(a) x + delta^2(a)
        const auto expect = ext.normalize({d(d(a)), alg.add(s(d(a)), d(s(a))), s(s(a))});
        CHECK(ext.mul(ext.x_power(2), ext.constant(a)) == expect);
        CHECK(ext.right_const_mul(ext.x_power(0), a) == ext.constant(a));
        for (std::size_t n = 0; n <= 4; ++n) {
            std::vector<AlgebraElement> c2;
            for (std::size_t i = 0; i <= n; ++i)
                c2.push_back(ext.n_operator(static_cast<std::ptrdiff_t>(i), static_cast<std::ptrdiff_t>(n))(a));
            CHECK(ext.right_const_mul(ext.x_power(n), a) == ext.normalize(c2));
        }
    }
    const auto other = semi_not_frobenius(2, 3);
    CHECK_THROWS_AS(ext.mul(ext.x_power(1), other.x_power(1)), StructuralError);
}
