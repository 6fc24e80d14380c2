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

#include "orefrob/decide.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "orefrob/error.hpp"

namespace orefrob {

Matrix gram_matrix(const Algebra& a, const LinearFunctional& eps) {
    const std::size_t r = a.dim();
    if (eps.values.size() != r) throw StructuralError("functional has wrong length");
    const Field& f = a.field();
    Matrix g(f, r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            FieldElement s = f.zero();
            for (std::size_t k = 0; k < r; ++k) {
                const auto c = a.structure_constant(i, j, k);
                if (!c.is_zero() && !eps.values[k].is_zero()) s = f.add(s, f.mul(c, eps.values[k]));
            }
            g(i, j) = s;
        }
    return g;
}

bool is_frobenius_functional(const Algebra& a, const LinearFunctional& eps) { return det_nonzero(gram_matrix(a, eps)); }

AffineSolutionSpace functional_space(const OreExtension& ext, FieldElement m, FieldElement n, bool unit_normalized) {
    const Field& f = ext.field();
    if (m.is_zero()) throw DomainError("functional_space: m must be nonzero");
    const std::size_t r = ext.algebra().dim();
    const Matrix id = Matrix::identity(f, r);
    // eps sigma = m eps  <=>  (sigma^T - m I) eps = 0, same for delta.
    Matrix sys = ext.sigma().matrix.transpose() - id.scaled(m);
    sys.append_rows(ext.delta().matrix.transpose() - id.scaled(n));
    Vector rhs(2 * r, f.zero());
    if (unit_normalized) {
        Matrix unit_row(f, 1, r);
        const auto& u = ext.algebra().one().coords;
        for (std::size_t j = 0; j < r; ++j) unit_row(0, j) = u[j];
        sys.append_rows(unit_row);
        rhs.push_back(f.one());
    }
    return solve_affine(sys, rhs);
}

namespace {

// q^d, saturating at max uint64.
std::uint64_t space_size(std::uint64_t q, std::size_t d) {
    std::uint64_t n = 1;
    for (std::size_t i = 0; i < d; ++i) {
        if (n > std::numeric_limits<std::uint64_t>::max() / q) return std::numeric_limits<std::uint64_t>::max();
        n *= q;
    }
    return n;
}

}  // namespace

FunctionalSearch search_nondegenerate(const Algebra& a, const std::vector<Vector>& span_basis, const SearchOptions& opts,
                                      const std::string& what) {
    FunctionalSearch out;
    const std::size_t d = span_basis.size();
    out.space_dimension = d;
    if (d == 0) return out;
    const Field& f = a.field();
    const std::uint64_t q = f.order();
    if (space_size(q, d) > opts.max_candidates) throw BudgetExceeded(d, opts.max_candidates, what);

    const auto elements = f.enumerate();
    std::vector<std::uint64_t> digits(d, 0);
    while (true) {
        // Next tuple; the last coordinate varies fastest.
        std::size_t pos = d;
        while (pos > 0) {
            --pos;
            if (++digits[pos] < q) break;
            digits[pos] = 0;
            if (pos == 0) return out;
        }
        Vector eps(a.dim(), f.zero());
        for (std::size_t i = 0; i < d; ++i)
            if (digits[i] != 0) eps = add(f, eps, scale(f, elements[digits[i]], span_basis[i]));
        ++out.candidates_checked;
        LinearFunctional candidate{std::move(eps)};
        if (is_frobenius_functional(a, candidate)) {
            out.witness = std::move(candidate);
            return out;
        }
    }
}

FunctionalSearch decide_frobenius(const OreExtension& ext, const SearchOptions& opts) {
    const Field& f = ext.field();
    const auto space = functional_space(ext, f.one(), f.zero(), false);
    return search_nondegenerate(ext.algebra(), space.kernel_basis, opts, "frobenius");
}

FunctionalSearch decide_semi_frobenius(const Algebra& a, const SearchOptions& opts) {
    std::uint64_t tried = 0;
    for (const auto& hint : a.functional_hints()) {
        ++tried;
        if (is_frobenius_functional(a, hint)) {
            FunctionalSearch out;
            out.witness = hint;
            out.space_dimension = a.dim();
            out.candidates_checked = tried;
            out.from_hint = true;
            return out;
        }
    }
    std::vector<Vector> full;
    for (std::size_t i = 0; i < a.dim(); ++i) full.push_back(unit_vector(a.field(), a.dim(), i));
    auto out = search_nondegenerate(a, full, opts, "semi-frobenius");
    out.candidates_checked += tried;
    return out;
}

SecondKindSearch decide_second_kind(const OreExtension& ext, const SearchOptions& opts) {
    SecondKindSearch out;
    const Field& f = ext.field();
    for (auto m : f.enumerate()) {
        if (m.is_zero()) continue;
        for (auto n : f.enumerate()) {
            const auto space = functional_space(ext, m, n, false);
            const auto found = search_nondegenerate(ext.algebra(), space.kernel_basis, opts, "second-kind");
            out.candidates_checked += found.candidates_checked;
            if (found.witness) {
                out.witness = SecondKindWitness{m, n, *found.witness};
                return out;
            }
        }
    }
    return out;
}

SplitSearch decide_split_lift(const OreExtension& ext) {
    const Field& f = ext.field();
    SplitSearch out{functional_space(ext, f.one(), f.zero(), true), std::nullopt};
    if (out.space.particular) out.witness = LinearFunctional{*out.space.particular};
    return out;
}

SeparabilityCheck verify_separability_element(const OreExtension& ext, const TensorSquareElement& p) {
    const Algebra& a = ext.algebra();
    SeparabilityCheck c;
    c.mu_is_one = tensor_mu(a, p) == a.one();
    c.casimir = true;
    for (const auto& d : casimir_defect(a, p))
        if (!d.coeffs.is_zero()) c.casimir = false;
    c.sigma_fixed = tensor_twist(p, TwistKind::sigma, ext.sigma(), ext.delta()) == p;
    c.delta_killed = tensor_twist(p, TwistKind::delta, ext.sigma(), ext.delta()).coeffs.is_zero();
    return c;
}

namespace {

/**
 * Rows of the graded Casimir system: for every basis a_l and degree k,
 * (a_l P)_k - (P a_l)_k = 0, followed by mu(P_k) = [k == 0] 1. Unknown
 * (j, s, t) is the coefficient of a_s (x) a_t x^j. `n_image(k, j, l)` is N_k^j(a_l).
 */
template <class NImage>
std::pair<Matrix, Vector> casimir_system(const Algebra& a, std::size_t max_degree, NImage n_image) {
    const Field& f = a.field();
    const std::size_t r = a.dim();
    const std::size_t degs = max_degree + 1;
    const std::size_t unknowns = degs * r * r;
    const std::size_t comm_rows = r * degs * r * r;
    Matrix sys(f, comm_rows + degs * r, unknowns);
    Vector rhs(comm_rows + degs * r, f.zero());

    auto col = [&](std::size_t j, std::size_t s, std::size_t t) { return (j * r + s) * r + t; };
    auto comm_row = [&](std::size_t l, std::size_t k, std::size_t u, std::size_t v) { return ((l * degs + k) * r + u) * r + v; };

    std::vector<Matrix> left;
    for (std::size_t l = 0; l < r; ++l) left.push_back(a.left_mul_matrix(a.basis(l)));

    for (std::size_t l = 0; l < r; ++l)
        for (std::size_t j = 0; j < degs; ++j) {
            // a_l (a_s (x) a_t x^j) = sum_u L[u][s] a_u (x) a_t x^j
            for (std::size_t s = 0; s < r; ++s)
                for (std::size_t t = 0; t < r; ++t)
                    for (std::size_t u = 0; u < r; ++u) {
                        const auto e = left[l](u, s);
                        if (!e.is_zero()) sys(comm_row(l, j, u, t), col(j, s, t)) = f.add(sys(comm_row(l, j, u, t), col(j, s, t)), e);
                    }
            // (a_s (x) a_t x^j) a_l = sum_k a_s (x) a_t N_k^j(a_l) x^k
            for (std::size_t k = 0; k <= j; ++k) {
                const AlgebraElement y = n_image(k, j, l);
                if (a.is_zero(y)) continue;
                for (std::size_t t = 0; t < r; ++t) {
                    const auto ty = a.mul(a.basis(t), y);
                    for (std::size_t v = 0; v < r; ++v) {
                        if (ty.coords[v].is_zero()) continue;
                        for (std::size_t s = 0; s < r; ++s) {
                            auto& cell = sys(comm_row(l, k, s, v), col(j, s, t));
                            cell = f.sub(cell, ty.coords[v]);
                        }
                    }
                }
            }
        }
    for (std::size_t k = 0; k < degs; ++k) {
        for (std::size_t s = 0; s < r; ++s)
            for (std::size_t t = 0; t < r; ++t)
                for (std::size_t w = 0; w < r; ++w) sys(comm_rows + k * r + w, col(k, s, t)) = a.structure_constant(s, t, w);
        if (k == 0)
            for (std::size_t w = 0; w < r; ++w) rhs[comm_rows + w] = a.one().coords[w];
    }
    return {std::move(sys), std::move(rhs)};
}

std::pair<Matrix, Vector> base_casimir_system(const Algebra& a) {
    return casimir_system(a, 0, [&a](std::size_t, std::size_t, std::size_t l) { return a.basis(l); });
}

}  // namespace

std::optional<TensorSquareElement> decide_base_separability(const Algebra& a) {
    const auto [sys, rhs] = base_casimir_system(a);
    const auto space = solve_affine(sys, rhs);
    if (!space.particular) return std::nullopt;
    return tensor_unflatten(a, *space.particular);
}

std::optional<AlgebraElement> find_inner_element(const OreExtension& ext) {
    if (ext.inner_element()) return ext.inner_element();
    const Algebra& a = ext.algebra();
    const Field& f = a.field();
    const std::size_t r = a.dim();
    // delta(a_j) = (R_{a_j} - L_{sigma(a_j)}) b for every j.
    Matrix sys(f, 0, r);
    Vector rhs;
    for (std::size_t j = 0; j < r; ++j) {
        const auto aj = a.basis(j);
        sys.append_rows(a.right_mul_matrix(aj) - a.left_mul_matrix(ext.sigma()(aj)));
        const auto d = ext.delta()(aj);
        rhs.insert(rhs.end(), d.coords.begin(), d.coords.end());
    }
    const auto space = solve_affine(sys, rhs);
    if (!space.particular) return std::nullopt;
    return AlgebraElement{*space.particular};
}

SeparabilityLift decide_separability_lift(const OreExtension& ext) {
    const Algebra& a = ext.algebra();
    const Field& f = a.field();
    const std::size_t r = a.dim();
    auto [sys, rhs] = base_casimir_system(a);

    const Matrix& s = ext.sigma().matrix;
    const Matrix& d = ext.delta().matrix;
    Matrix twist(f, 2 * r * r, r * r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            const std::size_t c = i * r + j;
            for (std::size_t u = 0; u < r; ++u)
                for (std::size_t v = 0; v < r; ++v) {
                    // sigma(a_i) (x) sigma(a_j) - a_i (x) a_j
                    FieldElement e = f.mul(s(u, i), s(v, j));
                    if (u == i && v == j) e = f.sub(e, f.one());
                    twist(u * r + v, c) = e;
                    // sigma(a_i) (x) delta(a_j) + delta(a_i) (x) a_j
                    FieldElement g = f.mul(s(u, i), d(v, j));
                    if (v == j) g = f.add(g, d(u, i));
                    twist(r * r + u * r + v, c) = g;
                }
        }
    sys.append_rows(twist);
    rhs.resize(rhs.size() + 2 * r * r, f.zero());

    SeparabilityLift out;
    const auto space = solve_affine(sys, rhs);
    if (space.particular) {
        out.verdict = LiftVerdict::certified;
        out.witness = tensor_unflatten(a, *space.particular);
        out.base_separable = true;
        out.inner_element = find_inner_element(ext);
        return out;
    }
    out.base_separable = decide_base_separability(a).has_value();
    out.inner_element = find_inner_element(ext);
    out.verdict = (out.inner_element && !out.base_separable) ? LiftVerdict::not_separable : LiftVerdict::no_certificate;
    return out;
}

AffineSolutionSpace graded_casimir_space(const OreExtension& ext, std::size_t max_degree) {
    const Algebra& a = ext.algebra();
    const auto [sys, rhs] = casimir_system(a, max_degree, [&](std::size_t k, std::size_t j, std::size_t l) {
        return ext.n_operator(static_cast<std::ptrdiff_t>(k), static_cast<std::ptrdiff_t>(j))(a.basis(l));
    });
    return solve_affine(sys, rhs);
}

GradedTensor graded_from_vector(const OreExtension& ext, std::size_t max_degree, std::span<const FieldElement> v) {
    const std::size_t r2 = ext.algebra().dim() * ext.algebra().dim();
    if (v.size() != (max_degree + 1) * r2) throw StructuralError("graded tensor coordinate vector has wrong length");
    GradedTensor p;
    for (std::size_t k = 0; k <= max_degree; ++k) p.parts.push_back(tensor_unflatten(ext.algebra(), v.subspan(k * r2, r2)));
    return p;
}

TensorSquareElement descend_separability(const OreExtension& ext, const GradedTensor& p, const AlgebraElement& b) {
    const Algebra& a = ext.algebra();
    if (!(inner_derivation(a, ext.sigma(), b) == ext.delta()))
        throw DomainError("descend_separability: delta is not the inner sigma-derivation of the given element");
    TensorSquareElement out = tensor_zero(a);
    AlgebraElement bj = a.one();
    for (std::size_t j = 0; j < p.parts.size(); ++j) {
        out = tensor_add(out, tensor_right_mul(a, p.parts[j], bj));
        bj = a.mul(bj, b);
    }
    return out;
}

std::vector<AlgebraElement> dual_basis_for(const Algebra& a, const LinearFunctional& eps, std::span<const AlgebraElement> images) {
    const std::size_t r = a.dim();
    if (images.size() != r) throw StructuralError("dual_basis_for needs r images");
    if (!is_frobenius_functional(a, eps)) throw DomainError("dual_basis_for: functional is degenerate");
    const Field& f = a.field();
    // eps(b images_i) = sum_k b_k eps(a_k images_i) = (M b)_i
    Matrix m(f, r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < r; ++k) m(i, k) = a.evaluate(eps, a.mul(a.basis(k), images[i]));
    const auto inv = inverse(m);
    if (!inv) throw DomainError("dual_basis_for: images are linearly dependent");
    std::vector<AlgebraElement> out;
    for (std::size_t j = 0; j < r; ++j) out.push_back({inv->column(j)});
    return out;
}

PlainPoly alpha_apply(const OreExtension& ext, const LinearFunctional& eps, const OrePoly& f, const OrePoly& g) {
    const auto h = ext.mul(f, g);
    PlainPoly out;
    for (const auto& c : h.coeffs) out.push_back(ext.algebra().evaluate(eps, c));
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

OrePoly alpha_dual_preimage(const OreExtension& ext, const LinearFunctional& eps, std::size_t n, std::size_t i) {
    const Algebra& a = ext.algebra();
    const Field& f = a.field();
    const std::size_t r = a.dim();
    if (i >= r) throw StructuralError("alpha_dual_preimage: index out of range");

    // duals[m][l] = b_l^(m), dual to sigma^m(a_1), ..., sigma^m(a_r)
    std::vector<std::vector<AlgebraElement>> duals;
    LinMap sigma_m = a.identity_map();
    for (std::size_t m = 0; m <= n; ++m) {
        std::vector<AlgebraElement> images;
        for (std::size_t j = 0; j < r; ++j) images.push_back(sigma_m(a.basis(j)));
        duals.push_back(dual_basis_for(a, eps, images));
        sigma_m = sigma_m.then(ext.sigma());
    }

    std::vector<AlgebraElement> g(n + 1, a.zero());
    g[n] = duals[n][i];
    for (std::size_t m = n; m-- > 0;) {
        AlgebraElement acc = a.zero();
        for (std::size_t l = 0; l < r; ++l) {
            FieldElement s = f.zero();
            for (std::size_t k = m + 1; k <= n; ++k) {
                const auto nk = ext.n_operator(static_cast<std::ptrdiff_t>(m), static_cast<std::ptrdiff_t>(k))(a.basis(l));
                s = f.add(s, a.evaluate(eps, a.mul(g[k], nk)));
            }
            if (!s.is_zero()) acc = a.add(acc, a.scale(s, duals[m][l]));
        }
        g[m] = a.neg(acc);
    }
    return ext.normalize(std::move(g));
}

std::optional<std::vector<std::vector<std::size_t>>> sigma_orbits(const LinMap& sigma) {
    const Matrix& s = sigma.matrix;
    const Field& f = s.field();
    const std::size_t r = s.cols();
    std::vector<std::size_t> image(r);
    std::vector<bool> hit(r, false);
    for (std::size_t j = 0; j < r; ++j) {
        std::optional<std::size_t> target;
        for (std::size_t i = 0; i < r; ++i) {
            const auto e = s(i, j);
            if (e.is_zero()) continue;
            if (target || !(e == f.one())) return std::nullopt;
            target = i;
        }
        if (!target || hit[*target]) return std::nullopt;
        hit[*target] = true;
        image[j] = *target;
    }
    std::vector<std::vector<std::size_t>> orbits;
    std::vector<bool> seen(r, false);
    for (std::size_t j = 0; j < r; ++j) {
        if (seen[j]) continue;
        std::vector<std::size_t> orbit;
        for (std::size_t k = j; !seen[k]; k = image[k]) {
            seen[k] = true;
            orbit.push_back(k);
        }
        std::sort(orbit.begin(), orbit.end());
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

const char* to_string(Status s) noexcept {
    switch (s) {
        case Status::yes: return "yes";
        case Status::no: return "no";
        case Status::no_certificate: return "no-certificate";
        case Status::budget_exceeded: return "budget-exceeded";
    }
    return "unknown";
}

std::optional<Status> status_from_string(const std::string& s) noexcept {
    for (auto st : {Status::yes, Status::no, Status::no_certificate, Status::budget_exceeded})
        if (s == to_string(st)) return st;
    return std::nullopt;
}

namespace {

Decision from_search(const FunctionalSearch& s) {
    Decision d;
    d.status = s.witness ? Status::yes : Status::no;
    d.functional = s.witness;
    d.space_dimension = s.space_dimension;
    d.candidates_checked = s.candidates_checked;
    return d;
}

Decision budget_failure(const BudgetExceeded& e) {
    Decision d;
    d.status = Status::budget_exceeded;
    d.space_dimension = e.dimension();
    d.message = e.what();
    return d;
}

std::optional<Vector> orbit_values(const OreExtension& ext, const LinearFunctional& eps) {
    const auto orbits = sigma_orbits(ext.sigma());
    if (!orbits) return std::nullopt;
    Vector v;
    for (const auto& o : *orbits) {
        for (auto idx : o)
            if (!(eps.values[idx] == eps.values[o.front()])) return std::nullopt;
        v.push_back(eps.values[o.front()]);
    }
    return v;
}

}  // namespace

AnalysisReport analyze(const OreExtension& ext, const CheckSelection& checks, const SearchOptions& opts) {
    const Algebra& a = ext.algebra();
    const Field& f = a.field();
    AnalysisReport rep;
    rep.algebra_dim = a.dim();
    rep.field_order = f.order();
    rep.inner_element = find_inner_element(ext);

    if (checks.frobenius || checks.second_kind) {
        try {
            rep.frobenius = from_search(decide_frobenius(ext, opts));
            if (rep.frobenius->functional) rep.frobenius->orbit_values = orbit_values(ext, *rep.frobenius->functional);
        } catch (const BudgetExceeded& e) {
            rep.frobenius = budget_failure(e);
        }
    }

    if (checks.semi) {
        try {
            rep.semi_frobenius = from_search(decide_semi_frobenius(a, opts));
        } catch (const BudgetExceeded& e) {
            rep.semi_frobenius = budget_failure(e);
            if (rep.frobenius && rep.frobenius->status == Status::yes) {
                rep.semi_frobenius = Decision{};
                rep.semi_frobenius->status = Status::yes;
                rep.semi_frobenius->functional = rep.frobenius->functional;
                rep.notes.push_back("semi-Frobenius implied by the Frobenius witness (the full search exceeded its budget)");
            }
        }
        rep.base_frobenius = rep.semi_frobenius;
        rep.notes.push_back("semi-Frobenius (left and right) is decided on A alone: it holds iff A has a nondegenerate functional");
    }

    if (checks.second_kind) {
        try {
            const auto s = decide_second_kind(ext, opts);
            Decision d;
            d.candidates_checked = s.candidates_checked;
            d.status = s.witness ? Status::yes : Status::no;
            if (s.witness) {
                d.m = s.witness->m;
                d.n = s.witness->n;
                d.functional = s.witness->functional;
            }
            rep.second_kind = d;
        } catch (const BudgetExceeded& e) {
            rep.second_kind = budget_failure(e);
            if (rep.frobenius && rep.frobenius->status == Status::yes) {
                Decision d;
                d.status = Status::yes;
                d.m = f.one();
                d.n = f.zero();
                d.functional = rep.frobenius->functional;
                rep.second_kind = d;
                rep.notes.push_back("second kind implied by the Frobenius witness with kappa = id");
            }
        }
        rep.notes.push_back("second kind ranges over kappa(x) = m x + n with m != 0");
    }

    if (checks.split) {
        const auto s = decide_split_lift(ext);
        Decision d;
        d.status = s.witness ? Status::yes : Status::no_certificate;
        d.functional = s.witness;
        d.space_dimension = s.space.feasible() ? std::optional<std::size_t>(s.space.dimension()) : std::nullopt;
        if (s.witness) d.orbit_values = orbit_values(ext, *s.witness);
        rep.split = d;
        if (!s.witness) rep.notes.push_back("no xi with xi(1) = 1, xi sigma = xi, xi delta = 0; splitness is not decided");
    }

    if (checks.separable) {
        const auto lift = decide_separability_lift(ext);
        Decision d;
        d.tensor = lift.witness;
        d.status = lift.verdict == LiftVerdict::certified ? Status::yes
                   : lift.verdict == LiftVerdict::not_separable ? Status::no
                                                                : Status::no_certificate;
        rep.separable = d;

        Decision base;
        if (lift.base_separable) {
            base.status = Status::yes;
            base.tensor = decide_base_separability(a);
        } else {
            base.status = Status::no;
        }
        rep.base_separable = base;
        if (lift.verdict == LiftVerdict::not_separable)
            rep.notes.push_back("delta is inner and A is not separable over F, hence R subset S is not separable");
        else if (lift.verdict == LiftVerdict::no_certificate)
            rep.notes.push_back("no separability element p with sigma(x)(p) = p and delta(x)(p) = 0; separability is not decided");
    }
    return rep;
}

}  // namespace orefrob
