/*
   Copyright 2026 The primequot Authors

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

#include <catch_amalgamated.hpp>

#include "oracle.hpp"
#include "primequot/field.hpp"
#include "primequot/matrix.hpp"
#include "primequot/poly.hpp"

using namespace primequot;

TEST_CASE("field tables agree with schoolbook polynomial arithmetic") {
    for (auto [p, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 2}, {2, 3}, {3, 2}, {2, 4}, {3, 3}, {5, 2}}) {
        const Field k = Field::make(p, n);
        const auto& mod = k.spec().modulus;
        std::uint32_t q = 1;
        for (std::uint32_t i = 0; i < n; ++i) q *= p;
        REQUIRE(k.size() == q);
        for (Elem a = 0; a < k.size(); ++a)
            for (Elem b = 0; b < k.size(); ++b) {
                REQUIRE(k.mul(a, b) == oracle::gf_mul(a, b, p, mod));
                REQUIRE(k.add(a, b) == oracle::gf_add(a, b, p, n));
            }
        for (Elem a = 1; a < k.size(); ++a) REQUIRE(k.mul(a, k.inv(a)) == 1);
    }
}

TEST_CASE("canonical modulus is the least irreducible, leading coefficients compared first") {
    for (auto [p, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}, {2, 6}}) {
        std::vector<std::uint32_t> best;
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < n; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            std::vector<std::uint32_t> f(n + 1);
            std::uint64_t c = code;
            for (std::uint32_t i = 0; i < n; ++i) {
                f[i] = static_cast<std::uint32_t>(c % p);
                c /= p;
            }
            f[n] = 1;
            if (!oracle::irreducible_by_trial(f, p)) continue;
            auto later = [](const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
                return std::lexicographical_compare(b.rbegin(), b.rend(), a.rbegin(), a.rend());
            };
            if (best.empty() || later(best, f)) best = f;
        }
        CAPTURE(p, n);
        REQUIRE(canonical_modulus(p, n) == best);
    }
}

TEST_CASE("solve_linear") {
    const Field k2 = Field::prime(2), k3 = Field::prime(3);
    SECTION("identity") {
        const SolveResult r = solve_linear(Matrix::identity(k2, 3), {1, 0, 1});
        REQUIRE(r.consistent);
        REQUIRE(r.particular == Vec{1, 0, 1});
        REQUIRE(r.nullspace.rows() == 0);
    }
    SECTION("zero map") {
        const SolveResult r = solve_linear(Matrix(k3, 2, 2), {0, 0});
        REQUIRE(r.consistent);
        REQUIRE(r.particular == Vec{0, 0});
        REQUIRE(r.nullspace.rows() == 2);
    }
    SECTION("inconsistent") {
        REQUIRE_FALSE(solve_linear(Matrix::from_ints(k2, {{1, 1}, {0, 0}}), {1, 1}).consistent);
    }
    SECTION("random systems against substitution") {
        const Field k = Field::make(3, 2);
        std::uint32_t s = 7;
        auto rnd = [&] { s = s * 1103515245u + 12345u; return static_cast<Elem>((s >> 16) % k.size()); };
        for (int trial = 0; trial < 50; ++trial) {
            Matrix a(k, 4, 5);
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 5; ++j) a.at(i, j) = rnd();
            Vec x(5);
            for (auto& e : x) e = rnd();
            const Vec b = a.apply(x);
            const SolveResult r = solve_linear(a, b);
            REQUIRE(r.consistent);
            REQUIRE(a.apply(r.particular) == b);
            REQUIRE(r.nullspace.rows() + rank(a) == 5);
            for (std::size_t i = 0; i < r.nullspace.rows(); ++i) REQUIRE(oracle::is_zero(a.apply(r.nullspace.row(i))));
        }
    }
}

TEST_CASE("minimal polynomials") {
    const Field k2 = Field::prime(2), k3 = Field::prime(3);
    REQUIRE(min_poly(Matrix::identity(k2, 2)) == Poly::from_ints(k2, {1, 1}));
    REQUIRE(min_poly(Matrix::from_ints(k3, {{0, 1}, {0, 0}})) == Poly::from_ints(k3, {0, 0, 1}));
    const Poly f = Poly::from_ints(k2, {1, 1, 1});
    const Matrix c = companion(f);
    REQUIRE(min_poly(c) == f);
    // Direct evaluation: f(C) = 0 and no monic polynomial of lower degree kills C.
    REQUIRE(poly_eval(f, c) == Matrix(k2, 2, 2));
    for (std::int64_t a = 0; a < 2; ++a) REQUIRE_FALSE(poly_eval(Poly::from_ints(k2, {a, 1}), c) == Matrix(k2, 2, 2));
}

TEST_CASE("factorization multiplies back into irreducible factors") {
    const Field k2 = Field::prime(2), k3 = Field::prime(3);
    auto check = [](const Poly& f, std::vector<std::pair<std::vector<std::int64_t>, int>> want) {
        const Factorization fac = factor(f);
        REQUIRE(fac.product() == f);
        REQUIRE(fac.factors.size() == want.size());
        for (std::size_t i = 0; i < want.size(); ++i) {
            REQUIRE(fac.factors[i].first == Poly::from_ints(f.field(), want[i].first));
            REQUIRE(fac.factors[i].second == want[i].second);
            std::vector<std::uint32_t> c;
            for (Elem e : fac.factors[i].first.coeffs()) c.push_back(e);
            REQUIRE(oracle::irreducible_by_trial(c, f.field().characteristic()));
        }
    };
    check(Poly::from_ints(k2, {1, 0, 0, 1}), {{{1, 1}, 1}, {{1, 1, 1}, 1}});
    check(Poly::from_ints(k2, {1, 0, 0, 0, 0, 0, 0, 1}), {{{1, 1}, 1}, {{1, 1, 0, 1}, 1}, {{1, 0, 1, 1}, 1}});
    check(Poly::from_ints(k3, {0, 0, 1}), {{{0, 1}, 2}});
    // Over an extension field, with repeated factors.
    const Field k4 = Field::make(2, 2);
    const Poly g = Poly::from_ints(k4, {1, 1, 1});
    const Factorization fg = factor(g * g * Poly::x(k4));
    REQUIRE(fg.product() == g * g * Poly::x(k4));
    for (const auto& [h, e] : fg.factors) REQUIRE(h.degree() == 1);
}

TEST_CASE("subfield embeddings") {
    const Field k2 = Field::prime(2), k4 = Field::make(2, 2), k8 = Field::make(2, 3), k16 = Field::make(2, 4);
    const FieldEmbedding e1 = subfield_embed(k2, k4);
    REQUIRE(e1(0) == 0);
    REQUIRE(e1(1) == 1);
    const FieldEmbedding e = subfield_embed(k4, k16);
    for (Elem a = 0; a < 4; ++a)
        for (Elem b = 0; b < 4; ++b) {
            REQUIRE(e(k4.mul(a, b)) == k16.mul(e(a), e(b)));
            REQUIRE(e(k4.add(a, b)) == k16.add(e(a), e(b)));
        }
    // Composing with Frobenius gives the other embedding: different, still a ring map.
    std::vector<Elem> other(4);
    for (Elem a = 0; a < 4; ++a) other[a] = k16.frobenius(e(a));
    REQUIRE(other[k4.generator()] != e(k4.generator()));
    for (Elem a = 0; a < 4; ++a)
        for (Elem b = 0; b < 4; ++b) REQUIRE(other[k4.mul(a, b)] == k16.mul(other[a], other[b]));
    REQUIRE_THROWS_AS(subfield_embed(k4, k8), FieldError);
}

TEST_CASE("subspace arithmetic obeys the dimension formula") {
    const Field k = Field::prime(3);
    std::uint32_t s = 11;
    auto rnd = [&] { s = s * 1103515245u + 12345u; return static_cast<Elem>((s >> 16) % 3); };
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Vec> u, v;
        for (int i = 0; i < 3; ++i) {
            Vec a(6), b(6);
            for (auto& x : a) x = rnd();
            for (auto& x : b) x = rnd();
            u.push_back(a);
            v.push_back(b);
        }
        const Subspace U = Subspace::span(k, 6, u), V = Subspace::span(k, 6, v);
        REQUIRE(U.dim() + V.dim() == (U + V).dim() + intersect(U, V).dim());
        const Subspace W = intersect(U, V);
        for (const auto& x : W.basis()) REQUIRE((U.contains(x) && V.contains(x)));
        for (const auto& x : u) REQUIRE(U.combine(U.coords(x)) == x);
    }
}
