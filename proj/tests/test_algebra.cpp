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

#include <variant>

#include "oracle.hpp"
#include "primequot/algebra.hpp"
#include "primequot/instance.hpp"
#include "primequot/radical.hpp"
#include "primequot/wedderburn.hpp"

using namespace primequot;

namespace {

const Field k2 = Field::prime(2);
const Field k3 = Field::prime(3);

FiniteGroup cyclic(std::uint32_t n) {
    Perm p(n);
    for (std::uint32_t i = 0; i < n; ++i) p[i] = (i + 1) % n;
    return FiniteGroup::from_permutations(n, {p});
}
FiniteGroup s3() { return FiniteGroup::from_permutations(3, {{1, 2, 0}, {1, 0, 2}}); }
FiniteGroup klein() { return FiniteGroup::from_permutations(4, {{1, 0, 3, 2}, {2, 3, 0, 1}}); }

// Group algebra product computed from the permutations themselves.
Vec convolve(const FiniteGroup& g, const Field& k, const Vec& x, const Vec& y) {
    std::map<Perm, GIdx> index;
    for (GIdx i = 0; i < g.order(); ++i) index[g.perms()[i]] = i;
    Vec out(g.order(), 0);
    for (GIdx a = 0; a < g.order(); ++a)
        for (GIdx b = 0; b < g.order(); ++b) {
            const GIdx c = index.at(oracle::compose(g.perms()[a], g.perms()[b]));
            out[c] = k.add(out[c], k.mul(x[a], y[b]));
        }
    return out;
}

// Element x^i of a cyclic group generated by its first generator.
GIdx power(const FiniteGroup& g, std::uint32_t i) { return g.pow(g.generator_indices()[0], i); }

}  // namespace

TEST_CASE("group algebras") {
    const FiniteGroup c2 = cyclic(2);
    const StructAlgebra a = group_algebra(c2, k2);
    REQUIRE(a.dim() == 2);
    const Vec x = a.add(a.one(), a.basis(1));
    REQUIRE(oracle::is_zero(a.mul(x, x)));
    REQUIRE(group_algebra(cyclic(3), k2).is_commutative());
    const FiniteGroup s = s3();
    const StructAlgebra b = group_algebra(s, k3);
    REQUIRE(b.dim() == 6);
    REQUIRE_FALSE(b.is_commutative());
    for (GIdx i = 0; i < 6; ++i)
        for (GIdx j = 0; j < 6; ++j) REQUIRE(b.mul(b.basis(i), b.basis(j)) == convolve(s, k3, b.basis(i), b.basis(j)));
    REQUIRE_FALSE(b.associativity_failure().has_value());
}

TEST_CASE("radical against brute force") {
    const StructAlgebra c2 = group_algebra(cyclic(2), k2);
    const Subspace j = radical(c2).J;
    REQUIRE(j.dim() == 1);
    REQUIRE(j.contains(Vec{1, 1}));
    REQUIRE(j == oracle::radical_by_ideals(c2));
    REQUIRE(radical(group_algebra(cyclic(3), k2)).J.dim() == 0);
    const Instance sl = resolve(corpus_instance("sl23"));
    const SubgroupGroup q8 = subgroup_as_group(sl.gamma, sl.D);
    REQUIRE(q8.group.order() == 8);
    REQUIRE(radical(group_algebra(q8.group, k3)).J.dim() == 0);

    const std::vector<StructAlgebra> small{group_algebra(cyclic(4), k2),    group_algebra(s3(), k2),
                                           group_algebra(cyclic(3), k3),    group_algebra(klein(), k2),
                                           group_algebra(cyclic(2), Field::make(2, 2)), matrix_algebra(k2, 2),
                                           tensor(group_algebra(cyclic(2), k2), group_algebra(cyclic(3), k2))};
    for (const auto& a : small) {
        CAPTURE(a.dim(), a.field().to_string());
        const Subspace r = radical(a).J;
        REQUIRE(r == oracle::radical_by_elements(a));
        REQUIRE(r == oracle::radical_by_ideals(a));
    }
}

TEST_CASE("centers") {
    REQUIRE(center(matrix_algebra(k3, 2)).dim() == 1);
    REQUIRE(center(group_algebra(cyclic(3), k2)).dim() == 3);
    const FiniteGroup s = s3();
    const StructAlgebra a = group_algebra(s, k2);
    // Number of conjugacy classes, counted directly.
    std::set<std::set<GIdx>> classes;
    for (GIdx x = 0; x < 6; ++x) {
        std::set<GIdx> cl;
        for (GIdx g = 0; g < 6; ++g) cl.insert(s.conj(x, g));
        classes.insert(cl);
    }
    REQUIRE(classes.size() == 3);
    const Subspace z = center(a);
    REQUIRE(z.dim() == classes.size());
    for (const auto& cl : classes) {
        Vec sum(6, 0);
        for (GIdx g : cl) sum[g] = 1;
        REQUIRE(z.contains(sum));
    }
}

TEST_CASE("central primitive idempotents") {
    SECTION("GF(2)C3") {
        const FiniteGroup c3 = cyclic(3);
        const StructAlgebra a = group_algebra(c3, k2);
        const auto ids = central_primitive_idempotents(a).idempotents;
        Vec all(3, 1), nontriv(3, 0);
        nontriv[power(c3, 1)] = nontriv[power(c3, 2)] = 1;
        REQUIRE(std::set<Vec>(ids.begin(), ids.end()) == std::set<Vec>{all, nontriv});
        REQUIRE(std::is_sorted(ids.rbegin(), ids.rend()));
    }
    SECTION("GF(2)C7 matches the idempotents of GF(2)[t]/(t^7 - 1)") {
        const FiniteGroup c7 = cyclic(7);
        const StructAlgebra a = group_algebra(c7, k2);
        // Cyclic convolution on exponent vectors.
        auto mul = [](const Vec& x, const Vec& y) {
            Vec z(7, 0);
            for (int i = 0; i < 7; ++i)
                for (int j = 0; j < 7; ++j) z[(i + j) % 7] ^= x[i] & y[j];
            return z;
        };
        std::vector<Vec> idem;
        oracle::for_each_vector(k2, 7, [&](const Vec& v) {
            if (!oracle::is_zero(v) && mul(v, v) == v) idem.push_back(v);
        });
        REQUIRE(idem.size() == 7);
        std::set<Vec> primitive;
        for (const auto& e : idem) {
            bool prim = true;
            for (const auto& f : idem)
                if (f != e && mul(e, f) == f) prim = false;
            if (prim) {
                Vec g(7, 0);  // exponent order -> group order
                for (std::uint32_t i = 0; i < 7; ++i) g[power(c7, i)] = e[i];
                primitive.insert(g);
            }
        }
        REQUIRE(primitive.size() == 3);
        const auto ids = central_primitive_idempotents(a).idempotents;
        REQUIRE(std::set<Vec>(ids.begin(), ids.end()) == primitive);
        REQUIRE(primitive.count(Vec(7, 1)) == 1);
    }
    SECTION("GF(3)Q8 has five blocks") {
        const Instance sl = resolve(corpus_instance("sl23"));
        const StructAlgebra a = group_algebra(subgroup_as_group(sl.gamma, sl.D).group, k3);
        const auto ids = central_primitive_idempotents(a).idempotents;
        REQUIRE(ids.size() == 5);
        Vec sum(8, 0);
        for (std::size_t i = 0; i < ids.size(); ++i) {
            REQUIRE(is_central(a, ids[i]));
            for (std::size_t j = 0; j < ids.size(); ++j)
                REQUIRE(a.mul(ids[i], ids[j]) == (i == j ? ids[i] : a.zero()));
            sum = a.add(sum, ids[i]);
        }
        REQUIRE(sum == a.one());
        std::multiset<std::size_t> dims;
        for (const auto& e : ids) dims.insert(left_translate(a, e, Subspace::full(k3, 8)).dim());
        REQUIRE(dims == std::multiset<std::size_t>{1, 1, 1, 1, 4});
    }
}

TEST_CASE("Wedderburn certificates") {
    SECTION("GF(4) component of GF(2)C3") {
        const FiniteGroup c3 = cyclic(3);
        const StructAlgebra a = group_algebra(c3, k2);
        Vec e(3, 0);
        e[power(c3, 1)] = e[power(c3, 2)] = 1;
        const WedderburnCertificate w = wedderburn_split(a, e);
        REQUIRE(w.t == 1);
        REQUIRE(w.m == 2);
        REQUIRE(w.kprime.size() == 4);
        REQUIRE(w.component.alg.dim() == 2);
        REQUIRE(oracle::multiplicative_on_basis(w.component.alg, w.target, w.iso));
    }
    SECTION("M_2(GF(3)) block of GF(3)Q8") {
        const Instance sl = resolve(corpus_instance("sl23"));
        const StructAlgebra a = group_algebra(subgroup_as_group(sl.gamma, sl.D).group, k3);
        for (const auto& e : central_primitive_idempotents(a).idempotents) {
            const WedderburnCertificate w = wedderburn_split(a, e);
            if (w.component.alg.dim() != 4) continue;
            REQUIRE(w.t == 2);
            REQUIRE(w.m == 1);
            REQUIRE(center(w.component.alg).dim() == 1);
            REQUIRE(oracle::multiplicative_on_basis(w.component.alg, w.target, w.iso));
            REQUIRE(rank(w.iso) == 4);
        }
    }
    SECTION("augmentation block of GF(2)C7") {
        const StructAlgebra a = group_algebra(cyclic(7), k2);
        const WedderburnCertificate w = wedderburn_split(a, Vec(7, 1));
        REQUIRE(w.t == 1);
        REQUIRE(w.m == 1);
    }
}

TEST_CASE("Skolem-Noether") {
    const StructAlgebra m2 = matrix_algebra(k3, 2);
    const WedderburnCertificate w = wedderburn_split(m2, m2.one());
    const std::size_t d = w.component.alg.dim();
    SECTION("identity gives a scalar") {
        const auto r = skolem_noether(w, Matrix::identity(k3, d));
        REQUIRE(std::holds_alternative<Vec>(r));
        const Vec M = w.component.to_parent(std::get<Vec>(r));
        REQUIRE(M[1] == 0);
        REQUIRE(M[2] == 0);
        REQUIRE(M[0] == M[3]);
        REQUIRE(M[0] != 0);
    }
    SECTION("conjugation by the swap matrix") {
        const Vec swap{0, 1, 1, 0};
        const Matrix phi = restrict_map(w.component, [&](const Vec& x) { return m2.mul(m2.mul(swap, x), swap); });
        const auto r = skolem_noether(w, phi);
        REQUIRE(std::holds_alternative<Vec>(r));
        const Vec M = w.component.to_parent(std::get<Vec>(r));
        // Proportional to the swap matrix.
        REQUIRE(M[0] == 0);
        REQUIRE(M[3] == 0);
        REQUIRE(M[1] == M[2]);
        REQUIRE(M[1] != 0);
    }
    SECTION("Frobenius on the GF(4) component is obstructed") {
        const FiniteGroup c3 = cyclic(3);
        const StructAlgebra a = group_algebra(c3, k2);
        Vec e(3, 0);
        e[power(c3, 1)] = e[power(c3, 2)] = 1;
        const WedderburnCertificate wc = wedderburn_split(a, e);
        // The transposition of S3 inverts C3.
        const Matrix phi = restrict_map(wc.component, [&](const Vec& x) {
            Vec y(3, 0);
            for (GIdx g = 0; g < 3; ++g) y[c3.inv(g)] = x[g];
            return y;
        });
        const auto r = skolem_noether(wc, phi);
        REQUIRE(std::holds_alternative<GaloisObstruction>(r));
        const auto& ob = std::get<GaloisObstruction>(r);
        REQUIRE(ob.frobenius_power == 1);
        REQUIRE(ob.zeta_image == wc.component.alg.mul(wc.zeta, wc.zeta));
    }
}

TEST_CASE("quotient algebras") {
    const StructAlgebra s = group_algebra(s3(), k2);
    REQUIRE(quotient_algebra(s, Subspace(k2, 6)).alg.dim() == 6);
    const StructAlgebra c2 = group_algebra(cyclic(2), k2);
    const QuotientAlgebra q = quotient_algebra(c2, radical(c2).J);
    REQUIRE(q.alg.dim() == 1);
    REQUIRE(q.alg.one() == Vec{1});
    // e = sum of the 3-cycles is the GF(4)-orbit sum, central in GF(2)S3.
    const FiniteGroup g = s3();
    Vec e(6, 0);
    for (GIdx x = 1; x < 6; ++x)
        if (g.element_order(x) == 3) e[x] = 1;
    REQUIRE(is_central(s, e));
    REQUIRE(is_idempotent(s, e));
    const Subspace I = ideal_generate(s, {s.sub(s.one(), e)});
    const QuotientAlgebra qe = quotient_algebra(s, I);
    REQUIRE(qe.alg.dim() == 4);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j)
            REQUIRE(qe.project(s.mul(s.basis(i), s.basis(j))) == qe.alg.mul(qe.project(s.basis(i)), qe.project(s.basis(j))));
}
