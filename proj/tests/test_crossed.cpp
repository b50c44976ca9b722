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
#include "primequot/crossed.hpp"
#include "primequot/instance.hpp"

using namespace primequot;

namespace {

const Field k2 = Field::prime(2);
const Field k3 = Field::prime(3);
const Field k4 = Field::make(2, 2);

FiniteGroup cyclic2() { return FiniteGroup::from_permutations(2, {{1, 0}}); }

// Group algebra kG presented over k (scalars) with the group elements as lifts.
CrossedPresentation scalar_presentation(const FiniteGroup& g, const Field& k) {
    const StructAlgebra s = group_algebra(g, k);
    const Subalgebra r = subalgebra(s, Subspace::span(k, s.dim(), {s.one()}), s.one());
    std::vector<Vec> lifts;
    for (GIdx x = 0; x < g.order(); ++x) lifts.push_back(s.basis(x));
    return crossed_from_decomposition(s, r, g, lifts);
}

CocycleTable constant_table(const CrossedPresentation& p, const Vec& v) {
    return CocycleTable{p.F, std::vector<Vec>(p.F.order() * p.F.order(), v)};
}

// M_2(GF(2)) as GF(4) * C2: R = span{I, A} with A^2 = A + I, lifted by an
// involution P with P^-1 A P = A^2.
CrossedPresentation galois_presentation() {
    const StructAlgebra m = matrix_algebra(k2, 2);
    const Vec I{1, 0, 0, 1}, A{0, 1, 1, 1};
    const Subalgebra r = subalgebra(m, Subspace::span(k2, 4, {I, A}), I);
    Vec P;
    oracle::for_each_vector(k2, 4, [&](const Vec& x) {
        if (!P.empty() || r.span.contains(x) || m.mul(x, x) != I) return;
        if (m.mul(m.mul(x, A), x) == m.mul(A, A)) P = x;
    });
    REQUIRE(!P.empty());
    return crossed_from_decomposition(m, r, cyclic2(), {I, P});
}

}  // namespace

TEST_CASE("presentations read off decompositions") {
    SECTION("GF(3)S3 over GF(3)C3") {
        const FiniteGroup s3 = FiniteGroup::from_permutations(3, {{1, 2, 0}, {1, 0, 2}});
        const Subgroup c3 = generate_subgroup(s3, {s3.generator_indices()[0]});
        const Quotient q = quotient_group(s3, c3);
        const StructAlgebra s = group_algebra(s3, k3);
        std::vector<Vec> rv, lifts;
        for (GIdx g : c3.elems) rv.push_back(s.basis(g));
        for (GIdx x : q.reps) lifts.push_back(s.basis(x));
        const Subalgebra r = subalgebra(s, Subspace::span(k3, 6, rv), s.one());
        const CrossedPresentation p = crossed_from_decomposition(s, r, q.group, lifts);
        REQUIRE(p.checks.all_ok());
        for (const auto& t : p.tau) REQUIRE(t == p.R.one());
        for (GIdx f = 0; f < 2; ++f) {
            const GIdx x = q.reps[f];
            for (std::size_t i = 0; i < r.alg.dim(); ++i) {
                const Vec ri = r.to_parent(r.alg.basis(i));
                const Vec conj = s.mul(s.mul(s.basis(s3.inv(x)), ri), s.basis(x));
                REQUIRE(r.to_parent(p.sigma[f].col(i)) == conj);
            }
        }
    }
    SECTION("M_2(GF(2)) as GF(4) * C2") {
        const CrossedPresentation p = galois_presentation();
        REQUIRE(p.checks.all_ok());
        for (const auto& t : p.tau) REQUIRE(t == p.R.one());
        // sigma(c) is the Frobenius: every element goes to its square.
        for (std::size_t i = 0; i < 2; ++i) REQUIRE(p.sigma[1].col(i) == p.R.mul(p.R.basis(i), p.R.basis(i)));
        REQUIRE_FALSE(p.sigma[1] == Matrix::identity(k2, 2));
    }
}

TEST_CASE("cocycle checks") {
    const CrossedPresentation g = galois_presentation();
    REQUIRE(cocycle_check(g, constant_table(g, g.R.one())).ok);
    const auto units = central_units(g.R);
    REQUIRE(units.size() == 3);
    for (const auto& a : units)
        for (const auto& b : units) REQUIRE(cocycle_check(g, coboundary(g, {a, b})).ok);

    const FiniteGroup v4 = FiniteGroup::from_permutations(4, {{1, 0, 3, 2}, {2, 3, 0, 1}});
    const CrossedPresentation p = scalar_presentation(v4, k3);
    for (std::size_t pos = 1; pos < 16; ++pos) {
        CocycleTable a = constant_table(p, p.R.one());
        a.values[pos] = Vec{2};
        const CocycleReport rep = cocycle_check(p, a);
        REQUIRE_FALSE(rep.ok);
        REQUIRE(rep.witness.has_value());
        const auto [x, y, z] = *rep.witness;
        auto at = [&](GIdx u, GIdx v) { return a.at(u, v)[0]; };
        REQUIRE(k3.mul(at(v4.mul(x, y), z), at(x, y)) != k3.mul(at(x, v4.mul(y, z)), at(y, z)));
    }
}

TEST_CASE("twisting") {
    SECTION("trivial twist leaves the structure constants alone") {
        const CrossedPresentation g = galois_presentation();
        const TwistResult t = twist(g, constant_table(g, g.R.one()));
        REQUIRE(t.associative);
        REQUIRE(*t.algebra == crossed_algebra(g));
    }
    SECTION("GF(4)C2 with alpha(c, c) = omega") {
        const CrossedPresentation p = scalar_presentation(cyclic2(), k4);
        CocycleTable a = constant_table(p, p.R.one());
        const Elem w = k4.generator();
        a.values[3] = Vec{w};
        const TwistResult t = twist(p, a);
        REQUIRE(t.associative);
        const StructAlgebra& s = *t.algebra;
        REQUIRE(s.mul(s.basis(1), s.basis(1)) == Vec{w, 0});
        REQUIRE_FALSE(s.associativity_failure().has_value());
    }
    SECTION("a non-cocycle breaks associativity") {
        const FiniteGroup v4 = FiniteGroup::from_permutations(4, {{1, 0, 3, 2}, {2, 3, 0, 1}});
        const CrossedPresentation p = scalar_presentation(v4, k3);
        CocycleTable a = constant_table(p, p.R.one());
        a.values[1 * 4 + 2] = Vec{2};
        REQUIRE_THROWS_AS(twist(p, a, true), AlgebraError);
        const TwistResult t = twist(p, a, false);
        REQUIRE_FALSE(t.associative);
        REQUIRE_FALSE(t.failure.empty());
    }
}

TEST_CASE("coboundary witnesses") {
    const CrossedPresentation g = galois_presentation();
    const auto units = central_units(g.R);
    const CoboundarySearch one = coboundary_witness(g, constant_table(g, g.R.one()), units);
    REQUIRE(one.found);
    REQUIRE(one.phi[0] == g.R.one());
    for (const auto& a : units)
        for (const auto& b : units) {
            const CocycleTable planted = coboundary(g, {a, b});
            const CoboundarySearch s = coboundary_witness(g, planted, units);
            REQUIRE(s.found);
            REQUIRE(coboundary(g, s.phi).values == planted.values);
        }
}

TEST_CASE("extension over GL(2,3)") {
    const Instance in = resolve(corpus_instance("gl23"));
    const AmbientQuotient amb = build_ambient(in.gamma, in.D, in.k);
    const UntwistBundle u = untwist(amb, in.H);
    const TwistedExtension b = extract_twisted_extension(amb, u);
    REQUIRE(b.checks.all_ok());
    REQUIRE(b.F.group.order() == 2);
    REQUIRE(b.EG.alg.dim() == 24);
    REQUIRE(b.target.dim() == 24);
    REQUIRE(b.S_alpha.dim() == 6);
    REQUIRE(oracle::multiplicative_on_basis(b.EG.alg, b.target, b.psi_tilde));
    REQUIRE(rank(b.psi_tilde) == 24);

    // Cocycle identity on all 8 triples, written out.
    const auto& R = b.pres_ref.R;
    const FiniteGroup& F = b.F.group;
    for (GIdx x = 0; x < 2; ++x)
        for (GIdx y = 0; y < 2; ++y)
            for (GIdx z = 0; z < 2; ++z)
                REQUIRE(R.mul(b.alpha.at(F.mul(x, y), z), b.pres_ref.sigma[z].apply(b.alpha.at(x, y))) ==
                        R.mul(b.alpha.at(x, F.mul(y, z)), b.alpha.at(y, z)));

    // Exhaustive coboundary search over central units agrees with the report.
    const auto units = central_units(R);
    bool exists = false;
    for (const auto& a : units)
        for (const auto& c : units)
            if (coboundary(b.pres_ref, {a, c}).values == b.alpha.values) exists = true;
    REQUIRE(b.coboundary.found == exists);
}

TEST_CASE("no extension gives the trivial table") {
    const Instance in = resolve(corpus_instance("sl23"));
    const AmbientQuotient amb = build_ambient(in.gamma, in.D, in.k);
    const UntwistBundle u = untwist(amb, in.H);
    const TwistedExtension b = extract_twisted_extension(amb, u);
    REQUIRE(b.checks.all_ok());
    REQUIRE(b.F.group.order() == 1);
    REQUIRE(b.alpha.values.size() == 1);
    REQUIRE(b.alpha.values[0] == b.pres_ref.R.one());
}

TEST_CASE("G-stable ideal transfer") {
    const Instance in = resolve(corpus_instance("gl23"));
    const AmbientQuotient amb = build_ambient(in.gamma, in.D, in.k);
    const UntwistBundle u = untwist(amb, in.H);
    const TwistedExtension b = extract_twisted_extension(amb, u);
    const StructAlgebra& R = u.iso.R;
    const std::size_t nf = u.iso.HD.group.order();
    SECTION("augmentation ideal") {
        std::vector<Vec> w;
        for (std::size_t s = 0; s < amb.cert.m; ++s)
            for (std::size_t f = 1; f < nf; ++f) {
                Vec v(R.dim(), 0);
                v[s * nf + f] = 1;
                v[s * nf] = in.k.neg(1);
                w.push_back(v);
            }
        const Subspace A = pullback_ideal(amb, u, Subspace::span(in.k, R.dim(), w));
        const TransferReport tr = transfer_g_stable_ideal(amb, u, b, A);
        REQUIRE(tr.checks.all_ok());
        REQUIRE(tr.stable_kH);
        REQUIRE(tr.stable_R);
        REQUIRE(tr.product_identity.value_or(false));
    }
    SECTION("orbit ideal") {
        const Subspace A = pullback_ideal(amb, u, Subspace(in.k, R.dim()));
        const TransferReport tr = transfer_g_stable_ideal(amb, u, b, A);
        REQUIRE(tr.a_frak.dim() == 0);
        REQUIRE(tr.stable_kH);
        REQUIRE(tr.equivalent);
    }
    SECTION("a non-stable ideal: C3 wr C2") {
        Instance w;
        w.gamma = FiniteGroup::from_permutations(6, {{1, 2, 0, 3, 4, 5}, {0, 1, 2, 4, 5, 3}, {3, 4, 5, 0, 1, 2}});
        w.D = trivial_subgroup();
        w.k = k3;
        w.H = generate_subgroup(w.gamma, {w.gamma.generator_indices()[0], w.gamma.generator_indices()[1]});
        const AmbientQuotient a2 = build_ambient(w.gamma, w.D, w.k);
        const UntwistBundle u2 = untwist(a2, w.H);
        const TwistedExtension b2 = extract_twisted_extension(a2, u2);
        REQUIRE(b2.checks.all_ok());
        const StructAlgebra kH = group_algebra(u2.fiber.h_group.group, w.k);
        const GIdx g = u2.fiber.h_group.index_of[w.gamma.generator_indices()[0]];
        Vec x(kH.dim(), 0);
        x[g] = 1;
        x[0] = 2;
        const TransferReport tr = transfer_g_stable_ideal(a2, u2, b2, ideal_generate(kH, {x}));
        REQUIRE_FALSE(tr.stable_kH);
        REQUIRE_FALSE(tr.stable_R);
        REQUIRE(tr.equivalent);
    }
}
