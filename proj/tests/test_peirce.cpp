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
#include "primequot/ideals.hpp"
#include "primequot/instance.hpp"
#include "primequot/peirce.hpp"
#include "primequot/radical.hpp"

using namespace primequot;

namespace {

const Field k2 = Field::prime(2);

Perm affine(std::uint32_t a, std::uint32_t b, std::size_t degree = 7) {
    Perm p(degree);
    for (std::uint32_t x = 0; x < degree; ++x) p[x] = x < 7 ? (a * x + b) % 7 : x;
    return p;
}

struct D7 {
    Instance in = resolve(corpus_instance("d7"));
    AmbientQuotient amb = build_ambient(in.gamma, in.D, in.k);
    std::size_t orbit_of_size(std::size_t n) const {
        for (std::size_t o = 0; o < amb.orbits.size(); ++o)
            if (amb.orbits[o].points.size() == n) return o;
        FAIL("no orbit of that size");
        return 0;
    }
};

Subspace span_of(const StructAlgebra& a, const std::vector<Vec>& v) { return Subspace::span(a.field(), a.dim(), v); }

}  // namespace

TEST_CASE("Peirce systems by hand") {
    SECTION("a single idempotent") {
        const StructAlgebra a = group_algebra(FiniteGroup::from_permutations(3, {{1, 2, 0}}), k2);
        const PeirceSystem sys = peirce_decompose(a, {a.one()}, {a.one()}, {a.one()});
        REQUIRE(sys.checks.all_ok());
        REQUIRE(sys.r() == 1);
        REQUIRE(sys.block(0, 0).dim() == 3);
        const MatrixUnitsIso mu = matrix_units_iso(sys);
        REQUIRE(mu.checks.all_ok());
        REQUIRE(mu.target.dim() == 3);
    }
    SECTION("M_2 with the diagonal idempotents") {
        const StructAlgebra m = matrix_algebra(k2, 2);
        const Vec e11{1, 0, 0, 0}, e12{0, 1, 0, 0}, e21{0, 0, 1, 0}, e22{0, 0, 0, 1};
        const PeirceSystem sys = peirce_decompose(m, {e11, e22}, {e11, e12}, {e11, e21});
        REQUIRE(sys.checks.all_ok());
        REQUIRE(sys.dims() == std::vector<std::vector<std::size_t>>{{1, 1}, {1, 1}});
        REQUIRE(sys.block(0, 1) == span_of(m, {e12}));
        REQUIRE(sys.block(1, 0) == span_of(m, {e21}));
        const MatrixUnitsIso mu = matrix_units_iso(sys);
        REQUIRE(mu.checks.all_ok());
        REQUIRE(mu.iso == Matrix::identity(k2, 4));
    }
    SECTION("idempotents that do not sum to 1") {
        const StructAlgebra m = matrix_algebra(k2, 2);
        const Vec e11{1, 0, 0, 0};
        REQUIRE_THROWS_AS(peirce_decompose(m, {e11}, {e11}, {e11}), AlgebraError);
        REQUIRE_THROWS_AS(peirce_decompose(m, {e11, e11}, {e11, e11}, {e11, e11}), AlgebraError);
    }
}

TEST_CASE("the dihedral block") {
    const D7 d;
    const OrbitPeirce op = peirce_from_orbit(d.amb, d.orbit_of_size(2));
    REQUIRE(op.checks.all_ok());
    REQUIRE(op.sys.R.dim() == 12);
    REQUIRE(op.sys.r() == 2);
    REQUIRE(op.sys.dims() == std::vector<std::vector<std::size_t>>{{3, 3}, {3, 3}});
    REQUIRE(op.sys.S1.alg.dim() == 3);
    REQUIRE(op.stabilizers[0] == d.in.D);

    const MatrixUnitsIso mu = matrix_units_iso(op.sys);
    REQUIRE(mu.checks.all_ok());
    REQUIRE(mu.target.dim() == 12);
    REQUIRE(rank(mu.iso) == 12);
    REQUIRE(oracle::multiplicative_on_basis(op.sys.R, mu.target, mu.iso));
    // S1 is a field with 8 elements: every nonzero element is invertible.
    REQUIRE(radical(op.sys.S1.alg).J.dim() == 0);
    REQUIRE(is_prime(op.sys.S1.alg, Subspace(k2, 3)).blocks == 1);

    // e_1 barKG e_1 is spanned by e_1 g for g in the stabilizer.
    std::vector<Vec> corner;
    for (GIdx g : op.stabilizers[0].elems) corner.push_back(op.sys.R.mul(op.sys.idem[0], op.group_images[g]));
    REQUIRE(span_of(op.sys.R, corner) == op.sys.block(0, 0));
}

TEST_CASE("block law on ideals") {
    const D7 d;
    for (std::size_t size : {1u, 2u}) {
        const OrbitPeirce op = peirce_from_orbit(d.amb, d.orbit_of_size(size));
        const StructAlgebra& R = op.sys.R;
        REQUIRE(block_product_check(op.sys, Subspace(k2, R.dim())).all_ok());
        REQUIRE(block_product_check(op.sys, Subspace::full(k2, R.dim())).all_ok());
        REQUIRE(block_product_check(op.sys, radical(R).J).all_ok());
        for (const auto& A : enumerate_ideals(R).ideals) REQUIRE(block_product_check(op.sys, A).all_ok());
    }
}

TEST_CASE("daggers blockwise") {
    const D7 d;
    const OrbitPeirce op = peirce_from_orbit(d.amb, d.orbit_of_size(2));
    const StructAlgebra& R = op.sys.R;
    const DaggerBlocksReport zero = dagger_blocks(op, d.in.gamma, Subspace(k2, R.dim()));
    REQUIRE(zero.checks.all_ok());
    REQUIRE(zero.A_dagger == trivial_subgroup());
    REQUIRE_THROWS_AS(dagger_blocks(op, d.in.gamma, Subspace::full(k2, R.dim())), HypothesisError);

    // D7 x C2 with D = C7: the ideal generated by f(1 + c) has dagger <c>.
    const Perm c{0, 1, 2, 3, 4, 5, 6, 8, 7};
    const FiniteGroup g = FiniteGroup::from_permutations(9, {affine(1, 1, 9), affine(6, 0, 9), c});
    const Subgroup D = generate_subgroup(g, {g.generator_indices()[0]});
    const AmbientQuotient amb = build_ambient(g, D, k2);
    std::size_t o = 0;
    while (amb.orbits[o].points.size() != 2) ++o;
    const OrbitPeirce pp = peirce_from_orbit(amb, o);
    REQUIRE(pp.checks.all_ok());
    REQUIRE(pp.sys.R.dim() == 24);
    const GIdx ci = g.generator_indices()[2];
    const Subspace A = ideal_generate(pp.sys.R, {pp.sys.R.add(pp.group_images[0], pp.group_images[ci])});
    REQUIRE(A.dim() == 12);
    const DaggerBlocksReport dr = dagger_blocks(pp, g, A);
    REQUIRE(dr.checks.all_ok());
    REQUIRE(dr.A_dagger == generate_subgroup(g, {ci}));
    for (const auto& b : dr.B_dagger) REQUIRE(b == dr.A_dagger);
    // Direct: g with f(g - 1) in A.
    std::vector<GIdx> direct;
    for (GIdx x = 0; x < g.order(); ++x)
        if (A.contains(pp.sys.R.sub(pp.group_images[x], pp.group_images[0]))) direct.push_back(x);
    REQUIRE(direct == dr.A_dagger.elems);
}

TEST_CASE("control through the blocks") {
    const D7 d;
    const StructAlgebra& bg = d.amb.barKG.alg;
    auto controlled = [&](const Subspace& P, const Subgroup& H) {
        std::vector<Vec> w;
        for (GIdx h : H.elems) w.push_back(d.amb.kG.basis(h));
        return control_check(d.amb.kG, P, span_of(d.amb.kG, w));
    };
    SECTION("orbit ideal of the faithful block") {
        const std::size_t o = d.orbit_of_size(2);
        const OrbitPeirce op = peirce_from_orbit(d.amb, o);
        const OrbitIdealData oi = orbit_ideal(d.amb, o);
        const BlockControlReport te = control_reduction_blocks(d.amb, op, oi.M, d.in.D);
        REQUIRE(te.checks.all_ok());
        REQUIRE(te.P_controlled);
        REQUIRE(te.P_controlled == controlled(oi.M, d.in.D));
        REQUIRE(te.Q_controlled == std::vector<bool>{true, true});
        REQUIRE(te.control_equivalent);
        REQUIRE(te.P_dagger == trivial_subgroup());
    }
    SECTION("adding the radical of the fixed block breaks control") {
        const std::size_t o = d.orbit_of_size(1);
        const OrbitPeirce op = peirce_from_orbit(d.amb, o);
        const OrbitIdealData oi = orbit_ideal(d.amb, o);
        const Subspace frad = left_translate(bg, op.f, radical(bg).J);
        REQUIRE(frad.dim() == 1);
        const Subspace P = oi.M + preimage_of(d.amb.barKG.projection_matrix(), frad);
        const BlockControlReport te = control_reduction_blocks(d.amb, op, P, d.in.D);
        REQUIRE(te.checks.all_ok());
        REQUIRE_FALSE(te.P_controlled);
        REQUIRE_FALSE(controlled(P, d.in.D));
        REQUIRE(te.Q_controlled == std::vector<bool>{false});
        REQUIRE(te.control_equivalent);
        REQUIRE(te.P_dagger == whole_group(d.in.gamma));

        const BlockControlReport whole = control_reduction_blocks(d.amb, op, P, whole_group(d.in.gamma));
        REQUIRE(whole.checks.all_ok());
        REQUIRE(whole.P_controlled);
    }
}
