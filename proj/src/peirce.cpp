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

#include "primequot/peirce.hpp"

#include <algorithm>

#include "primequot/ideals.hpp"

namespace primequot {

std::vector<std::vector<std::size_t>> PeirceSystem::dims() const {
    std::vector<std::vector<std::size_t>> d(r(), std::vector<std::size_t>(r()));
    for (std::size_t i = 0; i < r(); ++i)
        for (std::size_t j = 0; j < r(); ++j) d[i][j] = block(i, j).dim();
    return d;
}

PeirceSystem peirce_decompose(const StructAlgebra& R, const std::vector<Vec>& idem, const std::vector<Vec>& e1i,
                              const std::vector<Vec>& ei1) {
    const std::size_t r = idem.size();
    if (r == 0 || e1i.size() != r || ei1.size() != r) throw AlgebraError("peirce: need r idempotents and transports");
    PeirceSystem s;
    s.R = R;
    s.idem = idem;
    s.e1i = e1i;
    s.ei1 = ei1;
    bool orth = true;
    Vec sum = R.zero();
    for (std::size_t i = 0; i < r; ++i) {
        sum = R.add(sum, idem[i]);
        for (std::size_t j = 0; j < r; ++j) orth = orth && R.mul(idem[i], idem[j]) == (i == j ? idem[i] : R.zero());
    }
    if (!orth) throw AlgebraError("peirce: idempotents are not orthogonal");
    if (sum != R.one()) throw AlgebraError("peirce: idempotents do not sum to 1");
    const Subspace full = Subspace::full(R.field(), R.dim());
    std::size_t total = 0;
    Subspace all(R.field(), R.dim());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            s.blocks.push_back(sandwich(R, idem[i], full, idem[j]));
            total += s.blocks.back().dim();
            all = all + s.blocks.back();
        }
    s.checks.add("blocks tile R", total == R.dim() && all.dim() == R.dim());
    bool unital = true;
    for (std::size_t i = 0; i < r; ++i) {
        const Subspace& b = s.block(i, i);
        for (const auto& v : b.basis()) unital = unital && R.mul(idem[i], v) == v && R.mul(v, idem[i]) == v;
        unital = unital && product_space(R, b, b).dim() <= b.dim() && b.contains(product_space(R, b, b));
    }
    s.checks.add("R_ii unital with identity e_i", unital);
    bool transport = true;
    for (std::size_t i = 0; i < r; ++i) {
        transport = transport && s.block(0, i).contains(e1i[i]) && s.block(i, 0).contains(ei1[i]);
        transport = transport && R.mul(e1i[i], ei1[i]) == idem[0] && R.mul(ei1[i], e1i[i]) == idem[i];
    }
    s.checks.add("transport elements connect e_1 and e_i", transport);
    s.S1 = subalgebra(R, s.block(0, 0), idem[0]);
    return s;
}

MatrixUnitsIso matrix_units_iso(const PeirceSystem& sys) {
    const StructAlgebra& R = sys.R;
    const std::size_t r = sys.r(), ds = sys.S1.alg.dim();
    MatrixUnitsIso m;
    m.target = tensor(matrix_algebra(R.field(), r), sys.S1.alg);
    m.iso = Matrix(R.field(), m.target.dim(), R.dim());
    for (std::size_t x = 0; x < R.dim(); ++x)
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) {
                const Vec c = sys.S1.to_local(R.mul(R.mul(sys.e1i[i], R.basis(x)), sys.ei1[j]));
                for (std::size_t s = 0; s < ds; ++s) m.iso.at((i * r + j) * ds + s, x) = c[s];
            }
    m.checks.add("dim R = r^2 dim S1", R.dim() == m.target.dim(),
                 std::to_string(R.dim()) + " vs " + std::to_string(m.target.dim()));
    m.checks.add("iso bijective", R.dim() == m.target.dim() && rank(m.iso) == R.dim());
    m.checks.add("iso multiplicative", is_multiplicative(R, m.target, m.iso));
    bool corner = true;
    for (std::size_t l = 0; l < ds; ++l) {
        Vec want(m.target.dim(), 0);
        want[l] = 1;
        corner = corner && m.iso.apply(sys.S1.to_parent(sys.S1.alg.basis(l))) == want;
    }
    m.checks.add("iso restricted to the (1,1) corner is the identity", corner);
    return m;
}

CheckList block_product_check(const PeirceSystem& sys, const Subspace& A) {
    const StructAlgebra& R = sys.R;
    const std::size_t r = sys.r();
    CheckList c;
    std::vector<Subspace> ab;
    std::size_t total = 0;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            ab.push_back(sandwich(R, sys.idem[i], A, sys.idem[j]));
            total += ab.back().dim();
        }
    c.add("A = sum of A_ij", total == A.dim() && std::all_of(ab.begin(), ab.end(), [&](const Subspace& s) { return A.contains(s); }));
    const Subspace zero(R.field(), R.dim());
    std::size_t bad = 0;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t k = 0; k < r; ++k)
                for (std::size_t l = 0; l < r; ++l) {
                    const Subspace lhs = product_space(R, ab[i * r + j], sys.block(k, l));
                    if (!(lhs == (j == k ? ab[i * r + l] : zero))) ++bad;
                }
    c.add("A_ij R_kl = delta_jk A_il on all quadruples", bad == 0, std::to_string(r * r * r * r) + " quadruples");
    return c;
}

OrbitPeirce peirce_from_orbit(const AmbientQuotient& amb, std::size_t orbit) {
    if (orbit >= amb.orbits.size()) throw HypothesisError("orbit index out of range");
    const FiniteGroup& G = amb.gamma;
    const StructAlgebra& bg = amb.barKG.alg;
    const Field& k = amb.k;
    OrbitPeirce op;
    op.orbit = orbit;
    op.X = amb.orbits[orbit].points;
    const std::size_t r = op.X.size();
    std::vector<Vec> ebar;
    op.f = bg.zero();
    for (auto i : op.X) {
        ebar.push_back(amb.iota_of(amb.cpi.idempotents[i]));
        op.f = bg.add(op.f, ebar.back());
    }
    op.Rsub = subalgebra(bg, left_translate(bg, op.f, Subspace::full(k, bg.dim())), op.f);
    for (GIdx g = 0; g < G.order(); ++g) op.group_images.push_back(op.Rsub.to_local(bg.mul(op.f, amb.gbar[g])));

    op.pair_units.assign(r * r, UINT32_MAX);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            for (GIdx g = 0; g < G.order(); ++g)
                if (amb.cpi_action[g][op.X[j]] == op.X[i]) {
                    op.pair_units[i * r + j] = g;
                    break;
                }
    op.checks.add("Gamma permutes the orbit transitively",
                  std::none_of(op.pair_units.begin(), op.pair_units.end(), [](GIdx g) { return g == UINT32_MAX; }));
    require(op.checks, "peirce");
    for (std::size_t i = 0; i < r; ++i) {
        Subgroup s;
        for (GIdx g = 0; g < G.order(); ++g)
            if (amb.cpi_action[g][op.X[i]] == op.X[i]) s.elems.push_back(g);
        op.stabilizers.push_back(std::move(s));
    }

    std::vector<Vec> idem, e1i, ei1;
    for (std::size_t i = 0; i < r; ++i) {
        const GIdx g = op.pair_units[0 * r + i];
        idem.push_back(op.Rsub.to_local(ebar[i]));
        e1i.push_back(op.Rsub.to_local(bg.mul(ebar[0], amb.gbar[g])));
        ei1.push_back(op.Rsub.to_local(bg.mul(amb.gbar[G.inv(g)], ebar[0])));
    }
    op.sys = peirce_decompose(op.Rsub.alg, idem, e1i, ei1);
    op.checks.append(op.sys.checks);

    const Subspace corner = sandwich(bg, ebar[0], Subspace::full(k, bg.dim()), ebar[0]);
    std::vector<Vec> g1;
    for (GIdx g : op.stabilizers[0].elems) g1.push_back(bg.mul(ebar[0], amb.gbar[g]));
    op.checks.add("e_1 barKG e_1 = e_1 barKG_1", corner == Subspace::span(k, bg.dim(), g1));
    return op;
}

DaggerBlocksReport dagger_blocks(const OrbitPeirce& op, const FiniteGroup& gamma, const Subspace& A) {
    const PeirceSystem& sys = op.sys;
    const StructAlgebra& R = sys.R;
    const std::size_t r = sys.r();
    if (A.dim() == R.dim()) throw HypothesisError("A = R");
    if (!is_two_sided_ideal(R, A)) throw HypothesisError("A is not an ideal of R");
    DaggerBlocksReport rep;
    bool stable = true;
    for (GIdx g = 0; g < gamma.order() && stable; ++g) {
        const Vec& gi = op.group_images[gamma.inv(g)];
        const Vec& gg = op.group_images[g];
        std::vector<Vec> c;
        for (const auto& v : A.basis()) c.push_back(R.mul(R.mul(gi, v), gg));
        stable = Subspace::span(R.field(), R.dim(), c) == A;
    }
    rep.checks.add("A is Gamma-stable", stable);
    rep.A_dagger = dagger(R, A, op.group_images, R.one());
    Subgroup inter = whole_group(gamma);
    for (std::size_t i = 0; i < r; ++i) {
        const Subspace Bi = sandwich(R, sys.idem[i], A, sys.idem[i]);
        Subgroup bd;
        for (GIdx g : op.stabilizers[i].elems)
            if (Bi.contains(R.sub(R.mul(sys.idem[i], op.group_images[g]), sys.idem[i]))) bd.elems.push_back(g);
        rep.B_dagger.push_back(bd);
        inter = intersect(inter, bd);
    }
    Subgroup stab = whole_group(gamma);
    for (const auto& s : op.stabilizers) stab = intersect(stab, s);
    rep.checks.add("A dagger inside the intersection of the G_i",
                   std::all_of(rep.A_dagger.elems.begin(), rep.A_dagger.elems.end(), [&](GIdx g) { return stab.contains(g); }));
    rep.checks.add("A dagger = intersection of the B_i dagger", rep.A_dagger == inter);
    bool orbit = true;
    for (std::size_t i = 0; i < r; ++i)
        orbit = orbit && conjugate(gamma, rep.B_dagger[0], op.pair_units[0 * r + i]) == rep.B_dagger[i];
    rep.checks.add("B_i dagger form one conjugacy orbit", orbit);
    return rep;
}

BlockControlReport control_reduction_blocks(const AmbientQuotient& amb, const OrbitPeirce& op, const Subspace& P,
                                        const Subgroup& H) {
    const FiniteGroup& G = amb.gamma;
    const StructAlgebra& bg = amb.barKG.alg;
    const Field& k = amb.k;
    const std::size_t r = op.X.size();
    if (!is_normal(G, H)) throw HypothesisError("H is not normal");
    if (!std::all_of(amb.D.elems.begin(), amb.D.elems.end(), [&](GIdx g) { return H.contains(g); }))
        throw HypothesisError("H does not contain D");
    if (!is_two_sided_ideal(amb.kG, P)) throw HypothesisError("P is not an ideal of kGamma");
    const Subspace full = Subspace::full(k, bg.dim());
    if (!P.contains(preimage_of(amb.barKG.projection_matrix(), left_translate(bg, bg.sub(bg.one(), op.f), full))))
        throw HypothesisError("P does not contain the orbit ideal");

    BlockControlReport rep;
    std::vector<Vec> kh;
    for (GIdx g : H.elems) kh.push_back(amb.kG.basis(g));
    rep.P_controlled = control_check(amb.kG, P, Subspace::span(k, amb.kG.dim(), kh));
    std::vector<Vec> gimg;
    for (GIdx g = 0; g < G.order(); ++g) gimg.push_back(amb.kG.basis(g));
    rep.P_dagger = dagger(amb.kG, P, gimg, amb.kG.one());

    const Subspace pbar = image_of(amb.barKG.projection_matrix(), P);
    const std::size_t ncpi = amb.cpi.idempotents.size();
    // Minimal primes of kD: kernels of x -> e_j x in kD/J.
    std::vector<Subspace> primes;
    for (std::size_t j = 0; j < ncpi; ++j) {
        Matrix m(k, amb.barKD.alg.dim(), amb.kD.dim());
        for (std::size_t l = 0; l < amb.kD.dim(); ++l) {
            const Vec v = amb.barKD.alg.mul(amb.cpi.idempotents[j], amb.barKD.project(amb.kD.basis(l)));
            for (std::size_t i = 0; i < v.size(); ++i) m.at(i, l) = v[i];
        }
        primes.push_back(kernel_of(m));
    }
    bool only_own = true;
    Subgroup inter = whole_group(G);
    bool all_q = true;
    for (std::size_t i = 0; i < r; ++i) {
        const SubgroupGroup gi = subgroup_as_group(G, op.stabilizers[i]);
        const StructAlgebra kgi = group_algebra(gi.group, k);
        const Vec ei = amb.iota_of(amb.cpi.idempotents[op.X[i]]);
        Matrix m(k, bg.dim(), kgi.dim());
        for (std::size_t l = 0; l < kgi.dim(); ++l) {
            const Vec v = bg.mul(ei, amb.gbar[gi.inclusion(static_cast<GIdx>(l))]);
            for (std::size_t row = 0; row < v.size(); ++row) m.at(row, l) = v[row];
        }
        const Subspace Qi = preimage_of(m, sandwich(bg, ei, pbar, ei));
        rep.checks.add("Q_" + std::to_string(i + 1) + " is an ideal of kG_i", is_two_sided_ideal(kgi, Qi));
        std::vector<Vec> khi;
        for (GIdx g : op.stabilizers[i].elems)
            if (H.contains(g)) khi.push_back(kgi.basis(gi.index_of[g]));
        const bool qc = control_check(kgi, Qi, Subspace::span(k, kgi.dim(), khi));
        rep.Q_controlled.push_back(qc);
        all_q = all_q && qc;
        std::vector<Vec> kd_in;
        for (GIdx g : amb.D.elems) kd_in.push_back(kgi.basis(gi.index_of[g]));
        const Subspace qd = intersect(Qi, Subspace::span(k, kgi.dim(), kd_in));
        std::vector<Vec> qd_kd;
        for (const auto& v : qd.basis()) {
            Vec w(amb.kD.dim(), 0);
            for (std::size_t l = 0; l < amb.D.order(); ++l) w[l] = v[gi.index_of[amb.D.elems[l]]];
            qd_kd.push_back(w);
        }
        const Subspace qdk = Subspace::span(k, amb.kD.dim(), qd_kd);
        for (std::size_t j = 0; j < ncpi; ++j) only_own = only_own && primes[j].contains(qdk) == (j == op.X[i]);
        Subgroup qdag;
        for (GIdx g : op.stabilizers[i].elems) {
            const std::size_t l = gi.index_of[g];
            if (Qi.contains(kgi.sub(kgi.basis(l), kgi.one()))) qdag.elems.push_back(g);
        }
        rep.Q_dagger.push_back(qdag);
        inter = intersect(inter, qdag);
        rep.Q.push_back(Qi);
    }
    rep.control_equivalent = rep.P_controlled == all_q;
    rep.checks.add("Q_i cap kD lies only in its own minimal prime", only_own);
    rep.checks.add("P controlled by H iff every Q_i controlled by H_i", rep.control_equivalent);
    rep.checks.add("P dagger = intersection of Q_i dagger", rep.P_dagger == inter);
    return rep;
}

}  // namespace primequot
