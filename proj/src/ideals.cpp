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

#include "primequot/ideals.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "primequot/radical.hpp"
#include "primequot/wedderburn.hpp"

namespace primequot {

namespace {

// Nonzero vectors of a subspace with leading coordinate 1, in index order.
template <class F>
bool for_each_projective(const Subspace& q, std::uint64_t& budget, F&& fn) {
    const Field& k = q.field();
    const std::size_t d = q.dim();
    for (std::size_t lead = 0; lead < d; ++lead) {
        const std::size_t rest = d - lead - 1;
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < rest; ++i) count *= k.size();
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            if (budget == 0) return false;
            --budget;
            Vec c(d, 0);
            c[lead] = 1;
            std::uint64_t t = idx;
            for (std::size_t i = lead + 1; i < d; ++i) {
                c[i] = static_cast<Elem>(t % k.size());
                t /= k.size();
            }
            fn(q.combine(c));
        }
    }
    return true;
}

std::vector<Vec> lifted_primitive_idempotents(const StructAlgebra& a, const Subspace& J) {
    if (a.dim() == 0) return {};
    const QuotientAlgebra q = quotient_algebra(a, J);
    std::vector<Vec> out;
    for (const auto& e : central_primitive_idempotents(q.alg).idempotents) {
        const WedderburnCertificate cert = wedderburn_split(q.alg, e);
        Vec y = q.lift(cert.component.to_parent(cert.units[0]));
        // y -> 3y^2 - 2y^3 squares the defect y^2 - y at every step.
        const Field& k = a.field();
        for (std::size_t it = 0; it < 64; ++it) {
            const Vec y2 = a.mul(y, y);
            if (y2 == y) break;
            y = a.sub(a.scale(y2, k.from_int(3)), a.scale(a.mul(y2, y), k.from_int(2)));
        }
        if (a.mul(y, y) != y) throw AlgebraError("idempotent lift did not converge");
        out.push_back(y);
    }
    return out;
}

}  // namespace

IdealLattice enumerate_ideals(const StructAlgebra& a, std::uint64_t cap) {
    const Field& k = a.field();
    const std::size_t d = a.dim();
    const Subspace J = radical(a).J;
    // Every simple subbimodule of T_I / I meets some eps_c (T_I / I) eps_e,
    // where the eps are lifts of one primitive idempotent per simple block of
    // A / J. Generators are drawn from these corners only.
    const std::vector<Vec> eps = lifted_primitive_idempotents(a, J);
    IdealLattice out;
    std::set<Subspace> seen;
    std::deque<Subspace> queue;
    const Subspace zero(k, d);
    seen.insert(zero);
    queue.push_back(zero);
    std::uint64_t budget = cap;
    while (!queue.empty()) {
        const Subspace I = queue.front();
        queue.pop_front();
        if (I.dim() == d) continue;
        // T_I = {x : x J + J x inside I}.
        const std::size_t nj = J.dim();
        Matrix sys(k, 2 * nj * d, d);
        for (std::size_t l = 0; l < d; ++l) {
            const Vec b = a.basis(l);
            for (std::size_t j = 0; j < nj; ++j) {
                const Vec r1 = I.reduce(a.mul(b, J.basis()[j]));
                const Vec r2 = I.reduce(a.mul(J.basis()[j], b));
                for (std::size_t r = 0; r < d; ++r) {
                    sys.at((2 * j) * d + r, l) = r1[r];
                    sys.at((2 * j + 1) * d + r, l) = r2[r];
                }
            }
        }
        const Matrix ns = nullspace(sys);
        const Subspace T = Subspace::span(k, d, ns.row_list());
        bool done = true;
        for (std::size_t c = 0; c < eps.size() && done; ++c)
            for (std::size_t e = 0; e < eps.size() && done; ++e) {
                const Subspace corner = sandwich(a, eps[c], T, eps[e]);
                std::vector<Vec> red;
                for (const auto& v : corner.basis()) red.push_back(I.reduce(v));
                done = for_each_projective(Subspace::span(k, d, red), budget, [&](const Vec& x) {
                    std::vector<Vec> gens = I.basis();
                    gens.push_back(x);
                    Subspace n = ideal_generate(a, gens);
                    if (seen.insert(n).second) queue.push_back(std::move(n));
                });
            }
        if (!done) {
            out.complete = false;
            break;
        }
    }
    out.ideals.assign(seen.begin(), seen.end());
    std::stable_sort(out.ideals.begin(), out.ideals.end(),
                     [](const Subspace& x, const Subspace& y) { return x.dim() < y.dim(); });
    return out;
}

PrimeCertificate is_prime(const StructAlgebra& a, const Subspace& I) {
    PrimeCertificate c;
    c.quotient_dim = a.dim() - I.dim();
    if (c.quotient_dim == 0) return c;
    const QuotientAlgebra q = quotient_algebra(a, I);
    c.radical_dim = radical(q.alg).J.dim();
    if (c.radical_dim != 0) return c;
    c.blocks = central_primitive_idempotents(q.alg).idempotents.size();
    c.prime = c.blocks == 1;
    return c;
}

Subgroup dagger(const StructAlgebra& a, const Subspace& I, const std::vector<Vec>& group_images, const Vec& one) {
    Subgroup s;
    for (std::size_t g = 0; g < group_images.size(); ++g)
        if (I.contains(a.sub(group_images[g], one))) s.elems.push_back(static_cast<GIdx>(g));
    return s;
}

bool control_check(const StructAlgebra& a, const Subspace& I, const Subspace& S) {
    return product_space(a, intersect(I, S), Subspace::full(a.field(), a.dim())) == I;
}

Subspace matrix_subspace(std::size_t t, std::size_t dim_r, const Subspace& x) {
    std::vector<Vec> vs;
    for (std::size_t ij = 0; ij < t * t; ++ij)
        for (const auto& b : x.basis()) {
            Vec v(t * t * dim_r, 0);
            std::copy(b.begin(), b.end(), v.begin() + static_cast<std::ptrdiff_t>(ij * dim_r));
            vs.push_back(v);
        }
    return Subspace::span(x.field(), t * t * dim_r, vs);
}

Subspace matrix_entries(std::size_t t, std::size_t dim_r, const Subspace& x) {
    std::vector<Vec> vs;
    for (const auto& b : x.basis())
        for (std::size_t ij = 0; ij < t * t; ++ij)
            vs.emplace_back(b.begin() + static_cast<std::ptrdiff_t>(ij * dim_r),
                            b.begin() + static_cast<std::ptrdiff_t>((ij + 1) * dim_r));
    return Subspace::span(x.field(), dim_r, vs);
}

MatrixControlReport matrix_control(const StructAlgebra& r, const Subspace& I, const Subspace& S, std::size_t t) {
    MatrixControlReport rep;
    rep.small = control_check(r, I, S);
    const StructAlgebra mt = tensor(matrix_algebra(r.field(), t), r);
    rep.big = control_check(mt, matrix_subspace(t, r.dim(), I), matrix_subspace(t, r.dim(), S));
    return rep;
}

Subspace morita_lift(std::size_t t, std::size_t dim_s, const Subspace& j) { return matrix_subspace(t, dim_s, j); }

MoritaReport morita_transfer(const StructAlgebra& mt, std::size_t t, std::size_t dim_s, const Subspace& J) {
    MoritaReport rep;
    Vec e11(mt.dim(), 0);
    for (std::size_t s = 0; s < dim_s; ++s) e11[s] = mt.one()[s];
    const Subspace corner = sandwich(mt, e11, J, e11);
    std::vector<Vec> vs;
    for (const auto& b : corner.basis()) vs.emplace_back(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(dim_s));
    rep.j_small = Subspace::span(mt.field(), dim_s, vs);
    rep.round_trip = morita_lift(t, dim_s, rep.j_small) == J;
    return rep;
}

CheckList morita_lattice_check(const StructAlgebra& s, std::size_t t) {
    CheckList c;
    const StructAlgebra mt = tensor(matrix_algebra(s.field(), t), s);
    const IdealLattice ls = enumerate_ideals(s), lm = enumerate_ideals(mt);
    c.add("lattices enumerated", ls.complete && lm.complete);
    c.add("lattice sizes agree", ls.ideals.size() == lm.ideals.size(),
          std::to_string(ls.ideals.size()) + " vs " + std::to_string(lm.ideals.size()));
    std::vector<Subspace> lifts;
    bool ideal = true, round = true;
    for (const auto& i : ls.ideals) {
        lifts.push_back(morita_lift(t, s.dim(), i));
        ideal = ideal && std::find(lm.ideals.begin(), lm.ideals.end(), lifts.back()) != lm.ideals.end();
        round = round && morita_transfer(mt, t, s.dim(), lifts.back()).j_small == i;
    }
    for (const auto& J : lm.ideals) round = round && morita_transfer(mt, t, s.dim(), J).round_trip;
    c.add("M_t(I) is an ideal of M_t(S)", ideal);
    c.add("transfer round-trips", round);
    bool order = true;
    for (std::size_t x = 0; x < ls.ideals.size(); ++x)
        for (std::size_t y = 0; y < ls.ideals.size(); ++y)
            order = order && ls.ideals[y].contains(ls.ideals[x]) == lifts[y].contains(lifts[x]);
    c.add("inclusion preserved and reflected", order);
    return c;
}

OrbitIdealData orbit_ideal(const AmbientQuotient& amb, std::size_t orbit) {
    if (orbit >= amb.orbits.size()) throw HypothesisError("orbit index out of range");
    const StructAlgebra& bg = amb.barKG.alg;
    const Subspace full = Subspace::full(amb.k, bg.dim());
    OrbitIdealData o;
    o.orbit = orbit;
    o.X = amb.orbits[orbit].points;
    o.f = bg.zero();
    for (auto i : o.X) o.f = bg.add(o.f, amb.iota_of(amb.cpi.idempotents[i]));
    o.checks.add("f idempotent", is_idempotent(bg, o.f));
    o.checks.add("f central", is_central(bg, o.f));
    o.M = preimage_of(amb.barKG.projection_matrix(), left_translate(bg, bg.sub(bg.one(), o.f), full));
    o.checks.add("M_X two-sided", is_two_sided_ideal(amb.kG, o.M));
    o.dim_f_barKG = left_translate(bg, o.f, full).dim();
    o.prime = is_prime(amb.kG, o.M);
    return o;
}

Subgroup power_subgroup(const FiniteGroup& g, const Subgroup& s, std::uint64_t m) {
    std::vector<GIdx> gens;
    for (GIdx x : s.elems) gens.push_back(g.pow(x, m));
    return generate_subgroup(g, gens);
}

DeltaDaggerReport delta_dagger(const AmbientQuotient& amb, const UntwistBundle& u, const Subspace& P_EH) {
    const UntwistIso& th = u.iso;
    const FiberGroup& fb = u.fiber;
    const StructAlgebra& bg = amb.barKG.alg;
    const StructAlgebra& eh = th.EH.alg;
    if (!is_two_sided_ideal(eh, P_EH)) throw HypothesisError("P does not give an ideal of e barKH");
    DeltaDaggerReport r;
    r.m = th.m_delta;
    const std::size_t nh = fb.H.order();
    std::vector<Vec> gimg, eimg;
    for (GIdx h = 0; h < nh; ++h) {
        gimg.push_back(th.EH.to_local(bg.mul(amb.e_bar, amb.gbar[fb.h_group.inclusion(h)])));
        eimg.push_back(th.EH.to_local(th.eps[h]));
    }
    auto to_gamma = [&](const Subgroup& s) {
        Subgroup out;
        for (GIdx h : s.elems) out.elems.push_back(fb.h_group.inclusion(h));
        std::sort(out.elems.begin(), out.elems.end());
        return out;
    };
    const Subgroup pd = dagger(eh, P_EH, gimg, eh.one()), pdd = dagger(eh, P_EH, eimg, eh.one());
    r.P_dagger = to_gamma(pd);
    r.P_delta_dagger = to_gamma(pdd);
    r.checks.add("P dagger normal in H", is_subgroup(fb.h_group.group, pd.elems) && is_normal(fb.h_group.group, pd));
    r.checks.add("P delta-dagger normal in H", is_subgroup(fb.h_group.group, pdd.elems) && is_normal(fb.h_group.group, pdd));
    r.checks.add("D inside P delta-dagger", std::all_of(amb.D.elems.begin(), amb.D.elems.end(),
                                                         [&](GIdx g) { return r.P_delta_dagger.contains(g); }));

    const std::size_t dr = th.R.dim(), nf = th.HD.group.order();
    r.p_frak = matrix_entries(amb.cert.t, dr, image_of(th.psi, P_EH));
    r.checks.add("psi(e P) = M_t(p)", matrix_subspace(amb.cert.t, dr, r.p_frak) == image_of(th.psi, P_EH));
    for (GIdx f = 0; f < nf; ++f)
        if (r.p_frak.contains(th.R.sub(th.R.basis(f), th.R.one()))) r.p_frak_dagger.elems.push_back(f);
    std::set<GIdx> image;
    for (GIdx h : r.P_delta_dagger.elems) image.insert(th.hd_of[fb.h_group.index_of[h]]);
    r.checks.add("p dagger = P delta-dagger / D", Subgroup{{image.begin(), image.end()}} == r.p_frak_dagger);
    r.P_dagger_m = power_subgroup(amb.gamma, r.P_dagger, r.m);
    r.P_delta_dagger_m = power_subgroup(amb.gamma, r.P_delta_dagger, r.m);
    r.checks.add("(P dagger)^m = (P delta-dagger)^m", r.P_dagger_m == r.P_delta_dagger_m);
    return r;
}

Subspace group_span(const AmbientQuotient& amb, const Subgroup& h, const Vec* x) {
    const StructAlgebra& bg = amb.barKG.alg;
    std::vector<Vec> vs;
    for (GIdx g : h.elems) vs.push_back(x ? bg.mul(*x, amb.gbar[g]) : amb.gbar[g]);
    return Subspace::span(amb.k, bg.dim(), vs);
}

ControlReductionReport control_reduction(const AmbientQuotient& amb, const Subspace& P, const Vec& f, const Subgroup& H) {
    const StructAlgebra& bg = amb.barKG.alg;
    if (!is_two_sided_ideal(amb.kG, P)) throw HypothesisError("P is not an ideal of kGamma");
    if (!P.contains(preimage_of(amb.barKG.projection_matrix(),
                                left_translate(bg, bg.sub(bg.one(), f), Subspace::full(amb.k, bg.dim())))))
        throw HypothesisError("P does not contain the orbit ideal");
    ControlReductionReport r;
    std::vector<Vec> kh;
    for (GIdx g : H.elems) kh.push_back(amb.kG.basis(g));
    r.in_kG = control_check(amb.kG, P, Subspace::span(amb.k, amb.kG.dim(), kh));
    const Subspace pbar = image_of(amb.barKG.projection_matrix(), P);
    r.in_bar = control_check(bg, pbar, group_span(amb, H));
    const Subspace fp = left_translate(bg, f, pbar);
    const Subspace fg = left_translate(bg, f, Subspace::full(amb.k, bg.dim()));
    r.in_block = product_space(bg, intersect(fp, group_span(amb, H, &f)), fg) == fp;
    return r;
}

}  // namespace primequot
