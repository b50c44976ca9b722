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

#include "primequot/untwist.hpp"

#include <algorithm>
#include <set>

namespace primequot {

namespace {

Matrix kron_identity(const Matrix& a, std::size_t n) {
    Matrix out(a.field(), a.rows() * n, a.cols() * n);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (Elem v = a.at(i, j))
                for (std::size_t f = 0; f < n; ++f) out.at(i * n + f, j * n + f) = v;
    return out;
}

// Embeds kD into kGamma along the sorted member list of D.
Vec embed_d(const AmbientQuotient& amb, const Vec& x) {
    Vec out(amb.gamma.order(), 0);
    for (std::size_t i = 0; i < x.size(); ++i) out[amb.D.elems[i]] = x[i];
    return out;
}

}  // namespace

Matrix AmbientQuotient::conj_component(GIdx g) const {
    const Matrix& c = conj.at(g);
    return restrict_map(cert.component, [&](const Vec& v) { return c.apply(v); });
}

Subspace AmbientQuotient::e_span(const Subgroup& h) const {
    std::vector<Vec> vs;
    for (GIdx g : h.elems) vs.push_back(barKG.alg.mul(e_bar, gbar[g]));
    return Subspace::span(k, barKG.alg.dim(), vs);
}

AmbientQuotient build_ambient(const FiniteGroup& gamma, const Subgroup& D, const Field& k, const Selector& sel,
                              std::uint64_t seed) {
    if (!is_subgroup(gamma, D.elems)) throw HypothesisError("D is not a subgroup");
    if (!is_normal(gamma, D)) throw HypothesisError("D is not normal in Gamma");
    AmbientQuotient amb;
    amb.gamma = gamma;
    amb.D = D;
    amb.k = k;
    amb.d_group = subgroup_as_group(gamma, D);
    amb.kD = group_algebra(amb.d_group.group, k);
    amb.kG = group_algebra(gamma, k);
    amb.J = radical(amb.kD);
    const std::size_t n = gamma.order();

    std::vector<Vec> left, right;
    for (const auto& j : amb.J.J.basis()) {
        const Vec jg = embed_d(amb, j);
        for (GIdx g = 0; g < n; ++g) {
            left.push_back(amb.kG.mul(jg, amb.kG.basis(g)));
            right.push_back(amb.kG.mul(amb.kG.basis(g), jg));
        }
    }
    amb.JkG = Subspace::span(k, n, left);
    amb.checks.add("D normal in Gamma", true);
    amb.checks.add("J kGamma = kGamma J", amb.JkG == Subspace::span(k, n, right));
    amb.checks.add("J kGamma two-sided ideal", is_two_sided_ideal(amb.kG, amb.JkG));
    amb.checks.add("J kGamma nilpotent", is_nilpotent_space(amb.kG, amb.JkG));
    amb.barKG = quotient_algebra(amb.kG, amb.JkG);
    amb.barKD = quotient_algebra(amb.kD, amb.J.J);
    amb.checks.add("kD/J semisimple", is_semisimple(amb.barKD.alg));

    const std::size_t dd = amb.barKD.alg.dim();
    amb.iota = Matrix(k, amb.barKG.alg.dim(), dd);
    for (std::size_t j = 0; j < dd; ++j) {
        const Vec img = amb.barKG.project(embed_d(amb, amb.barKD.lift(amb.barKD.alg.basis(j))));
        for (std::size_t i = 0; i < img.size(); ++i) amb.iota.at(i, j) = img[i];
    }
    amb.checks.add("kD/J embeds in the quotient",
                   rank(amb.iota) == dd && is_multiplicative(amb.barKD.alg, amb.barKG.alg, amb.iota));

    for (GIdx g = 0; g < n; ++g) amb.gbar.push_back(amb.barKG.project(amb.kG.basis(g)));
    amb.conj.reserve(n);
    for (GIdx g = 0; g < n; ++g) {
        Matrix m(k, dd, dd);
        for (std::size_t j = 0; j < dd; ++j) {
            const Vec x = amb.barKD.lift(amb.barKD.alg.basis(j));
            Vec y(x.size(), 0);
            for (std::size_t i = 0; i < x.size(); ++i)
                if (x[i]) y[amb.d_group.index_of[gamma.conj(D.elems[i], g)]] = x[i];
            const Vec py = amb.barKD.project(y);
            for (std::size_t i = 0; i < dd; ++i) m.at(i, j) = py[i];
        }
        amb.conj.push_back(std::move(m));
    }

    amb.cpi = central_primitive_idempotents(amb.barKD.alg, seed);
    const auto& ids = amb.cpi.idempotents;
    for (const auto& e : ids) amb.cpi_dims.push_back(left_translate(amb.barKD.alg, e, Subspace::full(k, dd)).dim());
    amb.cpi_action.assign(n, std::vector<std::uint32_t>(ids.size()));
    for (GIdx g = 0; g < n; ++g)
        for (std::size_t i = 0; i < ids.size(); ++i) {
            const Vec img = amb.conj[gamma.inv(g)].apply(ids[i]);
            auto it = std::find(ids.begin(), ids.end(), img);
            if (it == ids.end()) throw std::logic_error("conjugation does not permute block idempotents");
            amb.cpi_action[g][i] = static_cast<std::uint32_t>(it - ids.begin());
        }
    check_action(gamma, amb.cpi_action);
    amb.orbits = action_orbits(gamma, amb.cpi_action);

    if (sel.invariant_block) {
        bool found = false;
        for (std::size_t i = 0; i < ids.size(); ++i) {
            bool inv = true;
            for (GIdx g = 0; g < n && inv; ++g) inv = amb.cpi_action[g][i] == i;
            if (inv && (!found || amb.cpi_dims[i] > amb.cpi_dims[amb.chosen])) {
                amb.chosen = i;
                found = true;
            }
        }
        if (!found) throw HypothesisError("no Gamma-invariant block idempotent");
    } else {
        if (sel.index >= ids.size()) throw HypothesisError("idempotent index out of range");
        amb.chosen = sel.index;
    }
    for (GIdx g = 0; g < n; ++g)
        if (amb.cpi_action[g][amb.chosen] == amb.chosen) amb.e_stabilizer.elems.push_back(g);
    amb.e_invariant = amb.e_stabilizer.order() == n;
    amb.cert = wedderburn_split(amb.barKD.alg, ids[amb.chosen], seed);
    amb.e_bar = amb.iota_of(amb.cert.e);
    if (amb.e_invariant) {
        const std::size_t got = left_translate(amb.barKG.alg, amb.e_bar, Subspace::full(k, amb.barKG.alg.dim())).dim();
        const std::size_t want = amb.cert.t * amb.cert.t * amb.cert.m * (n / D.order());
        amb.checks.add("dim e barKG = t^2 [k':k] [Gamma:D]", got == want,
                       std::to_string(got) + " vs " + std::to_string(want));
    }
    return amb;
}

Vec FiberGroup::unit_part(const WedderburnCertificate& cert, GIdx a) const {
    const StructAlgebra& c = cert.component.alg;
    return c.mul(cert.scalar(scalar_of(a)), lifts.at(h_of(a)));
}

FiberGroup build_fiber_group(const AmbientQuotient& amb, const Subgroup& H) {
    if (!amb.e_invariant) throw HypothesisError("the chosen idempotent is not Gamma-invariant");
    if (!is_subgroup(amb.gamma, H.elems)) throw HypothesisError("H is not a subgroup");
    const WedderburnCertificate& cert = amb.cert;
    const StructAlgebra& c = cert.component.alg;
    FiberGroup a;
    a.H = H;
    a.h_group = subgroup_as_group(amb.gamma, H);
    a.units = cert.kprime.size() - 1;
    const std::size_t nh = H.order();

    std::vector<Matrix> phis;
    for (std::size_t i = 0; i < nh; ++i) {
        const GIdx h = H.elems[i];
        phis.push_back(amb.conj_component(h));
        auto sn = skolem_noether(cert, phis.back());
        if (auto* ob = std::get_if<GaloisObstruction>(&sn)) throw GaloisObstructionError(h, *ob);
        // The identity is lifted to e itself.
        a.lifts.push_back(h == 0 ? c.one() : std::get<Vec>(sn));
    }
    std::vector<Vec> inv;
    for (const auto& m : a.lifts) inv.push_back(*c.inverse(m));

    bool agree = true;
    for (std::size_t i = 0; i < nh && agree; ++i)
        for (std::size_t b = 0; b < c.dim() && agree; ++b)
            agree = c.mul(c.mul(inv[i], c.basis(b)), a.lifts[i]) == phis[i].col(b);
    a.checks.add("lifts implement conjugation", agree);

    const FiniteGroup& hg = a.h_group.group;
    a.lambda.assign(nh * nh, 0);
    for (std::size_t i = 0; i < nh; ++i)
        for (std::size_t j = 0; j < nh; ++j) {
            const std::size_t ij = hg.mul(static_cast<GIdx>(i), static_cast<GIdx>(j));
            a.lambda[i * nh + j] = cert.scalar_value(c.mul(c.mul(a.lifts[i], a.lifts[j]), inv[ij]));
        }

    const Field& kp = cert.kprime;
    const std::size_t order = a.units * nh;
    std::vector<std::vector<GIdx>> table(order, std::vector<GIdx>(order));
    for (GIdx x = 0; x < order; ++x)
        for (GIdx y = 0; y < order; ++y) {
            const std::size_t hx = x / a.units, hy = y / a.units;
            const Elem cx = x % a.units + 1, cy = y % a.units + 1;
            const Elem cz = kp.mul(kp.mul(cx, cy), a.lambda[hx * nh + hy]);
            table[x][y] = a.element(cz, hg.mul(static_cast<GIdx>(hx), static_cast<GIdx>(hy)));
        }
    a.group = FiniteGroup::from_cayley(table, std::max<std::size_t>(order, kDefaultOrderCap));
    a.pi.image.resize(order);
    for (GIdx x = 0; x < order; ++x) a.pi.image[x] = static_cast<GIdx>(a.h_of(x));
    for (Elem cc = 1; cc <= a.units; ++cc) a.i_map.push_back(a.element(cc, 0));

    a.checks.add("|A_H| = |k'^x| |H|", a.group.order() == a.units * nh);
    a.checks.add("pi_H is a homomorphism", is_homomorphism(a.group, hg, a.pi));
    {
        Subgroup im_i{a.i_map};
        std::sort(im_i.elems.begin(), im_i.elems.end());
        a.checks.add("i(k'^x) = ker pi_H", im_i == kernel(a.pi));
    }

    const bool d_inside = std::all_of(amb.D.elems.begin(), amb.D.elems.end(), [&](GIdx g) { return H.contains(g); });
    if (d_inside) {
        const StructAlgebra& bd = amb.barKD.alg;
        for (GIdx g : amb.D.elems) {
            const std::size_t hl = a.h_group.index_of[g];
            const Vec eg = cert.component.to_local(
                bd.mul(cert.e, amb.barKD.project(amb.kD.basis(amb.d_group.index_of[g]))));
            a.d_map.push_back(a.element(cert.scalar_value(c.mul(eg, inv[hl])), hl));
        }
        GroupHom dh{a.d_map};
        a.checks.add("d is a homomorphism", is_homomorphism(amb.d_group.group, a.group, dh));
        bool ok = true;
        for (GIdx x = 0; x < a.group.order() && ok; ++x)
            for (std::size_t i = 0; i < amb.D.order() && ok; ++i) {
                const GIdx g = amb.D.elems[i];
                const GIdx gh = amb.gamma.conj(g, a.parent_h(x));
                ok = a.group.conj(a.d_map[i], x) == a.d_map[amb.d_group.index_of[gh]];
            }
        a.checks.add("d(g)^(x,h) = d(g^h)", ok);
    }
    return a;
}

FiberQuotientReport check_fiber_quotients(const AmbientQuotient& amb, const FiberGroup& a, const Subgroup& N) {
    FiberQuotientReport r;
    const FiniteGroup& hg = a.h_group.group;
    Subgroup n_local;
    for (GIdx g : N.elems) {
        if (!a.H.contains(g)) throw HypothesisError("N is not contained in H");
        n_local.elems.push_back(a.h_group.index_of[g]);
    }
    std::sort(n_local.elems.begin(), n_local.elems.end());
    if (!is_normal(hg, n_local)) throw HypothesisError("N is not normal");
    for (GIdx x = 0; x < a.group.order(); ++x)
        if (N.contains(a.parent_h(x))) r.a_n.elems.push_back(x);
    r.checks.add("A_N is a subgroup", is_subgroup(a.group, r.a_n.elems));
    r.checks.add("A_N normal in A_H", is_normal(a.group, r.a_n));
    r.fiber_quotient = quotient_group(a.group, r.a_n);
    r.group_quotient = quotient_group(hg, n_local);
    r.iso.image.resize(r.fiber_quotient.group.order());
    for (GIdx c = 0; c < r.fiber_quotient.group.order(); ++c)
        r.iso.image[c] = r.group_quotient.projection(static_cast<GIdx>(a.h_of(r.fiber_quotient.reps[c])));
    bool hom = is_homomorphism(r.fiber_quotient.group, r.group_quotient.group, r.iso);
    r.checks.add("A_H/A_N -> H/N is a homomorphism", hom);
    r.checks.add("A_H/A_N -> H/N is bijective",
                 r.fiber_quotient.group.order() == r.group_quotient.group.order() && kernel(r.iso).order() == 1);

    if (!a.d_map.empty()) {
        std::set<GIdx> prod;
        bool commute = true;
        for (GIdx i : a.i_map)
            for (GIdx d : a.d_map) {
                prod.insert(a.group.mul(i, d));
                commute = commute && a.group.mul(i, d) == a.group.mul(d, i);
            }
        Subgroup a_d;
        for (GIdx x = 0; x < a.group.order(); ++x)
            if (amb.D.contains(a.parent_h(x))) a_d.elems.push_back(x);
        r.checks.add("A_D = i(k'^x) d(D)", Subgroup{{prod.begin(), prod.end()}} == a_d);
        r.checks.add("i(k'^x) and d(D) commute", commute);
    }
    return r;
}

Splitting sylow_splitting(const AmbientQuotient& amb, const FiberGroup& a, std::size_t variant) {
    const std::uint32_t p = amb.k.characteristic();
    if (a.d_map.empty()) throw HypothesisError("D is not contained in H");
    const std::size_t idx = a.H.order() / amb.D.order();
    if (!is_p_group_order(idx, p)) throw HypothesisError("H/D is not a p-group");
    Splitting s;
    s.variant = variant;
    Subgroup dd{a.d_map};
    std::sort(dd.elems.begin(), dd.elems.end());
    s.checks.add("d(D) normal in A_H", is_normal(a.group, dd));
    const Quotient q = quotient_group(a.group, dd);
    Subgroup syl = sylow_subgroup(q.group, p);
    if (variant == 1) {
        for (GIdx x = 0; x < q.group.order(); ++x) {
            Subgroup c = conjugate(q.group, syl, x);
            if (!(c == syl)) {
                syl = std::move(c);
                break;
            }
        }
    }
    for (GIdx x = 0; x < a.group.order(); ++x)
        if (syl.contains(q.projection(x))) s.L.elems.push_back(x);

    const std::size_t nh = a.H.order();
    s.sigma.image.assign(nh, 0);
    std::vector<int> hits(nh, 0);
    for (GIdx x : s.L.elems) {
        ++hits[a.h_of(x)];
        s.sigma.image[a.h_of(x)] = x;
    }
    bool trivial_kernel = true;
    for (GIdx x : s.L.elems) trivial_kernel = trivial_kernel && (a.h_of(x) != 0 || x == 0);
    s.checks.add("ker pi restricted to L is trivial", trivial_kernel);
    s.checks.add("pi(L) = H", std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
    s.checks.add("sigma is a homomorphism", is_homomorphism(a.h_group.group, a.group, s.sigma));
    bool split = true;
    for (GIdx h = 0; h < nh; ++h) split = split && a.h_of(s.sigma(h)) == h;
    s.checks.add("pi o sigma = id", split);
    bool on_d = true;
    for (std::size_t i = 0; i < amb.D.order(); ++i)
        on_d = on_d && s.sigma(a.h_group.index_of[amb.D.elems[i]]) == a.d_map[i];
    s.checks.add("sigma restricted to D = d", on_d);
    return s;
}

UntwistIso build_untwist_iso(const AmbientQuotient& amb, const FiberGroup& a, const Splitting& s) {
    const Field& k = amb.k;
    const WedderburnCertificate& cert = amb.cert;
    const StructAlgebra& c = cert.component.alg;
    const StructAlgebra& bg = amb.barKG.alg;
    const FiniteGroup& hg = a.h_group.group;
    const std::size_t nh = a.H.order();
    UntwistIso th;
    th.H = a.H;

    for (GIdx h = 0; h < nh; ++h) th.delta.push_back(a.unit_part(cert, s.sigma(h)));
    th.m_delta = std::set<Vec>(th.delta.begin(), th.delta.end()).size();
    for (GIdx h = 0; h < nh; ++h) {
        const Vec di = amb.component_to_bar(*c.inverse(th.delta[h]));
        th.eps.push_back(bg.mul(di, amb.gbar[a.h_group.inclusion(h)]));
    }

    bool on_d = true;
    for (GIdx g : amb.D.elems)
        on_d = on_d && amb.component_to_bar(th.delta[a.h_group.index_of[g]]) == bg.mul(amb.e_bar, amb.gbar[g]);
    th.checks.add("delta(g) = e g on D", on_d);
    bool centralizes = true;
    for (GIdx h = 0; h < nh && centralizes; ++h)
        for (std::size_t b = 0; b < c.dim() && centralizes; ++b) {
            const Vec x = amb.component_to_bar(c.basis(b));
            centralizes = bg.mul(th.eps[h], x) == bg.mul(x, th.eps[h]);
        }
    th.checks.add("delta(h)^-1 h centralizes e barKD", centralizes);
    bool dmul = true, emul = true;
    for (GIdx x = 0; x < nh; ++x)
        for (GIdx y = 0; y < nh; ++y) {
            const GIdx xy = hg.mul(x, y);
            dmul = dmul && c.mul(th.delta[x], th.delta[y]) == th.delta[xy];
            emul = emul && bg.mul(th.eps[x], th.eps[y]) == th.eps[xy];
        }
    th.checks.add("delta multiplicative", dmul);
    th.checks.add("epsilon multiplicative", emul);
    bool etriv = true;
    for (GIdx g : amb.D.elems) etriv = etriv && th.eps[a.h_group.index_of[g]] == amb.e_bar;
    th.checks.add("epsilon trivial on D", etriv);

    th.EH = subalgebra(bg, amb.e_span(a.H), amb.e_bar);
    const std::size_t deh = th.EH.alg.dim();
    const std::size_t want = cert.t * cert.t * cert.m * (nh / amb.D.order());
    th.checks.add("dim e barKH = t^2 [k':k] [H:D]", deh == want, std::to_string(deh) + " vs " + std::to_string(want));

    th.GD = quotient_group(amb.gamma, amb.D);
    std::set<GIdx> hd;
    for (GIdx h : a.H.elems) hd.insert(th.GD.projection(h));
    th.hd_sub.elems.assign(hd.begin(), hd.end());
    th.HD = subgroup_as_group(th.GD.group, th.hd_sub);
    const std::size_t nf = th.HD.group.order();
    th.hd_rep.assign(nf, UINT32_MAX);
    for (GIdx h = 0; h < nh; ++h) {
        const GIdx f = th.HD.index_of[th.GD.projection(a.h_group.inclusion(h))];
        th.hd_of.push_back(f);
        if (th.hd_rep[f] == UINT32_MAX) th.hd_rep[f] = a.h_group.inclusion(h);
    }
    th.kHD = group_algebra(th.HD.group, k);
    th.tensor_target = tensor(c, th.kHD);
    const std::size_t dt = th.tensor_target.dim();

    th.q = Matrix(k, deh, nh);
    Matrix T(k, dt, nh);
    for (GIdx h = 0; h < nh; ++h) {
        const Vec qh = th.EH.to_local(bg.mul(amb.e_bar, amb.gbar[a.h_group.inclusion(h)]));
        const Vec th_ = tensor_vec(c, th.delta[h], th.kHD, th.kHD.basis(th.hd_of[h]));
        for (std::size_t i = 0; i < deh; ++i) th.q.at(i, h) = qh[i];
        for (std::size_t i = 0; i < dt; ++i) T.at(i, h) = th_[i];
    }
    const Subspace kq = kernel_of(th.q);
    bool kernel_ok = true;
    for (const auto& v : kq.basis()) kernel_ok = kernel_ok && vec_is_zero(T.apply(v));
    th.checks.add("ker q inside ker T", kernel_ok);
    if (!kernel_ok || deh != dt) {
        require(th.checks, "untwisting");
        throw VerificationError("untwisting: dimension mismatch");
    }

    th.Psi = Matrix(k, dt, deh);
    for (std::size_t j = 0; j < deh; ++j) {
        const auto sol = solve_linear(th.q, unit_vec(deh, j));
        if (!sol.consistent) throw VerificationError("untwisting: q is not surjective");
        const Vec col = T.apply(sol.particular);
        for (std::size_t i = 0; i < dt; ++i) th.Psi.at(i, j) = col[i];
    }
    th.Phi = Matrix(k, deh, dt);
    for (std::size_t ci = 0; ci < c.dim(); ++ci)
        for (std::size_t f = 0; f < nf; ++f) {
            const Vec eps = th.eps[a.h_group.index_of[th.hd_rep[f]]];
            const Vec col = th.EH.to_local(bg.mul(amb.component_to_bar(c.basis(ci)), eps));
            for (std::size_t i = 0; i < deh; ++i) th.Phi.at(i, ci * nf + f) = col[i];
        }
    th.checks.add("Psi multiplicative", is_multiplicative(th.EH.alg, th.tensor_target, th.Psi));
    th.checks.add("Phi multiplicative", is_multiplicative(th.tensor_target, th.EH.alg, th.Phi));
    th.checks.add("Psi Phi = id", th.Psi * th.Phi == Matrix::identity(k, dt));
    th.checks.add("Phi Psi = id", th.Phi * th.Psi == Matrix::identity(k, deh));

    th.R = tensor(cert.kalg.alg, th.kHD);
    th.psi_target = tensor(matrix_algebra(k, cert.t), th.R);
    th.psi = kron_identity(cert.iso, nf) * th.Psi;
    th.checks.add("psi bijective", rank(th.psi) == deh && th.psi_target.dim() == deh);
    th.checks.add("psi multiplicative", is_multiplicative(th.EH.alg, th.psi_target, th.psi));
    return th;
}

UntwistBundle untwist(const AmbientQuotient& amb, const Subgroup& H, std::size_t variant) {
    UntwistBundle b;
    b.fiber = build_fiber_group(amb, H);
    b.split = sylow_splitting(amb, b.fiber, variant);
    b.iso = build_untwist_iso(amb, b.fiber, b.split);
    return b;
}

}  // namespace primequot
