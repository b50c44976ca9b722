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

// Acceptance suite: one PASS/FAIL line per criterion. Each criterion
// recomputes its claims here rather than trusting the library's check lists.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "oracle.hpp"
#include "primequot/crossed.hpp"
#include "primequot/ideals.hpp"
#include "primequot/instance.hpp"
#include "primequot/peirce.hpp"
#include "primequot/pipeline.hpp"
#include "primequot/radical.hpp"

using namespace primequot;

namespace {

struct Failure {
    std::string what;
};

void expect(bool ok, const std::string& what) {
    if (!ok) throw Failure{what};
}

struct Setup {
    Instance in;
    AmbientQuotient amb;
};
Setup setup(const std::string& name) {
    Instance in = resolve(corpus_instance(name));
    AmbientQuotient amb = build_ambient(in.gamma, in.D, in.k);
    return {in, std::move(amb)};
}

Subspace span_of(const StructAlgebra& a, const std::vector<Vec>& v) { return Subspace::span(a.field(), a.dim(), v); }

bool bijective_and_multiplicative(const StructAlgebra& src, const StructAlgebra& dst, const Matrix& m) {
    return src.dim() == dst.dim() && rank(m) == src.dim() && oracle::multiplicative_on_basis(src, dst, m);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::set<GIdx> as_set(const Subgroup& s) { return {s.elems.begin(), s.elems.end()}; }

// {h in H : e h - e in P}, P an ideal of e barKH in local coordinates.
Subgroup dagger_in_eh(const AmbientQuotient& amb, const UntwistBundle& u, const Subspace& P) {
    const StructAlgebra& bg = amb.barKG.alg;
    const Vec e = u.iso.EH.to_local(amb.e_bar);
    std::vector<GIdx> out;
    for (GIdx h : u.fiber.H.elems)
        if (P.contains(u.iso.EH.alg.sub(u.iso.EH.to_local(bg.mul(amb.e_bar, amb.gbar[h])), e))) out.push_back(h);
    return Subgroup{out};
}

// --- 1 ---------------------------------------------------------------------
std::string criterion_sl23() {
    const auto t0 = std::chrono::steady_clock::now();
    const Setup s = setup("sl23");
    const UntwistBundle u = untwist(s.amb, s.in.H);
    const UntwistIso& th = u.iso;
    expect(th.EH.alg.dim() == 12, "dim e barKH");
    expect(s.amb.cert.t == 2 && s.amb.cert.m == 1 && th.HD.group.order() == 3, "12 = 2^2 * 1 * 3");
    expect(th.psi_target.dim() == 4 * th.R.dim() && th.R.dim() == 3, "target M_2(GF(3)[C3])");
    expect(bijective_and_multiplicative(th.EH.alg, th.psi_target, th.psi), "psi on 12 x 12 basis products");
    const double sec = seconds_since(t0);
    expect(sec < 5.0, "time");
    std::ostringstream os;
    os << "dim 12 = 2^2*1*3, psi bijective and multiplicative, " << sec << " s";
    return os.str();
}

// --- 2 ---------------------------------------------------------------------
std::string criterion_gl23() {
    const auto t0 = std::chrono::steady_clock::now();
    const Setup s = setup("gl23");
    const UntwistBundle u = untwist(s.amb, s.in.H);
    const TwistedExtension b = extract_twisted_extension(s.amb, u);
    const FiniteGroup& F = b.F.group;
    const StructAlgebra& R = b.pres_ref.R;
    expect(F.order() == 2, "|G/H| = 2");
    std::size_t triples = 0;
    for (GIdx x = 0; x < 2; ++x)
        for (GIdx y = 0; y < 2; ++y)
            for (GIdx z = 0; z < 2; ++z, ++triples)
                expect(R.mul(b.alpha.at(F.mul(x, y), z), b.pres_ref.sigma[z].apply(b.alpha.at(x, y))) ==
                           R.mul(b.alpha.at(x, F.mul(y, z)), b.alpha.at(y, z)),
                       "cocycle identity");
    expect(triples == 8, "8 triples");
    expect(b.EG.alg.dim() == 24, "dim e barKG");
    expect(bijective_and_multiplicative(b.EG.alg, b.target, b.psi_tilde), "psi~ on 24 x 24 basis products");
    // Restriction to e barKH: M_t(R) sits in M_t(S_alpha) as the identity-coset part.
    const std::size_t t = s.amb.cert.t, dr = u.iso.R.dim(), ds = b.S_alpha.dim();
    for (std::size_t l = 0; l < u.iso.EH.alg.dim(); ++l) {
        const Vec x = b.EG.to_local(u.iso.EH.to_parent(u.iso.EH.alg.basis(l)));
        Vec want(b.target.dim(), 0);
        const Vec small = u.iso.psi.col(l);
        for (std::size_t ij = 0; ij < t * t; ++ij)
            for (std::size_t r = 0; r < dr; ++r) want[ij * ds + r] = small[ij * dr + r];
        expect(b.psi_tilde.apply(x) == want, "psi~ restricts to psi");
    }
    const double sec = seconds_since(t0);
    expect(sec < 20.0, "time");
    std::ostringstream os;
    os << "cocycle on 8 triples, psi~ 24 x 24, restriction = psi, " << sec << " s";
    return os.str();
}

// --- 3 ---------------------------------------------------------------------
std::string criterion_fibers() {
    const Setup s = setup("sl23");
    const FiberGroup a = build_fiber_group(s.amb, s.in.H);
    const FiniteGroup& A = a.group;
    expect(A.order() == 48, "|A_G| = 48");

    // A_Q8 = i(GF(3)^x) d(Q8), the factors commuting.
    const FiberQuotientReport q = check_fiber_quotients(s.amb, a, s.in.D);
    std::set<GIdx> prod;
    for (GIdx c : a.i_map)
        for (GIdx d : a.d_map) {
            expect(A.mul(c, d) == A.mul(d, c), "i and d commute");
            prod.insert(A.mul(c, d));
        }
    expect(prod == as_set(q.a_n) && prod.size() == 16, "A_Q8 = i(GF(3)^x) d(Q8)");
    std::set<GIdx> over_d;
    for (GIdx x = 0; x < A.order(); ++x)
        if (s.in.D.contains(a.parent_h(x))) over_d.insert(x);
    expect(over_d == prod, "A_Q8 = preimage of Q8");

    // A_G / A_Q8 = C3 through the explicit map.
    const FiniteGroup& Q = q.fiber_quotient.group;
    expect(Q.order() == 3 && q.group_quotient.group.order() == 3, "quotients of order 3");
    expect(is_homomorphism(Q, q.group_quotient.group, q.iso), "iso is a homomorphism");
    expect(std::set<GIdx>(q.iso.image.begin(), q.iso.image.end()).size() == 3, "iso is bijective");
    for (GIdx x = 0; x < A.order(); ++x)
        expect(q.iso(q.fiber_quotient.projection(x)) == q.group_quotient.projection(a.parent_h(x)),
               "iso is induced by pi");

    // sigma splits pi and restricts to d on Q8.
    const Splitting sp = sylow_splitting(s.amb, a);
    const FiniteGroup& H = a.h_group.group;
    expect(is_homomorphism(H, A, sp.sigma), "sigma homomorphism");
    for (GIdx h = 0; h < H.order(); ++h) expect(a.pi(sp.sigma(h)) == h, "pi sigma = 1");
    for (std::size_t i = 0; i < s.in.D.order(); ++i)
        expect(sp.sigma(a.h_group.index_of[s.in.D.elems[i]]) == a.d_map[i], "sigma on Q8 = d");
    return "|A_G| = 48, A_Q8 = i x d, A_G/A_Q8 = C3, sigma splits pi";
}

// --- 4 ---------------------------------------------------------------------
void check_block_law(const PeirceSystem& sys, const Subspace& A) {
    const StructAlgebra& R = sys.R;
    const std::size_t r = sys.r();
    std::vector<Subspace> Aij;
    Subspace sum(R.field(), R.dim());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            Aij.push_back(sandwich(R, sys.idem[i], A, sys.idem[j]));
            sum = sum + Aij.back();
        }
    expect(sum == A, "A = sum of A_ij");
    std::size_t quads = 0;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t k = 0; k < r; ++k)
                for (std::size_t l = 0; l < r; ++l, ++quads) {
                    const Subspace got = oracle::product(R, Aij[i * r + j], sys.block(k, l));
                    const Subspace want = j == k ? Aij[i * r + l] : Subspace(R.field(), R.dim());
                    expect(got == want, "A_ij R_kl = delta_jk A_il");
                }
    expect(quads == r * r * r * r, "quadruples");
}

std::string criterion_d7() {
    const auto t0 = std::chrono::steady_clock::now();
    const Setup s = setup("d7");
    const StructAlgebra& bg = s.amb.barKG.alg;
    std::size_t faithful = 0, fixed = 0;
    for (std::size_t o = 0; o < s.amb.orbits.size(); ++o) (s.amb.orbits[o].points.size() == 2 ? faithful : fixed) = o;
    const OrbitPeirce op = peirce_from_orbit(s.amb, faithful);
    const PeirceSystem& sys = op.sys;
    expect(sys.r() == 2 && sys.R.dim() == 12, "f barKG of dim 12 with two idempotents");

    // S1 = e1 barKG e1 is a field with 8 elements.
    const StructAlgebra& S1 = sys.S1.alg;
    expect(S1.dim() == 3, "dim S1");
    oracle::for_each_vector(Field::prime(2), 3, [&](const Vec& x) {
        oracle::for_each_vector(Field::prime(2), 3, [&](const Vec& y) {
            expect(S1.mul(x, y) == S1.mul(y, x), "S1 commutative");
            if (!oracle::is_zero(x) && !oracle::is_zero(y)) expect(!oracle::is_zero(S1.mul(x, y)), "S1 has no zero divisors");
        });
    });
    const MatrixUnitsIso mu = matrix_units_iso(sys);
    expect(bijective_and_multiplicative(sys.R, mu.target, mu.iso), "f barKG -> M_2(S1)");

    // e1 barKG e1 = e1 barK[C7].
    std::vector<Vec> corner;
    for (GIdx g : s.in.D.elems) corner.push_back(sys.R.mul(sys.idem[0], op.group_images[g]));
    expect(span_of(sys.R, corner) == sys.block(0, 0), "corner identity");

    // Block law for f I, I over the ideal lattice of barKG.
    expect(bg.dim() <= 20, "lattice size cap");
    const IdealLattice lat = enumerate_ideals(bg);
    expect(lat.complete, "lattice complete");
    std::set<Subspace> seen;
    for (const auto& I : lat.ideals) {
        for (GIdx g = 0; g < s.in.gamma.order(); ++g) {
            const Vec gi = s.amb.gbar[s.in.gamma.inv(g)];
            std::vector<Vec> conj;
            for (const auto& v : I.basis()) conj.push_back(bg.mul(bg.mul(gi, v), s.amb.gbar[g]));
            expect(span_of(bg, conj) == I, "ideal is G-stable");
        }
        const Subspace fI = left_translate(bg, op.f, I);
        std::vector<Vec> loc;
        for (const auto& v : fI.basis()) loc.push_back(op.Rsub.to_local(v));
        const Subspace A = span_of(sys.R, loc);
        if (!seen.insert(A).second) continue;
        check_block_law(sys, A);
    }

    // Control through the blocks, with P dagger = intersection of the Q_i daggers.
    auto controlled = [&](const Subspace& P, const Subgroup& H) {
        std::vector<Vec> w;
        for (GIdx h : H.elems) w.push_back(s.amb.kG.basis(h));
        return control_check(s.amb.kG, P, span_of(s.amb.kG, w));
    };
    auto dagger_kg = [&](const Subspace& P) {
        std::vector<Vec> imgs;
        for (GIdx g = 0; g < s.in.gamma.order(); ++g) imgs.push_back(s.amb.kG.basis(g));
        return dagger(s.amb.kG, P, imgs, s.amb.kG.one());
    };
    auto block_control = [&](const OrbitPeirce& o, const Subspace& P, bool want) {
        const BlockControlReport te = control_reduction_blocks(s.amb, o, P, s.in.D);
        const bool direct = controlled(P, s.in.D);
        expect(direct == want, "control of P by D");
        expect(te.P_controlled == direct, "reported control of P");
        for (bool q : te.Q_controlled) expect(q == direct, "control of Q_i");
        std::set<GIdx> meet = as_set(te.Q_dagger[0]);
        for (const auto& qd : te.Q_dagger) {
            std::set<GIdx> keep;
            for (GIdx x : meet)
                if (qd.contains(x)) keep.insert(x);
            meet = keep;
        }
        expect(meet == as_set(dagger_kg(P)), "P dagger = intersection of Q_i daggers");
    };
    block_control(op, orbit_ideal(s.amb, faithful).M, true);
    const OrbitPeirce fp = peirce_from_orbit(s.amb, fixed);
    block_control(fp, orbit_ideal(s.amb, fixed).M, true);
    const Subspace frad = left_translate(bg, fp.f, radical(bg).J);
    expect(frad.dim() > 0, "fixed block has a radical");
    block_control(fp, orbit_ideal(s.amb, fixed).M + preimage_of(s.amb.barKG.projection_matrix(), frad), false);

    const double sec = seconds_since(t0);
    expect(sec < 10.0, "time");
    std::ostringstream os;
    os << "M_2(F8), corner, block law over " << lat.ideals.size() << " ideals of barKG (" << seen.size()
       << " distinct f I), control reduction +/-, " << sec << " s";
    return os.str();
}

// --- 5 ---------------------------------------------------------------------
std::string criterion_s3() {
    const CommandResult r = run_command(Command::untwist, {corpus_instance("s3-obstructed")}, {});
    expect(r.exit_code == 3, "exit code 3");
    const Json* ob = nullptr;
    for (const auto& st : r.runs.at(0).stages)
        if (st.name == "untwist" && st.status == "obstruction") ob = &st.data["obstruction"];
    expect(ob != nullptr, "obstruction reported");
    const std::string desc = (*ob)["description"].get<std::string>();
    expect(desc.find("zeta -> zeta^2") != std::string::npos, "description");

    // Conjugation by the reported element squares the generator of the center.
    const Setup s = setup("s3-obstructed");
    const GIdx g = (*ob)["element"].get<GIdx>();
    const StructAlgebra& bd = s.amb.barKD.alg;
    const Vec zeta = s.amb.cert.component.to_parent(s.amb.cert.zeta);
    const Vec moved = s.amb.conj[g].apply(zeta);
    expect(moved == bd.mul(zeta, zeta) && moved != zeta, "zeta -> zeta^2");
    return "GaloisObstruction, " + desc + ", exit 3";
}

// --- 6 ---------------------------------------------------------------------
std::string criterion_daggers() {
    std::size_t pairs = 0;
    for (const char* name : {"sl23", "d7"}) {
        const Setup s = setup(name);
        const UntwistBundle u = untwist(s.amb, s.in.H);
        const UntwistIso& th = u.iso;
        const std::size_t m = std::set<Vec>(th.delta.begin(), th.delta.end()).size();
        expect(th.R.one() == th.R.basis(0), "R identity is basis 0");
        std::vector<Vec> hd_images;
        for (GIdx f = 0; f < th.HD.group.order(); ++f) hd_images.push_back(th.R.basis(f));
        const IdealLattice lat = enumerate_ideals(th.EH.alg);
        expect(lat.complete, "lattice complete");
        for (const auto& P : lat.ideals) {
            if (P.dim() == th.EH.alg.dim()) continue;
            const DeltaDaggerReport r = delta_dagger(s.amb, u, P);
            expect(r.m == m, "m = |im delta|");
            const Subgroup Pd = dagger_in_eh(s.amb, u, P);
            expect(as_set(Pd) == as_set(r.P_dagger), "P dagger");
            // p dagger = P_delta dagger / D.
            const Subgroup pd = dagger(th.R, r.p_frak, hd_images, th.R.one());
            std::set<GIdx> img;
            for (GIdx h : r.P_delta_dagger.elems) img.insert(th.hd_of[u.fiber.h_group.index_of[h]]);
            expect(as_set(pd) == img, "p dagger = P_delta dagger / D");
            for (GIdx d : s.in.D.elems) expect(r.P_delta_dagger.contains(d), "D inside P_delta dagger");
            expect(power_subgroup(s.in.gamma, Pd, m) == power_subgroup(s.in.gamma, r.P_delta_dagger, m),
                   "(P dagger)^m = (P_delta dagger)^m");
            ++pairs;
        }
    }
    return std::to_string(pairs) + " (instance, ideal) pairs";
}

// --- 7 ---------------------------------------------------------------------
std::string criterion_oracles() {
    std::size_t rad = 0, prime = 0;
    for (const auto& name : corpus_names()) {
        const Setup s = setup(name);
        std::vector<const StructAlgebra*> algs{&s.amb.kD, &s.amb.barKD.alg, &s.amb.kG, &s.amb.barKG.alg};
        std::optional<UntwistBundle> u;
        try {
            u = untwist(s.amb, s.in.H);
            algs.push_back(&u->iso.EH.alg);
            algs.push_back(&u->iso.R);
        } catch (const GaloisObstructionError&) {
        }
        for (const StructAlgebra* a : algs) {
            const bool small = oracle::element_count_at_most(*a, 4096);
            if (small) {
                expect(radical(*a).J == oracle::radical_by_ideals(*a), name + ": radical");
                ++rad;
            }
            if (a->dim() <= 12) {
                const std::vector<Subspace> ideals = small ? oracle::all_ideals(*a) : enumerate_ideals(*a).ideals;
                for (const auto& I : ideals)
                    expect(is_prime(*a, I).prime == oracle::prime_by_definition(*a, ideals, I), name + ": is_prime");
                ++prime;
            }
        }
    }

    // Morita: the ideals of GF(3)C3 and of M_2 over it correspond, preserving order.
    const Field k3 = Field::prime(3);
    const StructAlgebra c3 = group_algebra(FiniteGroup::from_permutations(3, {{1, 2, 0}}), k3);
    const StructAlgebra m2 = tensor(matrix_algebra(k3, 2), c3);
    const std::vector<Subspace> small = oracle::all_ideals(c3);
    const std::vector<Subspace> big = enumerate_ideals(m2).ideals;
    expect(small.size() == 4 && big.size() == 4, "4-ideal lattices");
    std::set<Subspace> lifted;
    for (const auto& j : small) {
        const Subspace J = morita_lift(2, 3, j);
        expect(J.dim() == 4 * j.dim(), "M_2(j) dimension");
        expect(oracle::ideal_closure(m2, J.basis()) == J, "M_2(j) is an ideal");
        const MoritaReport back = morita_transfer(m2, 2, 3, J);
        expect(back.round_trip && back.j_small == j, "round trip");
        lifted.insert(J);
        for (const auto& j2 : small) expect(j.contains(j2) == J.contains(morita_lift(2, 3, j2)), "order preserved");
    }
    expect(lifted == std::set<Subspace>(big.begin(), big.end()), "every ideal of M_2 is a lift");

    // Matrix control, both truth values, on C6 over GF(3) with S = kC3.
    const FiniteGroup c6 = FiniteGroup::from_permutations(5, {{1, 2, 0, 3, 4}, {0, 1, 2, 4, 3}});
    const StructAlgebra r = group_algebra(c6, k3);
    const auto gens = c6.generator_indices();
    std::vector<Vec> sv;
    for (GIdx g : generate_subgroup(c6, {gens[0]}).elems) sv.push_back(r.basis(g));
    const Subspace S = span_of(r, sv);
    const StructAlgebra mr = tensor(matrix_algebra(k3, 2), r);
    const Subspace MS = morita_lift(2, r.dim(), S);
    for (std::size_t which = 0; which < 2; ++which) {
        const Subspace I = oracle::ideal_closure(r, {r.sub(r.basis(gens[which]), r.one())});
        const Subspace MI = morita_lift(2, r.dim(), I);
        const bool want_small = oracle::product(r, intersect(I, S), Subspace::full(k3, r.dim())) == I;
        const bool want_big = oracle::product(mr, intersect(MI, MS), Subspace::full(k3, mr.dim())) == MI;
        expect(want_small == (which == 0) && want_big == want_small, "matrix control truth values");
        const MatrixControlReport mc = matrix_control(r, I, S, 2);
        expect(mc.small == want_small && mc.big == want_big, "matrix_control");
    }
    return std::to_string(rad) + " radicals, " + std::to_string(prime) + " prime lattices, Morita, matrix control";
}

// --- 8 ---------------------------------------------------------------------
std::string criterion_determinism() {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<InstanceSpec> specs;
    for (const auto& n : corpus_names()) specs.push_back(corpus_instance(n));
    RunOptions opt;
    opt.seed = 0;
    const CommandResult a = run_command(Command::verify_all, specs, opt);
    const CommandResult b = run_command(Command::verify_all, specs, opt);
    const std::string da = a.report.dump(2), db = b.report.dump(2);
    expect(da == db, "reports differ");
    expect(a.exit_code == 0, "verify-all exit code");
    const double sec = seconds_since(t0);
    expect(sec < 60.0, "time");
    std::ostringstream os;
    os << "two runs, " << da.size() << " identical bytes, " << sec << " s";
    return os.str();
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<std::string()>>> criteria{
        {"sl23 untwisting", criterion_sl23},
        {"gl23 twisted extension", criterion_gl23},
        {"sl23 fiber structure", criterion_fibers},
        {"d7 block reduction", criterion_d7},
        {"s3 Galois obstruction", criterion_s3},
        {"daggers", criterion_daggers},
        {"oracles", criterion_oracles},
        {"determinism", criterion_determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::string line;
        bool ok = false;
        try {
            line = criteria[i].second();
            ok = true;
        } catch (const Failure& f) {
            line = f.what;
        } catch (const std::exception& e) {
            line = std::string("exception: ") + e.what();
        }
        std::printf("%s %zu %s: %s\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].first, line.c_str());
        std::fflush(stdout);
        failed += ok ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
