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

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "primequot/algebra.hpp"
#include "primequot/checks.hpp"
#include "primequot/groups.hpp"
#include "primequot/radical.hpp"
#include "primequot/wedderburn.hpp"

namespace primequot {

/// Which centrally primitive idempotent of kD/J to work with.
struct Selector {
    bool invariant_block = true;  // largest Gamma-invariant block, first in order
    std::size_t index = 0;        // used when invariant_block is false
};

/// Raised when conjugation by a group element acts on the center of the
/// component by a nontrivial field automorphism.
class GaloisObstructionError : public std::runtime_error {
  public:
    GaloisObstructionError(GIdx g, GaloisObstruction ob)
        : std::runtime_error("Galois obstruction at element " + std::to_string(g) + ": " + ob.description),
          element(g), obstruction(std::move(ob)) {}
    GIdx element;
    GaloisObstruction obstruction;
};

/// kGamma modulo J(kD) kGamma, with kD/J, its block idempotents and the
/// chosen block.
struct AmbientQuotient {
    FiniteGroup gamma;
    Subgroup D;
    Field k;
    SubgroupGroup d_group;
    StructAlgebra kD;
    StructAlgebra kG;
    RadicalResult J;
    Subspace JkG;
    QuotientAlgebra barKG;
    QuotientAlgebra barKD;
    Matrix iota;  // barKD -> barKG
    IdempotentResult cpi;
    std::vector<std::size_t> cpi_dims;               // dim e_i barKD
    std::vector<std::vector<std::uint32_t>> cpi_action;  // act[g][i]: g e_i g^-1
    std::vector<Orbit> orbits;
    std::size_t chosen = 0;
    bool e_invariant = false;
    Subgroup e_stabilizer;
    WedderburnCertificate cert;
    Vec e_bar;                  // chosen idempotent in barKG
    std::vector<Vec> gbar;      // image of every group element in barKG
    std::vector<Matrix> conj;   // x -> g^-1 x g on barKD
    CheckList checks;

    const Vec& e() const { return cert.e; }
    Vec iota_of(const Vec& x) const { return iota.apply(x); }
    /// C coordinates -> barKG.
    Vec component_to_bar(const Vec& c) const { return iota.apply(cert.component.to_parent(c)); }
    /// x -> g^-1 x g on the component, in C coordinates.
    Matrix conj_component(GIdx g) const;
    /// e barKH as a subspace of barKG.
    Subspace e_span(const Subgroup& h) const;
    /// Image in barKG of a kGamma vector.
    Vec bar(const Vec& x) const { return barKG.project(x); }
};

AmbientQuotient build_ambient(const FiniteGroup& gamma, const Subgroup& D, const Field& k, const Selector& sel = {},
                              std::uint64_t seed = 0);

/// A_H: pairs (c M_h, h) with c in k'^x, stored at index h_local |k'^x| + c - 1.
struct FiberGroup {
    Subgroup H;
    SubgroupGroup h_group;
    std::size_t units = 1;       // |k'^x|
    std::vector<Vec> lifts;      // M_h per local h, C coordinates
    std::vector<Elem> lambda;    // M_h M_h' = lambda M_hh', at h |H| + h'
    FiniteGroup group;
    GroupHom pi;                 // onto h_group.group
    std::vector<GIdx> i_map;     // k'^x (encoding c at c - 1) -> A_H
    std::vector<GIdx> d_map;     // D (local index) -> A_H
    CheckList checks;

    GIdx element(Elem c, std::size_t h_local) const { return static_cast<GIdx>(h_local * units + (c - 1)); }
    Elem scalar_of(GIdx a) const { return static_cast<Elem>(a % units + 1); }
    std::size_t h_of(GIdx a) const { return a / units; }
    GIdx parent_h(GIdx a) const { return h_group.inclusion(static_cast<GIdx>(h_of(a))); }
    /// c M_h in C coordinates.
    Vec unit_part(const WedderburnCertificate& cert, GIdx a) const;
};

/// Requires e to be Gamma-invariant. Throws GaloisObstructionError.
FiberGroup build_fiber_group(const AmbientQuotient& amb, const Subgroup& H);

struct FiberQuotientReport {
    Subgroup a_n;
    Quotient fiber_quotient;  // A_G / A_N
    Quotient group_quotient;  // G / N
    GroupHom iso;             // fiber_quotient -> group_quotient
    CheckList checks;
};
/// N is given in Gamma indices and must be normal in H.
FiberQuotientReport check_fiber_quotients(const AmbientQuotient& amb, const FiberGroup& a, const Subgroup& N);

struct Splitting {
    Subgroup L;
    GroupHom sigma;  // local H index -> A_H
    std::size_t variant = 0;
    CheckList checks;
};
/// A section of A_H -> H through a Sylow p-subgroup of A_H / d(D). variant 0
/// uses the canonical Sylow subgroup; variant 1 a conjugate of it when one
/// differs. Throws HypothesisError unless H/D is a p-group.
Splitting sylow_splitting(const AmbientQuotient& amb, const FiberGroup& a, std::size_t variant = 0);

struct UntwistIso {
    Subgroup H;
    std::vector<Vec> delta;   // per local h, C coordinates
    std::vector<Vec> eps;     // per local h, barKG coordinates
    std::size_t m_delta = 1;  // |im delta|
    Subalgebra EH;            // e barKH, identity e
    Matrix q;                 // kH (local basis) -> EH
    Quotient GD;              // Gamma / D
    Subgroup hd_sub;          // H/D inside Gamma/D
    SubgroupGroup HD;
    std::vector<GIdx> hd_of;  // local h -> H/D index
    std::vector<GIdx> hd_rep; // H/D index -> least element of the coset (Gamma index)
    StructAlgebra kHD;
    StructAlgebra tensor_target;  // C (x) k[H/D]
    Matrix Psi;                   // EH -> tensor_target
    Matrix Phi;
    StructAlgebra R;              // K (x) k[H/D]
    StructAlgebra psi_target;     // M_t(k) (x) R
    Matrix psi;                   // EH -> psi_target
    CheckList checks;

    /// epsilon(h) for h given by its Gamma index.
    const Vec& eps_of(const FiberGroup& a, GIdx h) const { return eps.at(a.h_group.index_of.at(h)); }
};

UntwistIso build_untwist_iso(const AmbientQuotient& amb, const FiberGroup& a, const Splitting& s);

/// Convenience: fiber group, splitting and untwisting isomorphism for H in one go.
struct UntwistBundle {
    FiberGroup fiber;
    Splitting split;
    UntwistIso iso;
};
UntwistBundle untwist(const AmbientQuotient& amb, const Subgroup& H, std::size_t variant = 0);

}  // namespace primequot
