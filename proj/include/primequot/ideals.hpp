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
#include <vector>

#include "primequot/algebra.hpp"
#include "primequot/checks.hpp"
#include "primequot/untwist.hpp"

namespace primequot {

// Two-sided ideals are Subspaces of their parent algebra.

struct IdealLattice {
    std::vector<Subspace> ideals;  // by dimension, then canonical order
    bool complete = true;          // false when the search cap was hit
};

/// All two-sided ideals, grown from 0 by adjoining principal ideals (x) with
/// x J and J x inside the current ideal; every cover arises this way.
IdealLattice enumerate_ideals(const StructAlgebra& a, std::uint64_t cap = 1u << 16);

struct PrimeCertificate {
    bool prime = false;
    std::size_t quotient_dim = 0;
    std::size_t radical_dim = 0;  // of the quotient
    std::size_t blocks = 0;       // Wedderburn blocks of the semisimple quotient
};
/// I is prime iff A/I is simple.
PrimeCertificate is_prime(const StructAlgebra& a, const Subspace& I);

/// {g : image(g) - one in I}, for a group mapped into a.
Subgroup dagger(const StructAlgebra& a, const Subspace& I, const std::vector<Vec>& group_images, const Vec& one);

bool control_check(const StructAlgebra& a, const Subspace& I, const Subspace& S);

/// M_t(X) inside M_t(k) (x) R, for a subspace X of R.
Subspace matrix_subspace(std::size_t t, std::size_t dim_r, const Subspace& x);
/// Entries of the t x t blocks of a subspace of M_t(k) (x) R.
Subspace matrix_entries(std::size_t t, std::size_t dim_r, const Subspace& x);

struct MatrixControlReport {
    bool small = false;  // (I cap S) R = I
    bool big = false;    // the same in M_t(R)
    bool agree() const { return small == big; }
};
MatrixControlReport matrix_control(const StructAlgebra& r, const Subspace& I, const Subspace& S, std::size_t t);

struct MoritaReport {
    Subspace j_small;        // ideal of S
    bool round_trip = false; // M_t(j) = J
};
/// mt is M_t(k) (x) S on the basis (i t + j) dim S + s.
MoritaReport morita_transfer(const StructAlgebra& mt, std::size_t t, std::size_t dim_s, const Subspace& J);
Subspace morita_lift(std::size_t t, std::size_t dim_s, const Subspace& j);
/// Bijection and order preservation between the ideal lattices of S and M_t(S).
CheckList morita_lattice_check(const StructAlgebra& s, std::size_t t);

struct OrbitIdealData {
    std::size_t orbit = 0;       // index into amb.orbits
    std::vector<std::uint32_t> X;
    Vec f;                       // in barKG
    Subspace M;                  // in kGamma
    std::size_t dim_f_barKG = 0;
    PrimeCertificate prime;
    CheckList checks;
};
OrbitIdealData orbit_ideal(const AmbientQuotient& amb, std::size_t orbit);

struct DeltaDaggerReport {
    Subgroup P_dagger;        // Gamma indices, inside H
    Subgroup P_delta_dagger;
    Subspace p_frak;          // in R
    Subgroup p_frak_dagger;   // H/D local indices
    std::size_t m = 1;
    Subgroup P_dagger_m;      // <g^m>
    Subgroup P_delta_dagger_m;
    CheckList checks;
};
/// P is given by its image in e barKH (local coordinates), which determines
/// an ideal of kH containing the orbit ideal.
DeltaDaggerReport delta_dagger(const AmbientQuotient& amb, const UntwistBundle& u, const Subspace& P_EH);

struct ControlReductionReport {
    bool in_kG = false;    // (P cap kH) kG = P
    bool in_bar = false;   // the same modulo J kG
    bool in_block = false; // the same in f barKG
    bool agree() const { return in_kG == in_bar && in_bar == in_block; }
};
/// P is an ideal of kGamma containing M_X, f the orbit sum in barKG.
ControlReductionReport control_reduction(const AmbientQuotient& amb, const Subspace& P, const Vec& f, const Subgroup& H);

/// Span of the images of the elements of a subgroup in barKG, optionally
/// multiplied on the left by x.
Subspace group_span(const AmbientQuotient& amb, const Subgroup& h, const Vec* x = nullptr);

/// <g^m : g in S>.
Subgroup power_subgroup(const FiniteGroup& g, const Subgroup& s, std::uint64_t m);

}  // namespace primequot
