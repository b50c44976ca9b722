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

#include <vector>

#include "primequot/algebra.hpp"
#include "primequot/checks.hpp"
#include "primequot/untwist.hpp"

namespace primequot {

/// Blocks e_i R e_j for orthogonal idempotents summing to 1, with transport
/// elements E_1i in R_1i and E_i1 in R_i1 (E_1i E_i1 = e_1, E_i1 E_1i = e_i).
struct PeirceSystem {
    StructAlgebra R;
    std::vector<Vec> idem;
    std::vector<Vec> e1i, ei1;
    std::vector<Subspace> blocks;  // at i r + j
    Subalgebra S1;                 // e_1 R e_1
    CheckList checks;

    std::size_t r() const { return idem.size(); }
    const Subspace& block(std::size_t i, std::size_t j) const { return blocks.at(i * r() + j); }
    std::vector<std::vector<std::size_t>> dims() const;
};

PeirceSystem peirce_decompose(const StructAlgebra& R, const std::vector<Vec>& idem, const std::vector<Vec>& e1i,
                              const std::vector<Vec>& ei1);

struct MatrixUnitsIso {
    StructAlgebra target;  // M_r(k) (x) S1
    Matrix iso;            // R -> target, x -> sum E_ij (x) E_1i x E_j1
    CheckList checks;
};
MatrixUnitsIso matrix_units_iso(const PeirceSystem& sys);

/// A_ij = e_i A e_j; checks A = sum A_ij and A_ij R_kl = delta_jk A_il.
CheckList block_product_check(const PeirceSystem& sys, const Subspace& A);

/// The Peirce system of f barKG for a Gamma-orbit of block idempotents.
struct OrbitPeirce {
    std::size_t orbit = 0;
    std::vector<std::uint32_t> X;
    Vec f;                            // in barKG
    Subalgebra Rsub;                  // f barKG inside barKG
    std::vector<Subgroup> stabilizers;
    std::vector<GIdx> pair_units;     // least g with e_i g = g e_j, at i r + j
    std::vector<Vec> group_images;    // f g in R coordinates
    PeirceSystem sys;
    CheckList checks;
};
OrbitPeirce peirce_from_orbit(const AmbientQuotient& amb, std::size_t orbit);

struct DaggerBlocksReport {
    Subgroup A_dagger;
    std::vector<Subgroup> B_dagger;
    CheckList checks;
};
/// A is a proper Gamma-stable ideal of R (R coordinates).
DaggerBlocksReport dagger_blocks(const OrbitPeirce& op, const FiniteGroup& gamma, const Subspace& A);

struct BlockControlReport {
    std::vector<Subspace> Q;           // in kG_i, local basis of the stabilizer
    bool P_controlled = false;
    std::vector<bool> Q_controlled;
    bool control_equivalent = false;
    Subgroup P_dagger;
    std::vector<Subgroup> Q_dagger;    // Gamma indices
    CheckList checks;
};
/// P is an ideal of kGamma containing M_X; H normal in Gamma and containing D.
BlockControlReport control_reduction_blocks(const AmbientQuotient& amb, const OrbitPeirce& op, const Subspace& P,
                                        const Subgroup& H);

}  // namespace primequot
