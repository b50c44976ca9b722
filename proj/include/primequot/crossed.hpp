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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "primequot/algebra.hpp"
#include "primequot/checks.hpp"
#include "primequot/untwist.hpp"

namespace primequot {

/// R * F with r^sigma(f) = f^-1 r f and f f' = (f f') tau(f, f').
struct CrossedPresentation {
    StructAlgebra R;
    FiniteGroup F;
    std::vector<Matrix> sigma;  // per f, on R coordinates
    std::vector<Vec> tau;       // at f |F| + f'
    std::vector<Vec> lifts;     // ambient coordinates, when extracted from an algebra
    CheckList checks;

    const Vec& t(GIdx x, GIdx y) const { return tau.at(x * F.order() + y); }
};

/// Reads sigma and tau off S = sum of lifts times R, verifying the direct sum,
/// that lifts are units, and the four crossed-product identities.
CrossedPresentation crossed_from_decomposition(const StructAlgebra& s, const Subalgebra& r, const FiniteGroup& f,
                                               const std::vector<Vec>& lifts);

/// Action law and twisting cocycle law, exhaustively.
CheckList crossed_identities(const CrossedPresentation& p);

/// The same presentation along an algebra isomorphism R -> R2 (matrix map).
CrossedPresentation transport(const CrossedPresentation& p, const StructAlgebra& r2, const Matrix& map);

/// Structure constants of R * F on the basis f dim(R) + r. Throws
/// AlgebraError when associativity or the identity law fails.
StructAlgebra crossed_algebra(const CrossedPresentation& p);

struct CocycleTable {
    FiniteGroup F;
    std::vector<Vec> values;  // R-valued, at x |F| + y

    const Vec& at(GIdx x, GIdx y) const { return values.at(x * F.order() + y); }
};

struct CocycleReport {
    bool ok = false;
    std::optional<std::array<GIdx, 3>> witness;  // first failing (x, y, z)
};

/// Throws AlgebraError when some value is not a central unit of R.
CocycleReport cocycle_check(const CrossedPresentation& p, const CocycleTable& a);

struct TwistResult {
    CrossedPresentation pres;
    std::optional<StructAlgebra> algebra;  // set when associative
    bool associative = false;
    std::string failure;
};
/// S_alpha: same action, twisting tau alpha. With validate set an invalid
/// cocycle is rejected up front; without it the structure constants are
/// built anyway and associativity is tested directly.
TwistResult twist(const CrossedPresentation& p, const CocycleTable& a, bool validate = true);

struct CoboundarySearch {
    bool found = false;
    bool cap_exceeded = false;
    std::vector<Vec> phi;  // per f
    std::uint64_t nodes = 0;
};
/// Backtracking search for phi with alpha(x,y) = phi(xy)^-1 phi(x)^sigma(y) phi(y)
/// among the candidate units; a returned phi has been re-verified.
CoboundarySearch coboundary_witness(const CrossedPresentation& p, const CocycleTable& a,
                                    const std::vector<Vec>& candidates, std::uint64_t cap = 1u << 22);

/// The coboundary of phi.
CocycleTable coboundary(const CrossedPresentation& p, const std::vector<Vec>& phi);

/// All central units of R; throws when the center has more than cap elements.
std::vector<Vec> central_units(const StructAlgebra& r, std::uint64_t cap = 1u << 16);

struct TwistedExtension {
    Quotient F;                // Gamma / H, least-element representatives
    std::vector<Vec> M;        // lift per Gamma element, C coordinates
    std::vector<Vec> xt;       // M_g^-1 g in barKG
    std::vector<Vec> xt_inv;
    Subalgebra EG;             // e barKG
    Subalgebra ZG;             // centralizer of the matrix units in EG
    Subalgebra ZH;             // subalgebra of ZG.alg
    Matrix psi_prime;          // ZH.alg -> R
    Matrix psi_prime_inv;
    CrossedPresentation pres_z;    // transported to R
    CrossedPresentation pres_ref;  // from k'[G/D], transported to R
    CocycleTable alpha;
    bool alpha_scalar = false;
    std::vector<Elem> alpha_scalars;  // k' values when scalar
    CocycleReport cocycle;
    StructAlgebra S_alpha;
    StructAlgebra target;      // M_t(k) (x) S_alpha
    Matrix psi_tilde;          // EG -> target
    std::vector<Matrix> theta; // per Gamma element, on R
    CoboundarySearch coboundary;
    CheckList checks;

    Vec z_to_bar(const Vec& zh_local) const { return ZG.to_parent(ZH.to_parent(zh_local)); }
};

/// Gamma plays the role of G; H is the subgroup the bundle was built for.
TwistedExtension extract_twisted_extension(const AmbientQuotient& amb, const UntwistBundle& u, std::uint64_t search_cap = 1u << 22);

/// An ideal of kH (local H basis) containing ker q, pulled back from an ideal
/// of R through psi.
Subspace pullback_ideal(const AmbientQuotient& amb, const UntwistBundle& u, const Subspace& ideal_of_r);

struct TransferReport {
    Subspace a_frak;  // in R
    bool stable_kH = false;
    bool stable_EH = false;
    bool stable_R = false;
    bool equivalent = false;
    std::optional<bool> product_identity;  // when stable
    CheckList checks;
};
/// A is an ideal of kH (local H basis) containing the orbit ideal ker q.
TransferReport transfer_g_stable_ideal(const AmbientQuotient& amb, const UntwistBundle& u, const TwistedExtension& b,
                                       const Subspace& A);

}  // namespace primequot
