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
#include <functional>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "primequot/algebra.hpp"

namespace primequot {

/// CRT idempotents of the subalgebra k[y] (with `unit` as 1), one per
/// coprime primary factor of the minimal polynomial, in factor order.
std::vector<Vec> split_by_min_poly(const StructAlgebra& a, const Vec& y, const Vec& unit, std::uint64_t seed);

struct IdempotentResult {
    std::vector<Vec> idempotents;  // descending lexicographic order
    bool used_random = false;      // the center-basis sweep stalled
    std::vector<Vec> random_elements;
};

/// Centrally primitive idempotents of a semisimple algebra. Splits by factored
/// minimal polynomials of e z over a sweep of the center basis; seeded random
/// center elements are used only if the sweep stalls.
IdempotentResult central_primitive_idempotents(const StructAlgebra& a, std::uint64_t seed = 0);

/// Certificate that C = eA is M_t(k') with explicit matrix units.
struct WedderburnCertificate {
    Vec e;                   // parent coordinates
    Subalgebra component;    // C with identity e
    std::size_t t = 1;
    std::size_t m = 1;       // [k':k]
    Field kprime;
    FieldAlgebra kalg;       // k' as a k-algebra
    Subspace center;         // Z(C) in C coordinates
    Vec zeta;                // image of the generator of k' in C
    std::vector<Vec> zeta_powers;  // zeta^s, s < [k':F_p], in C coordinates
    std::vector<Vec> units;  // e_ij at index i t + j, C coordinates
    StructAlgebra target;    // M_t(k) (x) kalg
    Matrix iso;              // C -> target
    Matrix iso_inverse;

    /// k' element as an element of Z(C).
    Vec scalar(Elem x) const;
    /// Inverse of `scalar` on Z(C).
    Elem scalar_value(const Vec& c) const;
    std::map<Vec, Elem> scalar_lookup;
};

WedderburnCertificate wedderburn_split(const StructAlgebra& a, const Vec& e, std::uint64_t seed = 0);

/// Matrix of a linear map f restricted to a subalgebra, in local coordinates.
Matrix restrict_map(const Subalgebra& s, const std::function<Vec(const Vec&)>& f);

struct GaloisObstruction {
    std::uint32_t frobenius_power = 0;  // zeta -> zeta^(p^s)
    Vec zeta_image;
    std::string description;
};

using SkolemNoether = std::variant<Vec, GaloisObstruction>;

/// M with x^phi = M^-1 x M on the component, or the obstruction when phi
/// moves the center. phi acts on C coordinates. M is the first vector of the
/// reduced echelon basis of {M : x M = M x^phi}.
SkolemNoether skolem_noether(const WedderburnCertificate& cert, const Matrix& phi);

}  // namespace primequot
