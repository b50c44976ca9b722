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

#include "primequot/algebra.hpp"
#include "primequot/checks.hpp"
#include "primequot/ideals.hpp"

namespace primequot {

// Exhaustive definitions, usable only on tiny algebras.

/// q^dim, saturating at 2^63.
std::uint64_t element_count(const StructAlgebra& a);

/// Sum of all x whose principal ideal is nilpotent. Throws HypothesisError
/// above `cap` elements.
Subspace brute_radical(const StructAlgebra& a, std::uint64_t cap = 1u << 12);

/// For all ideals A, B of the lattice: A B in I implies A in I or B in I.
/// Proper I only; the lattice must be complete.
bool brute_is_prime(const StructAlgebra& a, const IdealLattice& lattice, const Subspace& I);

/// Radical and primality cross-checks on one algebra. Oracles run only where
/// the size bounds allow; the result records what was skipped.
struct OracleReport {
    bool radical_checked = false;
    bool prime_checked = false;
    std::size_t ideals = 0;
    CheckList checks;
};
OracleReport oracle_cross_check(const StructAlgebra& a, const std::string& label, bool radical, bool prime,
                                std::uint64_t radical_cap = 1u << 12, std::size_t prime_dim = 12);

}  // namespace primequot
