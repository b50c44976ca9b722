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

namespace primequot {

/// The same algebra over the prime field, basis b_i t^s at index i n + s.
StructAlgebra restrict_scalars(const StructAlgebra& a);

struct RadicalResult {
    Subspace J;
    std::size_t nilpotency_index = 0;  // least k with J^k = 0
    std::vector<std::size_t> layer_dims;  // dim I_0, I_1, ... over the prime field
    bool certified = false;
};

/// Jacobson radical by the characteristic-p trace cascade: I_0 is the kernel
/// of the trace form, and I_i refines I_(i-1) by the generalized trace
/// Tr(x^(p^i)) / p^i computed on integer lifts. The result is certified
/// nilpotent with a semisimple quotient; certification failure throws.
RadicalResult radical(const StructAlgebra& a);

/// The bare cascade, without certification.
Subspace radical_cascade(const StructAlgebra& a, std::vector<std::size_t>* layers = nullptr);

bool is_semisimple(const StructAlgebra& a);

}  // namespace primequot
