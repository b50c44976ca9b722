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

#include "json.hpp"
#include "primequot/checks.hpp"
#include "primequot/crossed.hpp"
#include "primequot/groups.hpp"
#include "primequot/matrix.hpp"

namespace primequot {

using Json = nlohmann::ordered_json;

// Field elements are written as their integer encodings.

Json to_json(const Vec& v);
Json to_json(const Matrix& m);      // list of rows
Json to_json(const Subspace& s);    // {"dim", "basis"}: reduced echelon rows
Json to_json(const Subgroup& s);
Json to_json(const CheckList& c);
Json to_json(const CocycleTable& a);

/// Rows of a cocycle table as written by to_json(CocycleTable).
std::vector<Vec> cocycle_values_from_json(const Json& j);

}  // namespace primequot
