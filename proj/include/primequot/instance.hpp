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
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "primequot/field.hpp"
#include "primequot/groups.hpp"
#include "primequot/untwist.hpp"

namespace primequot {

using Json = nlohmann::ordered_json;

/// Malformed or inconsistent instance input. `where` is a JSON pointer or a
/// byte offset into the source text.
class InstanceError : public std::invalid_argument {
  public:
    InstanceError(const std::string& where, const std::string& what)
        : std::invalid_argument(where + ": " + what), location(where) {}
    std::string location;
};

/// Instance description as read from JSON, before any group is built.
struct InstanceSpec {
    std::string name;
    Json group;                 // {"degree", "generators"} or {"cayley"}
    Json D;                     // {"elements"} | {"generator_indices"} | {"permutations"}
    std::optional<Json> H;      // same forms; defaults to the whole group
    FieldSpec field;
    Selector selector;
    std::uint64_t seed = 0;
    std::string expect;         // "" or "galois-obstruction"
    Json raw;
};

/// A resolved instance: Gamma (the larger group G), D and H inside it.
struct Instance {
    InstanceSpec spec;
    FiniteGroup gamma;
    Subgroup D;
    Subgroup H;
    Field k;
};

InstanceSpec parse_instance(const Json& j);
/// Parses JSON text; syntax errors are reported with their byte offset.
InstanceSpec parse_instance_text(const std::string& text);
Instance resolve(const InstanceSpec& spec);
Json to_json(const InstanceSpec& spec);

/// Names of the built-in instances, in run order.
const std::vector<std::string>& corpus_names();
InstanceSpec corpus_instance(const std::string& name);

/// Permutation of the nonzero vectors of GF(p)^2 induced by a 2x2 matrix
/// (row-major entries), vector (x, y) at index x + p y - 1.
Perm matrix_perm(std::uint32_t p, const std::vector<std::uint32_t>& m);

}  // namespace primequot
