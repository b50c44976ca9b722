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

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace primequot {

struct Check {
    std::string name;
    bool ok = false;
    std::string detail;
};

/// Ordered list of verified identities.
struct CheckList {
    std::vector<Check> items;

    bool add(std::string name, bool ok, std::string detail = {}) {
        items.push_back({std::move(name), ok, std::move(detail)});
        return ok;
    }
    void append(const CheckList& other, const std::string& prefix = {}) {
        for (const auto& c : other.items) items.push_back({prefix + c.name, c.ok, c.detail});
    }
    bool all_ok() const {
        return std::all_of(items.begin(), items.end(), [](const Check& c) { return c.ok; });
    }
    const Check* first_failure() const {
        for (const auto& c : items)
            if (!c.ok) return &c;
        return nullptr;
    }
};

/// A precondition of a construction does not hold for the given input.
class HypothesisError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// An identity that the construction must satisfy failed.
class VerificationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

inline void require(const CheckList& c, const std::string& what) {
    if (const Check* f = c.first_failure()) throw VerificationError(what + ": " + f->name + (f->detail.empty() ? "" : " (" + f->detail + ")"));
}

}  // namespace primequot
