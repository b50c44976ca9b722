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

namespace primequot {

using GIdx = std::uint32_t;
using Perm = std::vector<std::uint32_t>;

inline constexpr std::size_t kDefaultOrderCap = 512;

class GroupError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Finite group as a full Cayley table. Element 0 is the identity.
class FiniteGroup {
  public:
    FiniteGroup() : FiniteGroup(std::vector<GIdx>{0}, 1) {}

    /// Closure of the generators under composition, enumerated breadth-first.
    /// The product g*h is the permutation i -> g(h(i)).
    static FiniteGroup from_permutations(std::size_t degree, const std::vector<Perm>& gens,
                                         std::size_t cap = kDefaultOrderCap);
    /// Validates the group law for orders up to the cap.
    static FiniteGroup from_cayley(const std::vector<std::vector<GIdx>>& table, std::size_t cap = kDefaultOrderCap);

    std::size_t order() const { return n_; }
    GIdx mul(GIdx a, GIdx b) const { return table_[a * n_ + b]; }
    GIdx inv(GIdx a) const { return inv_[a]; }
    GIdx pow(GIdx a, std::uint64_t e) const;
    std::size_t element_order(GIdx a) const;
    /// Right conjugation a^g = g^-1 a g.
    GIdx conj(GIdx a, GIdx g) const { return mul(inv(g), mul(a, g)); }

    const std::vector<std::string>& names() const { return names_; }
    void set_names(std::vector<std::string> names);
    /// Permutation realizing each element, when built from permutations.
    const std::vector<Perm>& perms() const { return perms_; }
    /// Indices of the generating elements, when built from permutations.
    const std::vector<GIdx>& generator_indices() const { return gen_idx_; }
    std::vector<std::vector<GIdx>> cayley() const;

  private:
    FiniteGroup(std::vector<GIdx> table, std::size_t n);
    std::size_t n_;
    std::vector<GIdx> table_;
    std::vector<GIdx> inv_;
    std::vector<std::string> names_;
    std::vector<Perm> perms_;
    std::vector<GIdx> gen_idx_;
};

/// Member set of a subgroup, sorted ascending.
struct Subgroup {
    std::vector<GIdx> elems;

    std::size_t order() const { return elems.size(); }
    bool contains(GIdx g) const;
    friend bool operator==(const Subgroup&, const Subgroup&) = default;
};

Subgroup trivial_subgroup();
Subgroup whole_group(const FiniteGroup& g);
Subgroup generate_subgroup(const FiniteGroup& g, const std::vector<GIdx>& gens);
bool is_subgroup(const FiniteGroup& g, const std::vector<GIdx>& elems);
bool is_normal(const FiniteGroup& g, const Subgroup& n);
Subgroup normalizer(const FiniteGroup& g, const Subgroup& s);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
/// g^-1 S g.
Subgroup conjugate(const FiniteGroup& g, const Subgroup& s, GIdx x);

struct GroupHom {
    std::vector<GIdx> image;  // indexed by source element

    GIdx operator()(GIdx g) const { return image.at(g); }
};

bool is_homomorphism(const FiniteGroup& src, const FiniteGroup& dst, const GroupHom& f);
Subgroup kernel(const GroupHom& f);
Subgroup image(const GroupHom& f);

/// A subgroup materialized as a group; element i corresponds to the i-th
/// smallest member, so the identity stays at 0.
struct SubgroupGroup {
    FiniteGroup group;
    GroupHom inclusion;
    std::vector<GIdx> index_of;  // parent index -> local index, or UINT32_MAX
};
SubgroupGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& s);

struct Quotient {
    FiniteGroup group;
    GroupHom projection;
    std::vector<GIdx> reps;  // least element of each coset, increasing
};
/// G/N; cosets are ordered by their least element.
Quotient quotient_group(const FiniteGroup& g, const Subgroup& n);

/// Cosets xH (equal to Hx when H is normal) with least-index representatives.
std::vector<GIdx> coset_representatives(const FiniteGroup& g, const Subgroup& h);

std::uint64_t p_part(std::uint64_t n, std::uint32_t p);
bool is_p_group_order(std::uint64_t n, std::uint32_t p);

/// Sylow p-subgroup grown from the trivial group: repeatedly adjoin the
/// least-index x in N(P) \ P with x^p in P.
Subgroup sylow_subgroup(const FiniteGroup& g, std::uint32_t p);

/// A left action given as act[g][x] = g.x.
struct Orbit {
    std::vector<std::uint32_t> points;  // sorted
    Subgroup stabilizer;                // of points.front()
    std::vector<GIdx> transversal;      // least g with g.points.front() = points[i]
};
std::vector<Orbit> action_orbits(const FiniteGroup& g, const std::vector<std::vector<std::uint32_t>>& act);
/// Throws GroupError on an action-axiom violation.
void check_action(const FiniteGroup& g, const std::vector<std::vector<std::uint32_t>>& act);

}  // namespace primequot
