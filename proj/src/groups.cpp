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

#include "primequot/groups.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>

namespace primequot {

FiniteGroup::FiniteGroup(std::vector<GIdx> table, std::size_t n) : n_(n), table_(std::move(table)), inv_(n, 0) {
    for (GIdx a = 0; a < n_; ++a)
        for (GIdx b = 0; b < n_; ++b)
            if (mul(a, b) == 0) {
                inv_[a] = b;
                break;
            }
}

FiniteGroup FiniteGroup::from_permutations(std::size_t degree, const std::vector<Perm>& gens, std::size_t cap) {
    for (const auto& g : gens) {
        if (g.size() != degree) throw GroupError("generator has wrong degree");
        std::vector<bool> seen(degree, false);
        for (auto x : g) {
            if (x >= degree || seen[x]) throw GroupError("generator is not a permutation");
            seen[x] = true;
        }
    }
    Perm id(degree);
    for (std::uint32_t i = 0; i < degree; ++i) id[i] = i;
    std::vector<Perm> elems{id};
    std::map<Perm, GIdx> index{{id, 0}};
    auto compose = [&](const Perm& a, const Perm& b) {
        Perm c(degree);
        for (std::size_t i = 0; i < degree; ++i) c[i] = a[b[i]];
        return c;
    };
    // Breadth-first closure: the frontier element times each generator.
    std::vector<GIdx> gen_idx;
    for (const auto& g : gens) {
        auto [it, fresh] = index.try_emplace(g, static_cast<GIdx>(elems.size()));
        if (fresh) elems.push_back(g);
        gen_idx.push_back(it->second);
    }
    for (std::size_t head = 0; head < elems.size(); ++head) {
        for (const auto& g : gens) {
            Perm c = compose(elems[head], g);
            if (index.try_emplace(c, static_cast<GIdx>(elems.size())).second) {
                elems.push_back(std::move(c));
                if (elems.size() > cap) throw GroupError("group closure exceeds order cap " + std::to_string(cap));
            }
        }
    }
    const std::size_t n = elems.size();
    std::vector<GIdx> table(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) table[a * n + b] = index.at(compose(elems[a], elems[b]));
    FiniteGroup g(std::move(table), n);
    g.perms_ = std::move(elems);
    g.gen_idx_ = std::move(gen_idx);
    return g;
}

FiniteGroup FiniteGroup::from_cayley(const std::vector<std::vector<GIdx>>& rows, std::size_t cap) {
    const std::size_t n = rows.size();
    if (n == 0) throw GroupError("empty Cayley table");
    if (n > cap) throw GroupError("Cayley table exceeds order cap");
    std::vector<GIdx> table(n * n);
    for (std::size_t a = 0; a < n; ++a) {
        if (rows[a].size() != n) throw GroupError("Cayley table is not square");
        for (std::size_t b = 0; b < n; ++b) {
            if (rows[a][b] >= n) throw GroupError("Cayley table entry out of range");
            table[a * n + b] = rows[a][b];
        }
    }
    for (std::size_t a = 0; a < n; ++a)
        if (table[a] != a || table[a * n] != a) throw GroupError("element 0 is not the identity");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (table[table[a * n + b] * n + c] != table[a * n + table[b * n + c]])
                    throw GroupError("Cayley table is not associative");
    for (std::size_t a = 0; a < n; ++a) {
        std::vector<bool> seen(n, false);
        for (std::size_t b = 0; b < n; ++b) seen[table[a * n + b]] = true;
        if (std::find(seen.begin(), seen.end(), false) != seen.end()) throw GroupError("Cayley table row is not a permutation");
    }
    return FiniteGroup(std::move(table), n);
}

void FiniteGroup::set_names(std::vector<std::string> names) {
    if (names.size() != n_) throw GroupError("name list length differs from group order");
    names_ = std::move(names);
}

std::vector<std::vector<GIdx>> FiniteGroup::cayley() const {
    std::vector<std::vector<GIdx>> out(n_, std::vector<GIdx>(n_));
    for (GIdx a = 0; a < n_; ++a)
        for (GIdx b = 0; b < n_; ++b) out[a][b] = mul(a, b);
    return out;
}

GIdx FiniteGroup::pow(GIdx a, std::uint64_t e) const {
    GIdx r = 0;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::size_t FiniteGroup::element_order(GIdx a) const {
    std::size_t k = 1;
    for (GIdx x = a; x != 0; x = mul(x, a)) ++k;
    return k;
}

bool Subgroup::contains(GIdx g) const { return std::binary_search(elems.begin(), elems.end(), g); }

Subgroup trivial_subgroup() { return Subgroup{{0}}; }

Subgroup whole_group(const FiniteGroup& g) {
    Subgroup s;
    for (GIdx i = 0; i < g.order(); ++i) s.elems.push_back(i);
    return s;
}

Subgroup generate_subgroup(const FiniteGroup& g, const std::vector<GIdx>& gens) {
    std::vector<bool> in(g.order(), false);
    std::vector<GIdx> list{0};
    in[0] = true;
    for (std::size_t head = 0; head < list.size(); ++head)
        for (GIdx x : gens) {
            const GIdx y = g.mul(list[head], x);
            if (!in[y]) {
                in[y] = true;
                list.push_back(y);
            }
        }
    std::sort(list.begin(), list.end());
    return Subgroup{list};
}

bool is_subgroup(const FiniteGroup& g, const std::vector<GIdx>& elems) {
    std::vector<bool> in(g.order(), false);
    for (auto x : elems) {
        if (x >= g.order()) return false;
        in[x] = true;
    }
    if (!in[0]) return false;
    for (auto a : elems)
        for (auto b : elems)
            if (!in[g.mul(a, g.inv(b))]) return false;
    return true;
}

bool is_normal(const FiniteGroup& g, const Subgroup& n) {
    for (GIdx x = 0; x < g.order(); ++x)
        for (auto a : n.elems)
            if (!n.contains(g.conj(a, x))) return false;
    return true;
}

Subgroup normalizer(const FiniteGroup& g, const Subgroup& s) {
    Subgroup out;
    for (GIdx x = 0; x < g.order(); ++x) {
        bool ok = true;
        for (auto a : s.elems)
            if (!s.contains(g.conj(a, x))) {
                ok = false;
                break;
            }
        if (ok) out.elems.push_back(x);
    }
    return out;
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
    Subgroup out;
    std::set_intersection(a.elems.begin(), a.elems.end(), b.elems.begin(), b.elems.end(), std::back_inserter(out.elems));
    return out;
}

Subgroup conjugate(const FiniteGroup& g, const Subgroup& s, GIdx x) {
    Subgroup out;
    for (auto a : s.elems) out.elems.push_back(g.conj(a, x));
    std::sort(out.elems.begin(), out.elems.end());
    return out;
}

bool is_homomorphism(const FiniteGroup& src, const FiniteGroup& dst, const GroupHom& f) {
    if (f.image.size() != src.order()) return false;
    for (auto y : f.image)
        if (y >= dst.order()) return false;
    if (f(0) != 0) return false;
    for (GIdx a = 0; a < src.order(); ++a)
        for (GIdx b = 0; b < src.order(); ++b)
            if (f(src.mul(a, b)) != dst.mul(f(a), f(b))) return false;
    return true;
}

Subgroup kernel(const GroupHom& f) {
    Subgroup k;
    for (GIdx a = 0; a < f.image.size(); ++a)
        if (f(a) == 0) k.elems.push_back(a);
    return k;
}

Subgroup image(const GroupHom& f) {
    Subgroup s{f.image};
    std::sort(s.elems.begin(), s.elems.end());
    s.elems.erase(std::unique(s.elems.begin(), s.elems.end()), s.elems.end());
    return s;
}

SubgroupGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& s) {
    if (!is_subgroup(g, s.elems)) throw GroupError("element set is not a subgroup");
    const std::size_t n = s.order();
    std::vector<GIdx> index_of(g.order(), std::numeric_limits<GIdx>::max());
    for (GIdx i = 0; i < n; ++i) index_of[s.elems[i]] = i;
    std::vector<std::vector<GIdx>> rows(n, std::vector<GIdx>(n));
    for (GIdx a = 0; a < n; ++a)
        for (GIdx b = 0; b < n; ++b) rows[a][b] = index_of[g.mul(s.elems[a], s.elems[b])];
    FiniteGroup h = FiniteGroup::from_cayley(rows, std::max<std::size_t>(n, kDefaultOrderCap));
    if (!g.names().empty()) {
        std::vector<std::string> names;
        for (auto x : s.elems) names.push_back(g.names()[x]);
        h.set_names(std::move(names));
    }
    return {std::move(h), GroupHom{s.elems}, std::move(index_of)};
}

std::vector<GIdx> coset_representatives(const FiniteGroup& g, const Subgroup& h) {
    std::vector<bool> seen(g.order(), false);
    std::vector<GIdx> reps;
    for (GIdx x = 0; x < g.order(); ++x) {
        if (seen[x]) continue;
        reps.push_back(x);
        for (auto a : h.elems) seen[g.mul(x, a)] = true;
    }
    return reps;
}

Quotient quotient_group(const FiniteGroup& g, const Subgroup& n) {
    if (!is_subgroup(g, n.elems)) throw GroupError("quotient by a non-subgroup");
    if (!is_normal(g, n)) throw GroupError("quotient by a non-normal subgroup");
    const auto reps = coset_representatives(g, n);
    std::vector<GIdx> proj(g.order());
    for (GIdx i = 0; i < reps.size(); ++i)
        for (auto a : n.elems) proj[g.mul(reps[i], a)] = i;
    const std::size_t m = reps.size();
    std::vector<std::vector<GIdx>> rows(m, std::vector<GIdx>(m));
    for (GIdx a = 0; a < m; ++a)
        for (GIdx b = 0; b < m; ++b) rows[a][b] = proj[g.mul(reps[a], reps[b])];
    return {FiniteGroup::from_cayley(rows, std::max<std::size_t>(m, kDefaultOrderCap)), GroupHom{proj}, reps};
}

std::uint64_t p_part(std::uint64_t n, std::uint32_t p) {
    std::uint64_t r = 1;
    while (n % p == 0) {
        n /= p;
        r *= p;
    }
    return r;
}

bool is_p_group_order(std::uint64_t n, std::uint32_t p) { return p_part(n, p) == n; }

Subgroup sylow_subgroup(const FiniteGroup& g, std::uint32_t p) {
    const std::uint64_t target = p_part(g.order(), p);
    Subgroup cur = trivial_subgroup();
    while (cur.order() < target) {
        const Subgroup nrm = normalizer(g, cur);
        bool grown = false;
        for (auto x : nrm.elems) {
            if (cur.contains(x) || !cur.contains(g.pow(x, p))) continue;
            std::vector<GIdx> gens = cur.elems;
            gens.push_back(x);
            cur = generate_subgroup(g, gens);
            grown = true;
            break;
        }
        if (!grown) throw GroupError("Sylow growth stalled");
    }
    return cur;
}

void check_action(const FiniteGroup& g, const std::vector<std::vector<std::uint32_t>>& act) {
    if (act.size() != g.order()) throw GroupError("action table has wrong length");
    const std::size_t m = act[0].size();
    for (std::uint32_t x = 0; x < m; ++x)
        if (act[0][x] != x) throw GroupError("identity does not act trivially");
    for (GIdx a = 0; a < g.order(); ++a) {
        if (act[a].size() != m) throw GroupError("ragged action table");
        for (GIdx b = 0; b < g.order(); ++b)
            for (std::uint32_t x = 0; x < m; ++x)
                if (act[g.mul(a, b)][x] != act[a][act[b][x]])
                    throw GroupError("action axiom fails at (" + std::to_string(a) + ", " + std::to_string(b) + ")");
    }
}

std::vector<Orbit> action_orbits(const FiniteGroup& g, const std::vector<std::vector<std::uint32_t>>& act) {
    check_action(g, act);
    const std::size_t m = act[0].size();
    std::vector<bool> seen(m, false);
    std::vector<Orbit> out;
    for (std::uint32_t x = 0; x < m; ++x) {
        if (seen[x]) continue;
        Orbit o;
        std::map<std::uint32_t, GIdx> first;
        for (GIdx a = 0; a < g.order(); ++a) {
            first.try_emplace(act[a][x], a);
            if (act[a][x] == x) o.stabilizer.elems.push_back(a);
        }
        for (auto [pt, a] : first) {
            o.points.push_back(pt);
            o.transversal.push_back(a);
            seen[pt] = true;
        }
        out.push_back(std::move(o));
    }
    return out;
}

}  // namespace primequot
