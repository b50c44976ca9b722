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

#include <algorithm>
#include <random>

#include "primequot/radical.hpp"
#include "primequot/wedderburn.hpp"

namespace primequot {

std::vector<Vec> split_by_min_poly(const StructAlgebra& a, const Vec& y, const Vec& unit, std::uint64_t seed) {
    const Poly m = element_min_poly(a, y, unit);
    const Factorization f = factor(m, seed);
    if (f.factors.size() < 2) return {};
    std::vector<Vec> out;
    for (const auto& [g, mult] : f.factors) {
        Poly pp = Poly::constant(m.field(), 1);
        for (int i = 0; i < mult; ++i) pp = pp * g;
        const Poly q = m / pp;
        const ExtGcd eg = ext_gcd(q, pp);
        out.push_back(eval_poly(a, (eg.s * q) % m, y, unit));
    }
    return out;
}

namespace {

enum class Probe { Primitive, Split, Nothing };

Probe probe(const StructAlgebra& a, const Vec& y, const Vec& e, std::size_t dim_ez, std::uint64_t seed,
            std::vector<Vec>& pieces) {
    const Poly m = element_min_poly(a, y, e);
    if (static_cast<std::size_t>(m.degree()) == dim_ez && is_irreducible(m)) return Probe::Primitive;
    pieces = split_by_min_poly(a, y, e, seed);
    return pieces.empty() ? Probe::Nothing : Probe::Split;
}

}  // namespace

IdempotentResult central_primitive_idempotents(const StructAlgebra& a, std::uint64_t seed) {
    if (!is_semisimple(a)) throw AlgebraError("central_primitive_idempotents: algebra is not semisimple");
    const Field& k = a.field();
    const Subspace z = center(a);
    IdempotentResult res;
    std::mt19937_64 rng(seed);
    std::vector<Vec> pending{a.one()};
    while (!pending.empty()) {
        const Vec e = pending.back();
        pending.pop_back();
        std::vector<Vec> ez;
        for (const auto& b : z.basis()) ez.push_back(a.mul(e, b));
        const std::size_t dim_ez = Subspace::span(k, a.dim(), ez).dim();
        if (dim_ez == 1) {
            res.idempotents.push_back(e);
            continue;
        }
        Probe outcome = Probe::Nothing;
        std::vector<Vec> pieces;
        for (const auto& y : ez) {
            outcome = probe(a, y, e, dim_ez, seed, pieces);
            if (outcome != Probe::Nothing) break;
        }
        for (int attempt = 0; outcome == Probe::Nothing && attempt < 4096; ++attempt) {
            Vec y = a.zero();
            for (const auto& b : ez) vec_axpy(k, y, static_cast<Elem>(rng() % k.size()), b);
            res.used_random = true;
            res.random_elements.push_back(y);
            outcome = probe(a, y, e, dim_ez, seed, pieces);
        }
        if (outcome == Probe::Nothing) throw std::logic_error("idempotent splitting did not converge");
        if (outcome == Probe::Primitive)
            res.idempotents.push_back(e);
        else
            for (auto& p : pieces) pending.push_back(std::move(p));
    }
    std::sort(res.idempotents.begin(), res.idempotents.end(), std::greater<>());
    Vec sum = a.zero();
    for (std::size_t i = 0; i < res.idempotents.size(); ++i) {
        const Vec& e = res.idempotents[i];
        if (!is_idempotent(a, e) || !is_central(a, e)) throw std::logic_error("split produced a non-central idempotent");
        for (std::size_t j = i + 1; j < res.idempotents.size(); ++j)
            if (!vec_is_zero(a.mul(e, res.idempotents[j]))) throw std::logic_error("split idempotents not orthogonal");
        sum = a.add(sum, e);
    }
    if (sum != a.one()) throw std::logic_error("split idempotents do not sum to 1");
    return res;
}

}  // namespace primequot
