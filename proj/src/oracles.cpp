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

#include "primequot/oracles.hpp"

#include "primequot/radical.hpp"

namespace primequot {

std::uint64_t element_count(const StructAlgebra& a) {
    std::uint64_t n = 1;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (n > (std::uint64_t{1} << 63) / a.field().size()) return std::uint64_t{1} << 63;
        n *= a.field().size();
    }
    return n;
}

Subspace brute_radical(const StructAlgebra& a, std::uint64_t cap) {
    const std::uint64_t total = element_count(a);
    if (total > cap) throw HypothesisError("algebra too large for the brute-force radical");
    const Field& k = a.field();
    const std::uint32_t q = k.size();
    Subspace out(k, a.dim());
    Vec x(a.dim(), 0);
    for (std::uint64_t code = 1; code < total; ++code) {
        std::uint64_t c = code;
        for (auto& e : x) {
            e = static_cast<Elem>(c % q);
            c /= q;
        }
        if (out.contains(x)) continue;
        if (is_nilpotent_space(a, ideal_generate(a, {x}))) out.insert(x);
    }
    return out;
}

bool brute_is_prime(const StructAlgebra& a, const IdealLattice& lattice, const Subspace& I) {
    if (!lattice.complete) throw HypothesisError("incomplete ideal lattice");
    if (I.dim() == a.dim()) return false;
    for (const auto& A : lattice.ideals) {
        if (I.contains(A)) continue;
        for (const auto& B : lattice.ideals) {
            if (I.contains(B)) continue;
            if (I.contains(product_space(a, A, B))) return false;
        }
    }
    return true;
}

OracleReport oracle_cross_check(const StructAlgebra& a, const std::string& label, bool radical_oracle, bool prime,
                                std::uint64_t radical_cap, std::size_t prime_dim) {
    OracleReport r;
    if (radical_oracle && element_count(a) <= radical_cap) {
        r.radical_checked = true;
        r.checks.add(label + ": radical = brute-force nilpotent ideals", radical(a).J == brute_radical(a, radical_cap));
    }
    if (prime && a.dim() <= prime_dim) {
        const IdealLattice lat = enumerate_ideals(a);
        if (lat.complete) {
            r.prime_checked = true;
            r.ideals = lat.ideals.size();
            std::size_t bad = 0, primes = 0;
            for (const auto& I : lat.ideals) {
                const bool p = is_prime(a, I).prime;
                primes += p;
                if (p != brute_is_prime(a, lat, I)) ++bad;
            }
            r.checks.add(label + ": is_prime = brute-force definition", bad == 0,
                         std::to_string(lat.ideals.size()) + " ideals, " + std::to_string(primes) + " prime");
        }
    }
    return r;
}

}  // namespace primequot
