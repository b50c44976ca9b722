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

#include "primequot/radical.hpp"

#include <stdexcept>

namespace primequot {

StructAlgebra restrict_scalars(const StructAlgebra& a) {
    const Field& k = a.field();
    const std::uint32_t n = k.degree();
    if (n == 1) return a;
    const Field fp = Field::prime(k.characteristic());
    const std::size_t d = a.dim(), dd = d * n;
    const Elem t = k.generator();
    std::vector<SparseVec> sc(dd * dd);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::uint32_t s = 0; s < n; ++s)
                for (std::uint32_t r = 0; r < n; ++r) {
                    const Elem ts = k.pow(t, s + r);
                    Vec out(dd, 0);
                    for (const auto& [l, c] : a.product(i, j)) {
                        const auto cf = k.coeffs(k.mul(c, ts));
                        for (std::uint32_t u = 0; u < n; ++u) out[l * n + u] = fp.add(out[l * n + u], cf[u]);
                    }
                    sc[(i * n + s) * dd + (j * n + r)] = to_sparse(out);
                }
    Vec one(dd, 0);
    for (std::size_t i = 0; i < d; ++i) {
        const auto cf = k.coeffs(a.one()[i]);
        for (std::uint32_t u = 0; u < n; ++u) one[i * n + u] = cf[u];
    }
    return StructAlgebra(fp, dd, std::move(sc), std::move(one));
}

namespace {

using IMat = std::vector<std::uint64_t>;

IMat imul(const IMat& a, const IMat& b, std::size_t n, std::uint64_t mod) {
    IMat c(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < n; ++l) {
            const std::uint64_t x = a[i * n + l];
            if (!x) continue;
            for (std::size_t j = 0; j < n; ++j) c[i * n + j] = (c[i * n + j] + x * b[l * n + j]) % mod;
        }
    return c;
}

// Tr(M^e) mod `mod` for the integer lift M of the left-regular matrix.
std::uint64_t lifted_trace_power(const StructAlgebra& a, const Vec& x, std::uint64_t e, std::uint64_t mod) {
    const std::size_t n = a.dim();
    const Matrix m = a.left_matrix(x);
    IMat base(n * n), r(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        r[i * n + i] = 1;
        for (std::size_t j = 0; j < n; ++j) base[i * n + j] = m.at(i, j);
    }
    while (e) {
        if (e & 1) r = imul(r, base, n, mod);
        e >>= 1;
        if (e) base = imul(base, base, n, mod);
    }
    std::uint64_t tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr = (tr + r[i * n + i]) % mod;
    return tr;
}

}  // namespace

Subspace radical_cascade(const StructAlgebra& a, std::vector<std::size_t>* layers) {
    const Field& k = a.field();
    if (a.dim() == 0) return Subspace(k, 0);
    const StructAlgebra b = restrict_scalars(a);
    const Field& fp = b.field();
    const std::uint64_t p = fp.characteristic();
    const std::size_t N = b.dim();
    std::size_t l = 0;
    for (std::uint64_t pw = p; pw <= N; pw *= p) ++l;

    Subspace cur = Subspace::full(fp, N);
    std::uint64_t pi = 1;  // p^i
    for (std::size_t i = 0; i <= l && cur.dim() > 0; ++i, pi *= p) {
        const std::uint64_t mod = pi * p;
        const auto& xs = cur.basis();
        Matrix g(fp, N, xs.size());
        for (std::size_t a_idx = 0; a_idx < xs.size(); ++a_idx)
            for (std::size_t j = 0; j < N; ++j) {
                const std::uint64_t tr = lifted_trace_power(b, b.mul(xs[a_idx], b.basis(j)), pi, mod);
                if (tr % pi != 0) throw std::logic_error("generalized trace not divisible by p^i");
                g.at(j, a_idx) = static_cast<Elem>((tr / pi) % p);
            }
        const Matrix ns = nullspace(g);
        Subspace next(fp, N);
        for (std::size_t r = 0; r < ns.rows(); ++r) next.insert(cur.combine(ns.row(r)));
        cur = std::move(next);
        if (layers) layers->push_back(cur.dim());
    }
    // Back to coordinates over k.
    const std::uint32_t n = k.degree();
    Subspace out(k, a.dim());
    for (const auto& v : cur.basis()) {
        Vec w(a.dim());
        for (std::size_t i = 0; i < a.dim(); ++i) {
            std::vector<std::uint32_t> c(v.begin() + static_cast<std::ptrdiff_t>(i * n),
                                         v.begin() + static_cast<std::ptrdiff_t>((i + 1) * n));
            w[i] = k.from_coeffs(c);
        }
        out.insert(w);
    }
    if (out.dim() * n != cur.dim()) throw std::logic_error("radical over the prime field is not k-stable");
    return out;
}

RadicalResult radical(const StructAlgebra& a) {
    RadicalResult r;
    r.J = radical_cascade(a, &r.layer_dims);
    if (!is_two_sided_ideal(a, r.J)) throw std::logic_error("radical certification: not an ideal");
    if (!is_nilpotent_space(a, r.J, &r.nilpotency_index)) throw std::logic_error("radical certification: not nilpotent");
    if (r.J.dim() > 0) {
        const auto q = quotient_algebra(a, r.J);
        if (radical_cascade(q.alg).dim() != 0) throw std::logic_error("radical certification: quotient not semisimple");
    }
    r.certified = true;
    return r;
}

bool is_semisimple(const StructAlgebra& a) { return radical_cascade(a).dim() == 0; }

}  // namespace primequot
