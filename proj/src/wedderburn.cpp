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

#include "primequot/wedderburn.hpp"

#include <random>

namespace primequot {

Vec WedderburnCertificate::scalar(Elem x) const {
    const Field& k = component.alg.field();
    const auto cf = kprime.coeffs(x);
    Vec r = component.alg.zero();
    for (std::size_t u = 0; u < cf.size(); ++u) vec_axpy(k, r, k.from_int(cf[u]), zeta_powers[u]);
    return r;
}

Elem WedderburnCertificate::scalar_value(const Vec& c) const {
    auto it = scalar_lookup.find(c);
    if (it == scalar_lookup.end()) throw AlgebraError("element is not a central scalar of the component");
    return it->second;
}

Matrix restrict_map(const Subalgebra& s, const std::function<Vec(const Vec&)>& f) {
    const std::size_t d = s.alg.dim();
    Matrix m(s.alg.field(), d, d);
    for (std::size_t j = 0; j < d; ++j) {
        const Vec c = s.to_local(f(s.span.basis()[j]));
        for (std::size_t i = 0; i < d; ++i) m.at(i, j) = c[i];
    }
    return m;
}

namespace {

// Elements of a subspace enumerated by little-endian digit vectors.
Vec enumerate_element(const Subspace& s, std::uint64_t idx, const Field& k) {
    Vec c(s.dim(), 0);
    for (std::size_t i = 0; i < s.dim(); ++i) {
        c[i] = static_cast<Elem>(idx % k.size());
        idx /= k.size();
    }
    return s.combine(c);
}

Vec random_element(const Subspace& s, const Field& k, std::mt19937_64& rng) {
    Vec c(s.dim());
    for (auto& x : c) x = static_cast<Elem>(rng() % k.size());
    return s.combine(c);
}

}  // namespace

WedderburnCertificate wedderburn_split(const StructAlgebra& a, const Vec& e, std::uint64_t seed) {
    const Field& k = a.field();
    if (!is_idempotent(a, e) || vec_is_zero(e)) throw AlgebraError("wedderburn_split: e is not a nonzero idempotent");
    if (!is_central(a, e)) throw AlgebraError("wedderburn_split: e is not central");
    WedderburnCertificate cert;
    cert.e = e;
    cert.component = subalgebra(a, left_translate(a, e, Subspace::full(k, a.dim())), e);
    const StructAlgebra& c = cert.component.alg;
    const Vec& one = c.one();
    const std::size_t dc = c.dim();
    std::mt19937_64 rng(seed);

    cert.center = center(c);
    const std::size_t m = cert.center.dim();
    cert.m = m;
    // Primitivity: Z(C) must be a field, witnessed by an element of full degree.
    bool is_field = false;
    for (std::size_t attempt = 0; attempt < 4096 && !is_field; ++attempt) {
        const Vec y = attempt < m ? cert.center.basis()[attempt] : random_element(cert.center, k, rng);
        const Poly mp = element_min_poly(c, y, one);
        if (static_cast<std::size_t>(mp.degree()) == m && is_irreducible(mp)) is_field = true;
        else if (!split_by_min_poly(c, y, one, seed).empty()) break;
    }
    if (!is_field) throw AlgebraError("wedderburn_split: e is not centrally primitive");
    std::size_t t = 0;
    while ((t + 1) * (t + 1) * m <= dc) ++t;
    if (t * t * m != dc) throw AlgebraError("wedderburn_split: component dimension is not t^2 m");
    cert.t = t;

    const std::uint32_t p = k.characteristic();
    cert.kprime = Field::make(p, k.degree() * static_cast<std::uint32_t>(m));
    cert.kalg = field_algebra(k, cert.kprime);
    const std::uint32_t big_n = cert.kprime.degree();

    // zeta: first root of the k' modulus in Z(C) compatible with k.
    const auto& mod = cert.kprime.spec().modulus;
    std::vector<std::int64_t> modi(mod.begin(), mod.end());
    const Poly mu = Poly::from_ints(k, modi);
    const Elem kgen_img = cert.kalg.embedding.generator_image;
    const auto kgen_cf = cert.kprime.coeffs(kgen_img);
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < m; ++i) count *= k.size();
    bool found = false;
    for (std::uint64_t idx = 0; idx < count && !found; ++idx) {
        // Over the prime field itself the generator is 1.
        const Vec z = big_n == 1 ? one : enumerate_element(cert.center, idx, k);
        if (big_n > 1 && !vec_is_zero(eval_poly(c, mu, z, one))) continue;
        std::vector<Vec> pw{one};
        for (std::uint32_t u = 1; u < big_n; ++u) pw.push_back(c.mul(pw.back(), z));
        if (k.degree() > 1) {
            Vec img = c.zero();
            for (std::size_t u = 0; u < kgen_cf.size(); ++u) vec_axpy(k, img, k.from_int(kgen_cf[u]), pw[u]);
            if (img != c.scale(one, k.generator())) continue;
        }
        cert.zeta = z;
        cert.zeta_powers = std::move(pw);
        found = true;
    }
    if (!found) throw std::logic_error("wedderburn_split: no root of the extension modulus in the center");
    for (Elem x = 0; x < cert.kprime.size(); ++x) cert.scalar_lookup.emplace(cert.scalar(x), x);
    if (cert.scalar_lookup.size() != cert.kprime.size()) throw std::logic_error("center map is not injective");

    // A primitive idempotent e11 by repeated splitting of corners.
    const Subspace full = Subspace::full(k, dc);
    Vec eps = one;
    for (;;) {
        const Subspace corner = sandwich(c, eps, full, eps);
        if (corner.dim() == m) break;
        std::vector<Vec> pieces;
        for (std::size_t attempt = 0; attempt < 8192 && pieces.empty(); ++attempt) {
            const Vec y = attempt < corner.dim() ? corner.basis()[attempt] : random_element(corner, k, rng);
            pieces = split_by_min_poly(c, y, eps, seed);
        }
        if (pieces.empty()) throw std::logic_error("wedderburn_split: corner splitting did not converge");
        eps = pieces.front();
    }
    const Vec e11 = eps;

    // K-basis of e11 C with v_1 = e11.
    std::vector<Vec> kbasis;  // Z(C) basis over k, as zeta^s
    for (std::size_t s = 0; s < m; ++s) kbasis.push_back(cert.zeta_powers[s]);
    const Subspace row = left_translate(c, e11, full);
    std::vector<Vec> v{e11};
    Subspace kspan(k, dc);
    for (const auto& kb : kbasis) kspan.insert(c.mul(kb, e11));
    for (const auto& b : row.basis()) {
        if (v.size() == t) break;
        if (kspan.contains(b)) continue;
        v.push_back(b);
        for (const auto& kb : kbasis) kspan.insert(c.mul(kb, b));
    }
    if (v.size() != t) throw std::logic_error("wedderburn_split: row space has the wrong K-dimension");
    for (std::size_t i = 1; i < t; ++i) v[i] = c.sub(v[i], c.mul(v[i], e11));

    // Dual vectors w_j in C e11 with v_i w_j = delta_ij e11.
    const Subspace col = right_translate(c, full, e11);
    const auto& ub = col.basis();
    Matrix sys(k, t * dc, ub.size());
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t a_idx = 0; a_idx < ub.size(); ++a_idx) {
            const Vec pr = c.mul(v[i], ub[a_idx]);
            for (std::size_t r = 0; r < dc; ++r) sys.at(i * dc + r, a_idx) = pr[r];
        }
    std::vector<Vec> w;
    for (std::size_t j = 0; j < t; ++j) {
        Vec rhs(t * dc, 0);
        for (std::size_t r = 0; r < dc; ++r) rhs[j * dc + r] = e11[r];
        const auto sol = solve_linear(sys, rhs);
        if (!sol.consistent || sol.nullspace.rows() != 0) throw std::logic_error("wedderburn_split: dual basis not unique");
        w.push_back(col.combine(sol.particular));
    }
    cert.units.assign(t * t, {});
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < t; ++j) cert.units[i * t + j] = c.mul(w[i], v[j]);

    // Matrix-unit relations and the partition of e.
    Vec sum = c.zero();
    for (std::size_t i = 0; i < t; ++i) sum = c.add(sum, cert.units[i * t + i]);
    if (sum != one) throw std::logic_error("wedderburn_split: diagonal units do not sum to e");
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < t; ++j)
            for (std::size_t a_ = 0; a_ < t; ++a_)
                for (std::size_t b = 0; b < t; ++b) {
                    const Vec pr = c.mul(cert.units[i * t + j], cert.units[a_ * t + b]);
                    const Vec want = j == a_ ? cert.units[i * t + b] : c.zero();
                    if (pr != want) throw std::logic_error("wedderburn_split: matrix-unit relation fails");
                }

    // Explicit isomorphism C -> M_t(k) (x) k'.
    cert.target = tensor(matrix_algebra(k, t), cert.kalg.alg);
    std::vector<Vec> kcols;
    for (std::size_t s = 0; s < m; ++s) kcols.push_back(c.mul(kbasis[s], e11));
    const Matrix kmat = Matrix::from_columns(k, dc, kcols);
    cert.iso = Matrix(k, cert.target.dim(), dc);
    for (std::size_t x = 0; x < dc; ++x) {
        const Vec bx = c.basis(x);
        for (std::size_t i = 0; i < t; ++i)
            for (std::size_t j = 0; j < t; ++j) {
                const Vec y = c.mul(c.mul(cert.units[0 * t + i], bx), cert.units[j * t + 0]);
                const auto sol = solve_linear(kmat, y);
                if (!sol.consistent) throw std::logic_error("wedderburn_split: corner entry outside K e11");
                for (std::size_t s = 0; s < m; ++s) cert.iso.at((i * t + j) * m + s, x) = sol.particular[s];
            }
    }
    auto inv = inverse(cert.iso);
    if (!inv) throw std::logic_error("wedderburn_split: isomorphism is not bijective");
    cert.iso_inverse = *inv;
    if (!is_multiplicative(c, cert.target, cert.iso)) throw std::logic_error("wedderburn_split: isomorphism is not multiplicative");
    return cert;
}

SkolemNoether skolem_noether(const WedderburnCertificate& cert, const Matrix& phi) {
    const StructAlgebra& c = cert.component.alg;
    const Field& k = c.field();
    const std::size_t d = c.dim();
    if (!inverse(phi) || !is_multiplicative(c, c, phi)) throw AlgebraError("skolem_noether: phi is not an automorphism");
    const Vec zi = phi.apply(cert.zeta);
    if (zi != cert.zeta) {
        GaloisObstruction ob;
        ob.zeta_image = zi;
        Vec pw = cert.zeta;
        for (std::uint32_t s = 1; s < cert.kprime.degree(); ++s) {
            pw = c.pow(pw, k.characteristic());
            if (pw == zi) {
                ob.frobenius_power = s;
                break;
            }
        }
        std::uint64_t q = 1;
        for (std::uint32_t s = 0; s < ob.frobenius_power; ++s) q *= k.characteristic();
        ob.description = "center moved: zeta -> zeta^" + std::to_string(q);
        return ob;
    }
    Matrix sys(k, d * d, d);
    for (std::size_t b = 0; b < d; ++b) {
        const Vec xb = c.basis(b);
        const Vec pb = phi.col(b);
        for (std::size_t a_ = 0; a_ < d; ++a_) {
            const Vec u = c.basis(a_);
            const Vec r = c.sub(c.mul(xb, u), c.mul(u, pb));
            for (std::size_t l = 0; l < d; ++l) sys.at(b * d + l, a_) = r[l];
        }
    }
    const Matrix ns = nullspace(sys);
    if (ns.rows() != cert.m) throw std::logic_error("skolem_noether: solution space has the wrong dimension");
    const Vec mvec = ns.row(0);
    if (!c.inverse(mvec)) throw std::logic_error("skolem_noether: solution is not a unit");
    return mvec;
}

}  // namespace primequot
