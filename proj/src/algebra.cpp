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

#include "primequot/algebra.hpp"

#include <algorithm>
#include <deque>

namespace primequot {

SparseVec to_sparse(const Vec& v) {
    SparseVec s;
    for (std::uint32_t i = 0; i < v.size(); ++i)
        if (v[i]) s.emplace_back(i, v[i]);
    return s;
}

StructAlgebra::StructAlgebra(Field k, std::size_t d, std::vector<SparseVec> products, Vec one,
                             std::vector<std::string> labels)
    : k_(std::move(k)), d_(d), sc_(std::move(products)), one_(std::move(one)), labels_(std::move(labels)) {
    if (sc_.size() != d_ * d_) throw AlgebraError("structure constant table has wrong size");
    if (one_.size() != d_) throw AlgebraError("identity vector has wrong length");
    if (!labels_.empty() && labels_.size() != d_) throw AlgebraError("label count differs from dimension");
    for (const auto& s : sc_)
        for (const auto& [i, c] : s)
            if (i >= d_ || !k_.contains(c)) throw AlgebraError("structure constant out of range");
    if (d_ <= kAssocCheckDim) {
        for (std::size_t i = 0; i < d_; ++i) {
            const Vec b = basis(i);
            if (mul(one_, b) != b || mul(b, one_) != b) throw AlgebraError("identity law fails");
        }
        if (auto f = associativity_failure())
            throw AlgebraError("not associative at basis triple (" + std::to_string((*f)[0]) + ", " +
                               std::to_string((*f)[1]) + ", " + std::to_string((*f)[2]) + ")");
    }
}

Vec StructAlgebra::mul(const Vec& x, const Vec& y) const {
    if (x.size() != d_ || y.size() != d_) throw ShapeError("algebra element has wrong length");
    Vec r(d_, 0);
    for (std::size_t i = 0; i < d_; ++i) {
        if (!x[i]) continue;
        for (std::size_t j = 0; j < d_; ++j) {
            if (!y[j]) continue;
            const Elem c = k_.mul(x[i], y[j]);
            for (const auto& [l, v] : sc_[i * d_ + j]) r[l] = k_.add(r[l], k_.mul(c, v));
        }
    }
    return r;
}

Vec StructAlgebra::pow(Vec x, std::uint64_t e) const {
    Vec r = one_;
    while (e) {
        if (e & 1) r = mul(r, x);
        x = mul(x, x);
        e >>= 1;
    }
    return r;
}

std::optional<Vec> StructAlgebra::inverse(const Vec& x) const {
    const auto sol = solve_linear(left_matrix(x), one_);
    if (!sol.consistent || sol.nullspace.rows() != 0) return std::nullopt;
    if (mul(sol.particular, x) != one_) return std::nullopt;
    return sol.particular;
}

Matrix StructAlgebra::left_matrix(const Vec& x) const {
    Matrix m(k_, d_, d_);
    for (std::size_t j = 0; j < d_; ++j) {
        const Vec c = mul(x, basis(j));
        for (std::size_t i = 0; i < d_; ++i) m.at(i, j) = c[i];
    }
    return m;
}

Matrix StructAlgebra::right_matrix(const Vec& x) const {
    Matrix m(k_, d_, d_);
    for (std::size_t j = 0; j < d_; ++j) {
        const Vec c = mul(basis(j), x);
        for (std::size_t i = 0; i < d_; ++i) m.at(i, j) = c[i];
    }
    return m;
}

bool StructAlgebra::is_commutative() const {
    for (std::size_t i = 0; i < d_; ++i)
        for (std::size_t j = i + 1; j < d_; ++j)
            if (sc_[i * d_ + j] != sc_[j * d_ + i]) return false;
    return true;
}

std::optional<std::array<std::size_t, 3>> StructAlgebra::associativity_failure() const {
    for (std::size_t i = 0; i < d_; ++i)
        for (std::size_t j = 0; j < d_; ++j) {
            const SparseVec& ij = sc_[i * d_ + j];
            for (std::size_t l = 0; l < d_; ++l) {
                Vec lhs(d_, 0), rhs(d_, 0);
                for (const auto& [a, c] : ij)
                    for (const auto& [b, v] : sc_[a * d_ + l]) lhs[b] = k_.add(lhs[b], k_.mul(c, v));
                for (const auto& [a, c] : sc_[j * d_ + l])
                    for (const auto& [b, v] : sc_[i * d_ + a]) rhs[b] = k_.add(rhs[b], k_.mul(c, v));
                if (lhs != rhs) return std::array<std::size_t, 3>{i, j, l};
            }
        }
    return std::nullopt;
}

StructAlgebra group_algebra(const FiniteGroup& g, const Field& k) {
    const std::size_t n = g.order();
    std::vector<SparseVec> sc(n * n);
    for (GIdx a = 0; a < n; ++a)
        for (GIdx b = 0; b < n; ++b) sc[a * n + b] = {{g.mul(a, b), 1}};
    return StructAlgebra(k, n, std::move(sc), unit_vec(n, 0), g.names());
}

StructAlgebra matrix_algebra(const Field& k, std::size_t t) {
    const std::size_t d = t * t;
    std::vector<SparseVec> sc(d * d);
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < t; ++j)
            for (std::size_t l = 0; l < t; ++l) sc[(i * t + j) * d + (j * t + l)] = {{static_cast<std::uint32_t>(i * t + l), 1}};
    Vec one(d, 0);
    for (std::size_t i = 0; i < t; ++i) one[i * t + i] = 1;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < t; ++j) labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
    return StructAlgebra(k, d, std::move(sc), std::move(one), std::move(labels));
}

StructAlgebra tensor(const StructAlgebra& a, const StructAlgebra& b) {
    if (!(a.field() == b.field())) throw FieldError("tensor product over different fields");
    const Field& k = a.field();
    const std::size_t da = a.dim(), db = b.dim(), d = da * db;
    std::vector<SparseVec> sc(d * d);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < db; ++j)
            for (std::size_t i2 = 0; i2 < da; ++i2)
                for (std::size_t j2 = 0; j2 < db; ++j2) {
                    SparseVec& out = sc[(i * db + j) * d + (i2 * db + j2)];
                    for (const auto& [x, cx] : a.product(i, i2))
                        for (const auto& [y, cy] : b.product(j, j2))
                            out.emplace_back(static_cast<std::uint32_t>(x * db + y), k.mul(cx, cy));
                    std::sort(out.begin(), out.end());
                }
    std::vector<std::string> labels;
    if (!a.labels().empty() && !b.labels().empty())
        for (const auto& la : a.labels())
            for (const auto& lb : b.labels()) labels.push_back(la + "*" + lb);
    return StructAlgebra(k, d, std::move(sc), tensor_vec(a, a.one(), b, b.one()), std::move(labels));
}

Vec tensor_vec(const StructAlgebra& a, const Vec& x, const StructAlgebra& b, const Vec& y) {
    const Field& k = a.field();
    Vec r(a.dim() * b.dim(), 0);
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (x[i])
            for (std::size_t j = 0; j < b.dim(); ++j) r[i * b.dim() + j] = k.mul(x[i], y[j]);
    return r;
}

Elem FieldAlgebra::element(const Vec& c) const {
    Elem r = 0, gp = 1;
    const Elem g = kprime.generator();
    for (std::size_t s = 0; s < m; ++s) {
        r = kprime.add(r, kprime.mul(embedding(c.at(s)), gp));
        gp = kprime.mul(gp, g);
    }
    return r;
}

FieldAlgebra field_algebra(const Field& k, const Field& kprime) {
    FieldAlgebra fa{k, kprime, subfield_embed(k, kprime), kprime.degree() / k.degree(), {}, {}};
    const std::size_t m = fa.m;
    fa.table.assign(kprime.size(), {});
    Vec c(m, 0);
    for (std::uint64_t idx = 0; idx < kprime.size(); ++idx) {
        std::uint64_t v = idx;
        for (std::size_t s = 0; s < m; ++s) {
            c[s] = static_cast<Elem>(v % k.size());
            v /= k.size();
        }
        fa.table[fa.element(c)] = c;
    }
    const Elem g = m == 1 ? Elem{1} : kprime.generator();
    auto prod = [&](std::size_t i, std::size_t j) { return fa.table[kprime.pow(g, i + j)]; };
    std::vector<std::string> labels;
    for (std::size_t s = 0; s < m; ++s) labels.push_back(s == 0 ? "1" : "z^" + std::to_string(s));
    fa.alg = StructAlgebra::from_products(k, m, prod, unit_vec(m, 0), labels);
    return fa;
}

Vec Subalgebra::to_local(const Vec& parent) const {
    if (!span.contains(parent)) throw AlgebraError("element outside the subalgebra");
    return span.coords(parent);
}

Subalgebra subalgebra(const StructAlgebra& a, const Subspace& s, const Vec& identity) {
    if (!s.contains(identity)) throw AlgebraError("identity outside the subspace");
    const std::size_t d = s.dim();
    auto prod = [&](std::size_t i, std::size_t j) {
        const Vec p = a.mul(s.basis()[i], s.basis()[j]);
        if (!s.contains(p)) throw AlgebraError("subspace is not closed under multiplication");
        return s.coords(p);
    };
    return {StructAlgebra::from_products(a.field(), d, prod, s.coords(identity)), s};
}

Vec QuotientAlgebra::project(const Vec& parent) const {
    const Vec r = ideal.reduce(parent);
    Vec out(complement.size());
    for (std::size_t i = 0; i < complement.size(); ++i) out[i] = r[complement[i]];
    return out;
}

Vec QuotientAlgebra::lift(const Vec& local) const {
    Vec out(ideal.ambient_dim(), 0);
    for (std::size_t i = 0; i < complement.size(); ++i) out[complement[i]] = local.at(i);
    return out;
}

Matrix QuotientAlgebra::projection_matrix() const {
    const std::size_t n = ideal.ambient_dim();
    Matrix m(ideal.field(), complement.size(), n);
    for (std::size_t j = 0; j < n; ++j) {
        const Vec c = project(unit_vec(n, j));
        for (std::size_t i = 0; i < c.size(); ++i) m.at(i, j) = c[i];
    }
    return m;
}

QuotientAlgebra quotient_algebra(const StructAlgebra& a, const Subspace& ideal) {
    if (!is_two_sided_ideal(a, ideal)) throw AlgebraError("quotient by a subspace that is not a two-sided ideal");
    QuotientAlgebra q{{}, ideal, ideal.free_columns()};
    const std::size_t d = q.complement.size();
    auto prod = [&](std::size_t i, std::size_t j) {
        return q.project(a.mul(a.basis(q.complement[i]), a.basis(q.complement[j])));
    };
    std::vector<std::string> labels;
    if (!a.labels().empty())
        for (auto c : q.complement) labels.push_back(a.labels()[c]);
    q.alg = StructAlgebra::from_products(a.field(), d, prod, q.project(a.one()), labels);
    return q;
}

Subspace center(const StructAlgebra& a) {
    const std::size_t d = a.dim();
    const Field& k = a.field();
    Matrix m(k, d * d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vec c(d, 0);
            for (const auto& [l, v] : a.product(i, j)) c[l] = k.add(c[l], v);
            for (const auto& [l, v] : a.product(j, i)) c[l] = k.sub(c[l], v);
            for (std::size_t l = 0; l < d; ++l) m.at(j * d + l, i) = c[l];
        }
    return Subspace::span(k, d, nullspace(m).row_list());
}

bool is_central(const StructAlgebra& a, const Vec& x) {
    for (std::size_t j = 0; j < a.dim(); ++j)
        if (a.mul(x, a.basis(j)) != a.mul(a.basis(j), x)) return false;
    return true;
}

bool is_idempotent(const StructAlgebra& a, const Vec& x) { return a.mul(x, x) == x; }

Subspace ideal_generate(const StructAlgebra& a, const std::vector<Vec>& gens) {
    Subspace s(a.field(), a.dim());
    std::deque<Vec> queue;
    for (const auto& g : gens)
        if (s.insert(g)) queue.push_back(g);
    while (!queue.empty()) {
        const Vec v = queue.front();
        queue.pop_front();
        for (std::size_t j = 0; j < a.dim(); ++j) {
            const Vec b = a.basis(j);
            for (Vec w : {a.mul(b, v), a.mul(v, b)})
                if (s.insert(w)) queue.push_back(std::move(w));
        }
    }
    return s;
}

bool is_left_ideal(const StructAlgebra& a, const Subspace& s) {
    for (const auto& v : s.basis())
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (!s.contains(a.mul(a.basis(j), v))) return false;
    return true;
}

bool is_right_ideal(const StructAlgebra& a, const Subspace& s) {
    for (const auto& v : s.basis())
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (!s.contains(a.mul(v, a.basis(j)))) return false;
    return true;
}

bool is_two_sided_ideal(const StructAlgebra& a, const Subspace& s) { return is_left_ideal(a, s) && is_right_ideal(a, s); }

Subspace product_space(const StructAlgebra& a, const Subspace& u, const Subspace& v) {
    Subspace s(a.field(), a.dim());
    for (const auto& x : u.basis())
        for (const auto& y : v.basis()) s.insert(a.mul(x, y));
    return s;
}

Subspace left_translate(const StructAlgebra& a, const Vec& x, const Subspace& s) {
    Subspace out(a.field(), a.dim());
    for (const auto& y : s.basis()) out.insert(a.mul(x, y));
    return out;
}

Subspace right_translate(const StructAlgebra& a, const Subspace& s, const Vec& x) {
    Subspace out(a.field(), a.dim());
    for (const auto& y : s.basis()) out.insert(a.mul(y, x));
    return out;
}

Subspace sandwich(const StructAlgebra& a, const Vec& x, const Subspace& s, const Vec& y) {
    Subspace out(a.field(), a.dim());
    for (const auto& v : s.basis()) out.insert(a.mul(a.mul(x, v), y));
    return out;
}

bool is_nilpotent_space(const StructAlgebra& a, const Subspace& s, std::size_t* index) {
    Subspace p = s;
    std::size_t k = 1;
    while (p.dim() > 0) {
        Subspace next = product_space(a, p, s);
        if (next.dim() == p.dim()) return false;
        p = std::move(next);
        ++k;
    }
    if (index) *index = s.dim() == 0 ? 0 : k;
    return true;
}

Subspace image_of(const Matrix& map, const Subspace& s) {
    Subspace out(map.field(), map.rows());
    for (const auto& v : s.basis()) out.insert(map.apply(v));
    return out;
}

Subspace preimage_of(const Matrix& map, const Subspace& s) {
    const auto fc = s.free_columns();
    Matrix m(map.field(), fc.size(), map.cols());
    for (std::size_t j = 0; j < map.cols(); ++j) {
        const Vec r = s.reduce(map.col(j));
        for (std::size_t i = 0; i < fc.size(); ++i) m.at(i, j) = r[fc[i]];
    }
    if (fc.empty()) return Subspace::full(map.field(), map.cols());
    return Subspace::span(map.field(), map.cols(), nullspace(m).row_list());
}

Subspace kernel_of(const Matrix& map) {
    if (map.rows() == 0) return Subspace::full(map.field(), map.cols());
    return Subspace::span(map.field(), map.cols(), nullspace(map).row_list());
}

bool is_multiplicative(const StructAlgebra& src, const StructAlgebra& dst, const Matrix& map, bool require_unit) {
    if (map.cols() != src.dim() || map.rows() != dst.dim()) return false;
    std::vector<Vec> img;
    for (std::size_t i = 0; i < src.dim(); ++i) img.push_back(map.col(i));
    if (require_unit && map.apply(src.one()) != dst.one()) return false;
    for (std::size_t i = 0; i < src.dim(); ++i)
        for (std::size_t j = 0; j < src.dim(); ++j) {
            Vec lhs(dst.dim(), 0);
            for (const auto& [l, c] : src.product(i, j)) vec_axpy(dst.field(), lhs, c, img[l]);
            if (lhs != dst.mul(img[i], img[j])) return false;
        }
    return true;
}

Poly element_min_poly(const StructAlgebra& a, const Vec& x, const Vec& unit) {
    return min_poly_krylov(a.field(), unit, [&](const Vec& v) { return a.mul(x, v); });
}

Vec eval_poly(const StructAlgebra& a, const Poly& f, const Vec& x, const Vec& unit) {
    Vec r = a.zero();
    for (std::size_t i = f.coeffs().size(); i-- > 0;) {
        r = a.mul(r, x);
        vec_axpy(a.field(), r, f[i], unit);
    }
    return r;
}

}  // namespace primequot
