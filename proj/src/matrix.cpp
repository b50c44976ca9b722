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

#include "primequot/matrix.hpp"

#include <algorithm>

namespace primequot {

namespace {
void same_len(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw ShapeError("vector length mismatch");
}
}  // namespace

Vec vec_add(const Field& k, const Vec& a, const Vec& b) {
    same_len(a, b);
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = k.add(a[i], b[i]);
    return r;
}

Vec vec_sub(const Field& k, const Vec& a, const Vec& b) {
    same_len(a, b);
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = k.sub(a[i], b[i]);
    return r;
}

Vec vec_scale(const Field& k, const Vec& a, Elem s) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = k.mul(a[i], s);
    return r;
}

void vec_axpy(const Field& k, Vec& y, Elem a, const Vec& x) {
    same_len(y, x);
    if (a == 0) return;
    for (std::size_t i = 0; i < y.size(); ++i)
        if (x[i]) y[i] = k.add(y[i], k.mul(a, x[i]));
}

bool vec_is_zero(const Vec& a) {
    return std::all_of(a.begin(), a.end(), [](Elem x) { return x == 0; });
}

Vec unit_vec(std::size_t n, std::size_t i) {
    Vec v(n, 0);
    v.at(i) = 1;
    return v;
}

Matrix Matrix::identity(const Field& k, std::size_t n) {
    Matrix m(k, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const Field& k, std::size_t cols, const std::vector<Vec>& rows) {
    Matrix m(k, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw ShapeError("row length mismatch");
        std::copy(rows[i].begin(), rows[i].end(), m.a_.begin() + static_cast<std::ptrdiff_t>(i * cols));
    }
    return m;
}

Matrix Matrix::from_columns(const Field& k, std::size_t rows, const std::vector<Vec>& cols) {
    return from_rows(k, rows, cols).transpose();
}

Matrix Matrix::from_ints(const Field& k, const std::vector<std::vector<std::int64_t>>& rows) {
    const std::size_t c = rows.empty() ? 0 : rows[0].size();
    Matrix m(k, rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != c) throw ShapeError("ragged matrix literal");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = k.from_int(rows[i][j]);
    }
    return m;
}

Vec Matrix::row(std::size_t i) const {
    return Vec(a_.begin() + static_cast<std::ptrdiff_t>(i * c_), a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * c_));
}

Vec Matrix::col(std::size_t j) const {
    Vec v(r_);
    for (std::size_t i = 0; i < r_; ++i) v[i] = at(i, j);
    return v;
}

std::vector<Vec> Matrix::row_list() const {
    std::vector<Vec> out;
    out.reserve(r_);
    for (std::size_t i = 0; i < r_; ++i) out.push_back(row(i));
    return out;
}

Matrix Matrix::transpose() const {
    Matrix t(k_, c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Vec Matrix::apply(const Vec& x) const {
    if (x.size() != c_) throw ShapeError("matrix-vector shape mismatch");
    Vec y(r_, 0);
    for (std::size_t i = 0; i < r_; ++i) {
        Elem s = 0;
        for (std::size_t j = 0; j < c_; ++j)
            if (x[j] && at(i, j)) s = k_.add(s, k_.mul(at(i, j), x[j]));
        y[i] = s;
    }
    return y;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw ShapeError("matrix product shape mismatch");
    if (!(a.field() == b.field())) throw FieldError("matrix product field mismatch");
    const Field& k = a.field();
    Matrix c(k, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const Elem x = a.at(i, l);
            if (!x) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (b.at(l, j)) c.at(i, j) = k.add(c.at(i, j), k.mul(x, b.at(l, j)));
        }
    return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("matrix sum shape mismatch");
    Matrix c(a.field(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.field().add(a.at(i, j), b.at(i, j));
    return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("matrix difference shape mismatch");
    Matrix c(a.field(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.field().sub(a.at(i, j), b.at(i, j));
    return c;
}

Echelon rref(const Matrix& a) {
    const Field& k = a.field();
    Matrix m = a;
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t s = r;
        while (s < m.rows() && m.at(s, c) == 0) ++s;
        if (s == m.rows()) continue;
        if (s != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(s, j), m.at(r, j));
        const Elem inv = k.inv(m.at(r, c));
        for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) = k.mul(m.at(r, j), inv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            const Elem f = m.at(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (m.at(r, j)) m.at(i, j) = k.sub(m.at(i, j), k.mul(f, m.at(r, j)));
        }
        piv.push_back(c);
        ++r;
    }
    Matrix out(k, r, m.cols());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j);
    return {out, piv};
}

std::size_t rank(const Matrix& a) { return rref(a).pivots.size(); }

Matrix nullspace(const Matrix& a) {
    const Field& k = a.field();
    auto [r, piv] = rref(a);
    std::vector<bool> is_piv(a.cols(), false);
    for (auto p : piv) is_piv[p] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_piv[f]) continue;
        Vec v(a.cols(), 0);
        v[f] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = k.neg(r.at(i, f));
        basis.push_back(std::move(v));
    }
    // Re-echelonize so the basis is the canonical one.
    return rref(Matrix::from_rows(k, a.cols(), basis)).rref;
}

SolveResult solve_linear(const Matrix& a, const Vec& b) {
    if (b.size() != a.rows()) throw ShapeError("right-hand side length mismatch");
    const Field& k = a.field();
    Matrix aug(k, a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    auto [r, piv] = rref(aug);
    SolveResult out;
    out.nullspace = nullspace(a);
    if (!piv.empty() && piv.back() == a.cols()) return out;
    out.consistent = true;
    out.particular.assign(a.cols(), 0);
    for (std::size_t i = 0; i < piv.size(); ++i) out.particular[piv[i]] = r.at(i, a.cols());
    return out;
}

std::optional<Matrix> inverse(const Matrix& a) {
    if (!a.square()) throw ShapeError("inverse of non-square matrix");
    const std::size_t n = a.rows();
    const Field& k = a.field();
    Matrix aug(k, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n + i) = 1;
    }
    auto [r, piv] = rref(aug);
    if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
    Matrix inv(k, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.at(i, n + j);
    return inv;
}

Poly min_poly_krylov(const Field& k, const Vec& one, const std::function<Vec(const Vec&)>& times_x) {
    // Echelon rows paired with the power combination that produced them.
    struct Row {
        Vec v;
        Vec comb;
        std::size_t pivot;
    };
    std::vector<Row> rows;
    Vec cur = one;
    for (std::size_t deg = 0;; ++deg) {
        Vec v = cur;
        Vec comb(deg + 1, 0);
        comb[deg] = 1;
        for (const auto& r : rows) {
            const Elem c = v[r.pivot];
            if (!c) continue;
            vec_axpy(k, v, k.neg(c), r.v);
            for (std::size_t i = 0; i < r.comb.size(); ++i) comb[i] = k.sub(comb[i], k.mul(c, r.comb[i]));
        }
        auto it = std::find_if(v.begin(), v.end(), [](Elem x) { return x != 0; });
        if (it == v.end()) return Poly(k, comb);
        const std::size_t p = static_cast<std::size_t>(it - v.begin());
        const Elem inv = k.inv(v[p]);
        v = vec_scale(k, v, inv);
        comb = vec_scale(k, comb, inv);
        rows.push_back({std::move(v), std::move(comb), p});
        for (auto& r : rows) r.comb.resize(deg + 2, 0);
        cur = times_x(cur);
    }
}

Poly min_poly(const Matrix& x) {
    if (!x.square()) throw ShapeError("min_poly of non-square matrix");
    const std::size_t n = x.rows();
    const Field& k = x.field();
    auto flat = [&](const Matrix& m) {
        Vec v(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) v[i * n + j] = m.at(i, j);
        return v;
    };
    auto unflat = [&](const Vec& v) {
        Matrix m(k, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m.at(i, j) = v[i * n + j];
        return m;
    };
    return min_poly_krylov(k, flat(Matrix::identity(k, n)), [&](const Vec& v) { return flat(unflat(v) * x); });
}

Matrix companion(const Poly& f) {
    const Poly g = f.monic();
    const auto n = static_cast<std::size_t>(g.degree());
    Matrix c(f.field(), n, n);
    for (std::size_t i = 1; i < n; ++i) c.at(i, i - 1) = 1;
    for (std::size_t i = 0; i < n; ++i) c.at(i, n - 1) = f.field().neg(g[i]);
    return c;
}

Matrix poly_eval(const Poly& f, const Matrix& x) {
    const Field& k = x.field();
    Matrix r(k, x.rows(), x.cols());
    for (std::size_t i = f.coeffs().size(); i-- > 0;) {
        r = r * x;
        for (std::size_t d = 0; d < x.rows(); ++d) r.at(d, d) = k.add(r.at(d, d), f[i]);
    }
    return r;
}

Subspace Subspace::span(const Field& k, std::size_t n, const std::vector<Vec>& vs) {
    Subspace s(k, n);
    for (const auto& v : vs) s.insert(v);
    return s;
}

Subspace Subspace::full(const Field& k, std::size_t n) {
    Subspace s(k, n);
    for (std::size_t i = 0; i < n; ++i) {
        s.rows_.push_back(unit_vec(n, i));
        s.piv_.push_back(i);
    }
    return s;
}

Vec Subspace::reduce(const Vec& v) const {
    if (v.size() != n_) throw ShapeError("subspace vector length mismatch");
    Vec r = v;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Elem c = r[piv_[i]];
        if (c) vec_axpy(k_, r, k_.neg(c), rows_[i]);
    }
    return r;
}

bool Subspace::contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& o) const {
    return std::all_of(o.rows_.begin(), o.rows_.end(), [&](const Vec& v) { return contains(v); });
}

bool Subspace::insert(const Vec& v) {
    Vec r = reduce(v);
    auto it = std::find_if(r.begin(), r.end(), [](Elem x) { return x != 0; });
    if (it == r.end()) return false;
    const std::size_t p = static_cast<std::size_t>(it - r.begin());
    r = vec_scale(k_, r, k_.inv(r[p]));
    for (auto& row : rows_)
        if (row[p]) vec_axpy(k_, row, k_.neg(row[p]), r);
    const auto pos = static_cast<std::size_t>(std::lower_bound(piv_.begin(), piv_.end(), p) - piv_.begin());
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(r));
    piv_.insert(piv_.begin() + static_cast<std::ptrdiff_t>(pos), p);
    return true;
}

Vec Subspace::coords(const Vec& v) const {
    Vec c(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) c[i] = v.at(piv_[i]);
    return c;
}

Vec Subspace::combine(const Vec& c) const {
    Vec v(n_, 0);
    for (std::size_t i = 0; i < rows_.size(); ++i) vec_axpy(k_, v, c.at(i), rows_[i]);
    return v;
}

std::vector<std::size_t> Subspace::free_columns() const {
    std::vector<std::size_t> out;
    std::size_t j = 0;
    for (std::size_t c = 0; c < n_; ++c) {
        if (j < piv_.size() && piv_[j] == c) {
            ++j;
            continue;
        }
        out.push_back(c);
    }
    return out;
}

bool operator<(const Subspace& a, const Subspace& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.rows_ < b.rows_;
}

Subspace operator+(const Subspace& a, const Subspace& b) {
    Subspace s = a;
    for (const auto& v : b.basis()) s.insert(v);
    return s;
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    const Field& k = a.field();
    const std::size_t n = a.ambient_dim();
    if (a.dim() == 0 || b.dim() == 0) return Subspace(k, n);
    std::vector<Vec> cols;
    for (const auto& v : a.basis()) cols.push_back(v);
    for (const auto& v : b.basis()) cols.push_back(vec_scale(k, v, k.neg(1)));
    const Matrix m = Matrix::from_columns(k, n, cols);
    const Matrix ns = nullspace(m);
    Subspace out(k, n);
    for (std::size_t i = 0; i < ns.rows(); ++i) {
        Vec x(n, 0);
        for (std::size_t j = 0; j < a.dim(); ++j) vec_axpy(k, x, ns.at(i, j), a.basis()[j]);
        out.insert(x);
    }
    return out;
}

}  // namespace primequot
