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

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "primequot/field.hpp"
#include "primequot/poly.hpp"

namespace primequot {

using Vec = std::vector<Elem>;

class ShapeError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Dense vector helpers. All operands must have equal length.
Vec vec_add(const Field& k, const Vec& a, const Vec& b);
Vec vec_sub(const Field& k, const Vec& a, const Vec& b);
Vec vec_scale(const Field& k, const Vec& a, Elem s);
void vec_axpy(const Field& k, Vec& y, Elem a, const Vec& x);  // y += a x
bool vec_is_zero(const Vec& a);
Vec unit_vec(std::size_t n, std::size_t i);

/// Dense row-major matrix over a finite field.
class Matrix {
  public:
    Matrix() = default;
    Matrix(Field k, std::size_t rows, std::size_t cols) : k_(std::move(k)), r_(rows), c_(cols), a_(rows * cols, 0) {}
    static Matrix identity(const Field& k, std::size_t n);
    static Matrix from_rows(const Field& k, std::size_t cols, const std::vector<Vec>& rows);
    static Matrix from_columns(const Field& k, std::size_t rows, const std::vector<Vec>& cols);
    static Matrix from_ints(const Field& k, const std::vector<std::vector<std::int64_t>>& rows);

    const Field& field() const { return k_; }
    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    bool square() const { return r_ == c_; }

    Elem& at(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    Elem at(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;
    std::vector<Vec> row_list() const;

    Matrix transpose() const;
    Vec apply(const Vec& x) const;  // A x

    friend bool operator==(const Matrix& a, const Matrix& b) { return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_; }

  private:
    Field k_;
    std::size_t r_ = 0, c_ = 0;
    std::vector<Elem> a_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);

struct Echelon {
    Matrix rref;  // nonzero rows only
    std::vector<std::size_t> pivots;
};

Echelon rref(const Matrix& a);
std::size_t rank(const Matrix& a);

/// Basis of {x : A x = 0} as the rows of a reduced echelon matrix.
Matrix nullspace(const Matrix& a);

struct SolveResult {
    bool consistent = false;
    Vec particular;     // free variables set to zero
    Matrix nullspace;   // rows in reduced echelon form
};
SolveResult solve_linear(const Matrix& a, const Vec& b);

std::optional<Matrix> inverse(const Matrix& a);

/// Monic polynomial of least degree annihilating a square matrix.
Poly min_poly(const Matrix& x);

/// Least monic m with m(x) = 0, where x acts through `times_x` on a vector
/// space and `one` is the identity vector. Used for matrices and algebra
/// elements alike.
Poly min_poly_krylov(const Field& k, const Vec& one, const std::function<Vec(const Vec&)>& times_x);

Matrix companion(const Poly& f);
Matrix poly_eval(const Poly& f, const Matrix& x);

/// A subspace of k^n held as its unique reduced row-echelon basis, so that
/// equal subspaces compare equal.
class Subspace {
  public:
    Subspace() = default;
    Subspace(Field k, std::size_t n) : k_(std::move(k)), n_(n) {}
    static Subspace span(const Field& k, std::size_t n, const std::vector<Vec>& vs);
    static Subspace full(const Field& k, std::size_t n);

    const Field& field() const { return k_; }
    std::size_t ambient_dim() const { return n_; }
    std::size_t dim() const { return rows_.size(); }
    const std::vector<Vec>& basis() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return piv_; }

    /// Adds v; returns false when v was already inside.
    bool insert(const Vec& v);
    /// Canonical coset representative: v with its pivot entries cleared.
    Vec reduce(const Vec& v) const;
    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    /// Coordinates of v in the echelon basis; v must lie in the subspace.
    Vec coords(const Vec& v) const;
    Vec combine(const Vec& c) const;
    /// Columns outside the pivot set, in increasing order.
    std::vector<std::size_t> free_columns() const;

    friend bool operator==(const Subspace& a, const Subspace& b) { return a.n_ == b.n_ && a.rows_ == b.rows_; }
    friend bool operator<(const Subspace& a, const Subspace& b);

  private:
    Field k_;
    std::size_t n_ = 0;
    std::vector<Vec> rows_;          // sorted by pivot
    std::vector<std::size_t> piv_;
};

Subspace operator+(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

}  // namespace primequot
