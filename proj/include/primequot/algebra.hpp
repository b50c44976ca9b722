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

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "primequot/field.hpp"
#include "primequot/groups.hpp"
#include "primequot/matrix.hpp"

namespace primequot {

class AlgebraError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Sparse product of two basis vectors: (index, coefficient) pairs.
using SparseVec = std::vector<std::pair<std::uint32_t, Elem>>;

inline constexpr std::size_t kAssocCheckDim = 64;

/// Finite-dimensional associative unital algebra over k, by structure
/// constants on a fixed basis.
class StructAlgebra {
  public:
    StructAlgebra() = default;
    /// products[i * d + j] is b_i b_j. Associativity and the identity law are
    /// checked when d <= kAssocCheckDim.
    StructAlgebra(Field k, std::size_t d, std::vector<SparseVec> products, Vec one,
                  std::vector<std::string> labels = {});
    /// Same, from a dense product callback.
    template <class F>
    static StructAlgebra from_products(const Field& k, std::size_t d, F&& prod, Vec one,
                                       std::vector<std::string> labels = {});

    const Field& field() const { return k_; }
    std::size_t dim() const { return d_; }
    const Vec& one() const { return one_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const SparseVec& product(std::size_t i, std::size_t j) const { return sc_[i * d_ + j]; }

    Vec zero() const { return Vec(d_, 0); }
    Vec basis(std::size_t i) const { return unit_vec(d_, i); }
    Vec mul(const Vec& x, const Vec& y) const;
    Vec add(const Vec& x, const Vec& y) const { return vec_add(k_, x, y); }
    Vec sub(const Vec& x, const Vec& y) const { return vec_sub(k_, x, y); }
    Vec scale(const Vec& x, Elem s) const { return vec_scale(k_, x, s); }
    Vec pow(Vec x, std::uint64_t e) const;
    /// Two-sided inverse, if x is a unit.
    std::optional<Vec> inverse(const Vec& x) const;
    /// Matrix of y -> x y.
    Matrix left_matrix(const Vec& x) const;
    /// Matrix of y -> y x.
    Matrix right_matrix(const Vec& x) const;

    bool is_commutative() const;
    /// First failing basis triple, if any.
    std::optional<std::array<std::size_t, 3>> associativity_failure() const;

    friend bool operator==(const StructAlgebra& a, const StructAlgebra& b) {
        return a.k_ == b.k_ && a.d_ == b.d_ && a.sc_ == b.sc_ && a.one_ == b.one_;
    }

  private:
    Field k_;
    std::size_t d_ = 0;
    std::vector<SparseVec> sc_;
    Vec one_;
    std::vector<std::string> labels_;
};

SparseVec to_sparse(const Vec& v);

template <class F>
StructAlgebra StructAlgebra::from_products(const Field& k, std::size_t d, F&& prod, Vec one,
                                           std::vector<std::string> labels) {
    std::vector<SparseVec> sc(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) sc[i * d + j] = to_sparse(prod(i, j));
    return StructAlgebra(k, d, std::move(sc), std::move(one), std::move(labels));
}

/// kG on the basis of group elements, in group order.
StructAlgebra group_algebra(const FiniteGroup& g, const Field& k);
/// M_t(k) on the matrix units, E_ij at index i t + j.
StructAlgebra matrix_algebra(const Field& k, std::size_t t);
/// A (x) B with b_i (x) c_j at index i dim(B) + j.
StructAlgebra tensor(const StructAlgebra& a, const StructAlgebra& b);
Vec tensor_vec(const StructAlgebra& a, const Vec& x, const StructAlgebra& b, const Vec& y);

/// k' viewed as a k-algebra on the basis 1, g, ..., g^(m-1), g the generator
/// of k'.
struct FieldAlgebra {
    Field k;
    Field kprime;
    FieldEmbedding embedding;
    std::size_t m = 1;
    StructAlgebra alg;
    std::vector<Vec> table;  // coordinates of every k' element

    Vec coords(Elem x) const { return table.at(x); }
    Elem element(const Vec& c) const;
};
FieldAlgebra field_algebra(const Field& k, const Field& kprime);

/// A subspace closed under multiplication, with its own identity (which may
/// differ from the parent identity, as for corners eAe).
struct Subalgebra {
    StructAlgebra alg;
    Subspace span;  // in parent coordinates

    Vec to_parent(const Vec& local) const { return span.combine(local); }
    Vec to_local(const Vec& parent) const;
};
Subalgebra subalgebra(const StructAlgebra& a, const Subspace& s, const Vec& identity);

struct QuotientAlgebra {
    StructAlgebra alg;
    Subspace ideal;
    std::vector<std::size_t> complement;  // parent basis indices spanning a complement

    Vec project(const Vec& parent) const;
    Vec lift(const Vec& local) const;
    Matrix projection_matrix() const;
};
/// A / I on the complement basis at the non-pivot columns of I.
QuotientAlgebra quotient_algebra(const StructAlgebra& a, const Subspace& ideal);

Subspace center(const StructAlgebra& a);
bool is_central(const StructAlgebra& a, const Vec& x);
bool is_idempotent(const StructAlgebra& a, const Vec& x);

Subspace ideal_generate(const StructAlgebra& a, const std::vector<Vec>& gens);
bool is_left_ideal(const StructAlgebra& a, const Subspace& s);
bool is_right_ideal(const StructAlgebra& a, const Subspace& s);
bool is_two_sided_ideal(const StructAlgebra& a, const Subspace& s);
/// span{u v : u in U, v in V}.
Subspace product_space(const StructAlgebra& a, const Subspace& u, const Subspace& v);
/// x S, S x, x S y as subspaces.
Subspace left_translate(const StructAlgebra& a, const Vec& x, const Subspace& s);
Subspace right_translate(const StructAlgebra& a, const Subspace& s, const Vec& x);
Subspace sandwich(const StructAlgebra& a, const Vec& x, const Subspace& s, const Vec& y);
bool is_nilpotent_space(const StructAlgebra& a, const Subspace& s, std::size_t* index = nullptr);

Subspace image_of(const Matrix& map, const Subspace& s);
Subspace preimage_of(const Matrix& map, const Subspace& s);
Subspace kernel_of(const Matrix& map);

/// map(x y) = map(x) map(y) on all basis pairs, map(1) = 1.
bool is_multiplicative(const StructAlgebra& src, const StructAlgebra& dst, const Matrix& map,
                       bool require_unit = true);

/// Minimal polynomial of x under left multiplication, with `unit` playing the
/// role of 1 (for corners eAe the unit is e).
Poly element_min_poly(const StructAlgebra& a, const Vec& x, const Vec& unit);
Vec eval_poly(const StructAlgebra& a, const Poly& f, const Vec& x, const Vec& unit);

}  // namespace primequot
