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
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace primequot {

/// A field element of GF(p^n), encoded as the integer sum c_i p^i of its
/// coefficients in the power basis of the modulus root.
using Elem = std::uint32_t;

/// Largest field order the table-driven arithmetic supports.
inline constexpr std::uint32_t kMaxFieldOrder = 1u << 16;

class FieldError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

struct FieldSpec {
    std::uint32_t p = 2;
    std::uint32_t n = 1;
    /// Monic irreducible of degree n over GF(p), little-endian, length n + 1.
    std::vector<std::uint32_t> modulus{0, 1};

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(std::uint64_t v);

namespace detail {
struct FieldTables;
}

/// Finite field GF(p^n) with an explicit modulus. Cheap to copy; all copies
/// share one immutable set of arithmetic tables.
class Field {
  public:
    /// GF(2).
    Field();

    static Field prime(std::uint32_t p);
    /// GF(p^n) with the canonical modulus: the least monic irreducible when
    /// coefficients are compared from the leading term down.
    static Field make(std::uint32_t p, std::uint32_t n);
    static Field with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus);
    static Field from_spec(const FieldSpec& spec);

    const FieldSpec& spec() const;
    std::uint32_t characteristic() const { return spec().p; }
    std::uint32_t degree() const { return spec().n; }
    std::uint32_t size() const;

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    /// The residue class of t, a root of the modulus.
    Elem generator() const;
    /// A generator of the multiplicative group.
    Elem primitive_element() const;

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const;
    Elem frobenius(Elem a) const { return pow(a, characteristic()); }
    /// Image of an integer in the prime subfield.
    Elem from_int(std::int64_t v) const;

    std::vector<std::uint32_t> coeffs(Elem a) const;
    Elem from_coeffs(std::span<const std::uint32_t> c) const;

    bool contains(Elem a) const { return a < size(); }

    /// "p^n:c0,c1,...,cn" with the modulus little-endian.
    std::string to_string() const;
    std::string format(Elem a) const;

    friend bool operator==(const Field& a, const Field& b);

  private:
    explicit Field(std::shared_ptr<const detail::FieldTables> t) : t_(std::move(t)) {}
    std::shared_ptr<const detail::FieldTables> t_;
};

/// Least monic irreducible polynomial of degree n over GF(p) in the canonical
/// ordering, little-endian.
std::vector<std::uint32_t> canonical_modulus(std::uint32_t p, std::uint32_t n);

/// Ring embedding k -> k' fixing the prime field.
struct FieldEmbedding {
    Field source;
    Field target;
    /// Image of source.generator().
    Elem generator_image = 0;
    /// Image of every source element, indexed by encoding.
    std::vector<Elem> table;

    Elem operator()(Elem a) const { return table.at(a); }
};

/// The embedding sending the source generator to the least-encoded root of the
/// source modulus in the target. Throws FieldError when none exists.
FieldEmbedding subfield_embed(const Field& k, const Field& kprime);

}  // namespace primequot
