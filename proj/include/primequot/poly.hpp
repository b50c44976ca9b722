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
#include <string>
#include <utility>
#include <vector>

#include "primequot/field.hpp"

namespace primequot {

/// Univariate polynomial over a finite field, coefficients little-endian with
/// trailing zeros stripped. The zero polynomial has no coefficients.
class Poly {
  public:
    Poly() = default;
    explicit Poly(Field f) : f_(std::move(f)) {}
    Poly(Field f, std::vector<Elem> coeffs);

    static Poly constant(const Field& f, Elem c) { return Poly(f, {c}); }
    static Poly x(const Field& f) { return Poly(f, {0, 1}); }
    /// Polynomial with prime-field coefficients given as integers.
    static Poly from_ints(const Field& f, const std::vector<std::int64_t>& c);

    const Field& field() const { return f_; }
    const std::vector<Elem>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Elem lead() const { return c_.empty() ? 0 : c_.back(); }
    Elem operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    Poly monic() const;
    Poly derivative() const;
    Elem eval(Elem x) const;

    std::string to_string() const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    /// Canonical order: degree first, then coefficients from the leading term down.
    friend bool operator<(const Poly& a, const Poly& b);

  private:
    void normalize();
    Field f_;
    std::vector<Elem> c_;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly scale(const Poly& a, Elem s);

struct DivMod {
    Poly quotient;
    Poly remainder;
};
DivMod divmod(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);

/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

struct ExtGcd {
    Poly g;  // monic
    Poly s;
    Poly t;  // s a + t b = g
};
ExtGcd ext_gcd(const Poly& a, const Poly& b);

Poly pow_mod(Poly base, std::uint64_t e, const Poly& mod);

/// Rabin's irreducibility test.
bool is_irreducible(const Poly& f);

struct Factorization {
    Elem unit = 1;
    std::vector<std::pair<Poly, int>> factors;  // monic irreducible, sorted

    Poly product() const;
};

/// Squarefree, distinct-degree, then Cantor-Zassenhaus equal-degree splitting.
/// The seed drives all random choices; equal seeds give identical runs.
Factorization factor(const Poly& f, std::uint64_t seed = 0);

}  // namespace primequot
