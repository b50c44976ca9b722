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

#include "primequot/field.hpp"

#include <algorithm>
#include <sstream>

namespace primequot {

bool is_prime(std::uint64_t v) {
    if (v < 2) return false;
    for (std::uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

namespace {

using Coeffs = std::vector<std::uint64_t>;

void trim(Coeffs& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Coeffs poly_mod(Coeffs a, const Coeffs& m, std::uint64_t p) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    const std::uint64_t lead_inv = [&] {
        std::uint64_t r = 1, b = m.back() % p, e = p - 2;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    }();
    while (a.size() > dm) {
        const std::uint64_t c = a.back() * lead_inv % p;
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = (a[shift + i] + p * p - c * m[i] % p) % p;
        trim(a);
    }
    return a;
}

Coeffs poly_mulmod(const Coeffs& a, const Coeffs& b, const Coeffs& m, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Coeffs r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return poly_mod(std::move(r), m, p);
}

Coeffs poly_sub(Coeffs a, const Coeffs& b, std::uint64_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
}

Coeffs poly_gcd(Coeffs a, Coeffs b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Coeffs r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// x^(p^k) mod m
Coeffs frob_power_of_x(const Coeffs& m, std::uint64_t p, std::uint32_t k) {
    Coeffs x = poly_mod(Coeffs{0, 1}, m, p);
    for (std::uint32_t s = 0; s < k; ++s) {
        Coeffs r{1}, b = x;
        std::uint64_t e = p;
        while (e) {
            if (e & 1) r = poly_mulmod(r, b, m, p);
            b = poly_mulmod(b, b, m, p);
            e >>= 1;
        }
        x = std::move(r);
    }
    return x;
}

// Rabin's test over the prime field.
bool prime_field_irreducible(const Coeffs& m, std::uint64_t p) {
    const std::uint32_t n = static_cast<std::uint32_t>(m.size() - 1);
    if (n == 0) return false;
    if (n == 1) return true;
    const Coeffs x{0, 1};
    if (!poly_sub(frob_power_of_x(m, p, n), x, p).empty()) return false;
    for (std::uint32_t r = 2; r <= n; ++r) {
        if (n % r != 0 || !is_prime(r)) continue;
        Coeffs g = poly_gcd(m, poly_sub(frob_power_of_x(m, p, n / r), x, p), p);
        if (g.size() > 1) return false;
    }
    return true;
}

}  // namespace

namespace detail {

struct FieldTables {
    FieldSpec spec;
    std::uint32_t q = 2;
    std::vector<std::uint32_t> pw;  // p^i
    std::vector<Elem> add_table;    // q*q, only for small q
    std::vector<Elem> neg_table;
    std::vector<Elem> exp_table;    // 2(q-1)
    std::vector<std::uint32_t> log_table;
    Elem primitive = 1;

    Elem digit_add(Elem a, Elem b) const {
        Elem r = 0;
        for (std::uint32_t i = 0; i < spec.n; ++i) {
            const std::uint32_t da = a % spec.p, db = b % spec.p;
            r += ((da + db) % spec.p) * pw[i];
            a /= spec.p;
            b /= spec.p;
        }
        return r;
    }
    Elem digit_neg(Elem a) const {
        Elem r = 0;
        for (std::uint32_t i = 0; i < spec.n; ++i) {
            const std::uint32_t da = a % spec.p;
            r += ((spec.p - da) % spec.p) * pw[i];
            a /= spec.p;
        }
        return r;
    }
    Elem slow_mul(Elem a, Elem b) const {
        Coeffs ca(spec.n), cb(spec.n), m(spec.modulus.begin(), spec.modulus.end());
        for (std::uint32_t i = 0; i < spec.n; ++i) {
            ca[i] = a % spec.p;
            a /= spec.p;
            cb[i] = b % spec.p;
            b /= spec.p;
        }
        trim(ca);
        trim(cb);
        Coeffs r = poly_mulmod(ca, cb, m, spec.p);
        Elem out = 0;
        for (std::size_t i = 0; i < r.size(); ++i) out += static_cast<Elem>(r[i]) * pw[i];
        return out;
    }
};

}  // namespace detail

namespace {

std::shared_ptr<const detail::FieldTables> build_tables(FieldSpec spec) {
    if (!is_prime(spec.p)) throw FieldError("characteristic " + std::to_string(spec.p) + " is not prime");
    if (spec.n == 0) throw FieldError("extension degree must be positive");
    if (spec.modulus.size() != spec.n + 1 || spec.modulus.back() != 1)
        throw FieldError("modulus must be monic of degree n");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < spec.n; ++i) {
        q *= spec.p;
        if (q > kMaxFieldOrder) throw FieldError("field order exceeds supported maximum");
    }
    for (auto& c : spec.modulus)
        if (c >= spec.p) throw FieldError("modulus coefficient not reduced mod p");
    if (!prime_field_irreducible(Coeffs(spec.modulus.begin(), spec.modulus.end()), spec.p))
        throw FieldError("modulus is not irreducible");

    auto t = std::make_shared<detail::FieldTables>();
    t->spec = std::move(spec);
    t->q = static_cast<std::uint32_t>(q);
    t->pw.resize(t->spec.n + 1);
    t->pw[0] = 1;
    for (std::uint32_t i = 1; i <= t->spec.n; ++i) t->pw[i] = t->pw[i - 1] * t->spec.p;

    t->neg_table.resize(t->q);
    for (Elem a = 0; a < t->q; ++a) t->neg_table[a] = t->digit_neg(a);
    if (t->q <= 1024) {
        t->add_table.resize(static_cast<std::size_t>(t->q) * t->q);
        for (Elem a = 0; a < t->q; ++a)
            for (Elem b = 0; b < t->q; ++b) t->add_table[a * t->q + b] = t->digit_add(a, b);
    }

    const std::uint32_t order = t->q - 1;
    t->log_table.assign(t->q, 0);
    t->exp_table.assign(2 * static_cast<std::size_t>(order), 0);
    for (Elem g = 1; g < t->q; ++g) {
        std::vector<Elem> powers;
        powers.reserve(order);
        Elem x = 1;
        bool ok = true;
        for (std::uint32_t i = 0; i < order; ++i) {
            if (i > 0 && x == 1) {
                ok = false;
                break;
            }
            powers.push_back(x);
            x = t->slow_mul(x, g);
        }
        if (!ok || x != 1) continue;
        t->primitive = g;
        for (std::uint32_t i = 0; i < order; ++i) {
            t->exp_table[i] = powers[i];
            t->exp_table[i + order] = powers[i];
            t->log_table[powers[i]] = i;
        }
        break;
    }
    return t;
}

}  // namespace

Field::Field() : Field(Field::prime(2)) {}

Field Field::prime(std::uint32_t p) { return Field(build_tables(FieldSpec{p, 1, {0, 1}})); }

Field Field::make(std::uint32_t p, std::uint32_t n) {
    if (n == 1) return prime(p);
    return Field(build_tables(FieldSpec{p, n, canonical_modulus(p, n)}));
}

Field Field::with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus) {
    const auto n = static_cast<std::uint32_t>(modulus.size() - 1);
    return Field(build_tables(FieldSpec{p, n, std::move(modulus)}));
}

Field Field::from_spec(const FieldSpec& spec) { return Field(build_tables(spec)); }

const FieldSpec& Field::spec() const { return t_->spec; }
std::uint32_t Field::size() const { return t_->q; }

Elem Field::generator() const {
    // For n = 1 the modulus is t, whose root is 0; use 1 so the generator spans.
    return spec().n == 1 ? 1 : spec().p;
}

Elem Field::primitive_element() const { return t_->primitive; }

Elem Field::add(Elem a, Elem b) const {
    if (!t_->add_table.empty()) return t_->add_table[a * t_->q + b];
    return t_->digit_add(a, b);
}

Elem Field::neg(Elem a) const { return t_->neg_table[a]; }
Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return t_->exp_table[t_->log_table[a] + t_->log_table[b]];
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw FieldError("division by zero in " + to_string());
    const std::uint32_t order = t_->q - 1;
    return t_->exp_table[(order - t_->log_table[a]) % order];
}

Elem Field::pow(Elem a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    const std::uint64_t order = t_->q - 1;
    return t_->exp_table[(static_cast<std::uint64_t>(t_->log_table[a]) * (e % order)) % order];
}

Elem Field::from_int(std::int64_t v) const {
    const auto p = static_cast<std::int64_t>(spec().p);
    return static_cast<Elem>(((v % p) + p) % p);
}

std::vector<std::uint32_t> Field::coeffs(Elem a) const {
    std::vector<std::uint32_t> c(spec().n);
    for (auto& x : c) {
        x = a % spec().p;
        a /= spec().p;
    }
    return c;
}

Elem Field::from_coeffs(std::span<const std::uint32_t> c) const {
    if (c.size() > spec().n) throw FieldError("too many coefficients for field element");
    Elem r = 0;
    for (std::size_t i = 0; i < c.size(); ++i) r += (c[i] % spec().p) * t_->pw[i];
    return r;
}

std::string Field::to_string() const {
    std::ostringstream os;
    os << spec().p << '^' << spec().n << ':';
    for (std::size_t i = 0; i < spec().modulus.size(); ++i) os << (i ? "," : "") << spec().modulus[i];
    return os.str();
}

std::string Field::format(Elem a) const {
    if (spec().n == 1) return std::to_string(a);
    std::ostringstream os;
    os << '[';
    auto c = coeffs(a);
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << ']';
    return os.str();
}

bool operator==(const Field& a, const Field& b) { return a.t_ == b.t_ || a.spec() == b.spec(); }

std::vector<std::uint32_t> canonical_modulus(std::uint32_t p, std::uint32_t n) {
    if (!is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
    if (n == 0) throw FieldError("extension degree must be positive");
    if (n == 1) return {0, 1};
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        count *= p;
        if (count > kMaxFieldOrder) throw FieldError("field order exceeds supported maximum");
    }
    // Enumerate lower coefficients as a base-p number whose most significant
    // digit is the t^(n-1) coefficient, so the first hit is the least polynomial.
    for (std::uint64_t v = 0; v < count; ++v) {
        Coeffs m(n + 1, 0);
        m[n] = 1;
        std::uint64_t x = v;
        for (std::uint32_t i = 0; i < n; ++i) {
            m[i] = x % p;
            x /= p;
        }
        if (m[0] == 0) continue;
        if (prime_field_irreducible(m, p)) return std::vector<std::uint32_t>(m.begin(), m.end());
    }
    throw FieldError("no irreducible polynomial found");
}

FieldEmbedding subfield_embed(const Field& k, const Field& kprime) {
    if (k.characteristic() != kprime.characteristic())
        throw FieldError("no embedding: characteristics differ");
    if (kprime.degree() % k.degree() != 0)
        throw FieldError("no embedding: degree " + std::to_string(k.degree()) + " does not divide " +
                         std::to_string(kprime.degree()));
    const auto& mod = k.spec().modulus;
    auto eval = [&](Elem x) {
        Elem r = 0;
        for (std::size_t i = mod.size(); i-- > 0;) r = kprime.add(kprime.mul(r, x), kprime.from_int(mod[i]));
        return r;
    };
    Elem root = 0;
    bool found = false;
    if (k.degree() == 1) {
        root = 1;
        found = true;
    } else {
        for (Elem x = 0; x < kprime.size(); ++x)
            if (eval(x) == 0) {
                root = x;
                found = true;
                break;
            }
    }
    if (!found) throw FieldError("no embedding: modulus has no root in target");
    FieldEmbedding emb{k, kprime, root, std::vector<Elem>(k.size())};
    for (Elem a = 0; a < k.size(); ++a) {
        const auto c = k.coeffs(a);
        Elem r = 0;
        if (k.degree() == 1) {
            r = kprime.from_int(c[0]);
        } else {
            for (std::size_t i = c.size(); i-- > 0;) r = kprime.add(kprime.mul(r, root), kprime.from_int(c[i]));
        }
        emb.table[a] = r;
    }
    return emb;
}

}  // namespace primequot
