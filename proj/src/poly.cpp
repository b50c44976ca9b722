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

#include "primequot/poly.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace primequot {

Poly::Poly(Field f, std::vector<Elem> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) { normalize(); }

Poly Poly::from_ints(const Field& f, const std::vector<std::int64_t>& c) {
    std::vector<Elem> v;
    v.reserve(c.size());
    for (auto x : c) v.push_back(f.from_int(x));
    return Poly(f, std::move(v));
}

void Poly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scale(*this, f_.inv(lead()));
}

Poly Poly::derivative() const {
    std::vector<Elem> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(f_.mul(f_.from_int(static_cast<std::int64_t>(i)), c_[i]));
    return Poly(f_, std::move(d));
}

Elem Poly::eval(Elem x) const {
    Elem r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = f_.add(f_.mul(r, x), c_[i]);
    return r;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        const bool unit = c_[i] == 1;
        if (!unit || i == 0) os << f_.format(c_[i]);
        if (i > 0) os << (unit ? "" : "*") << "t";
        if (i > 1) os << '^' << i;
    }
    return os.str();
}

bool operator<(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t i = a.c_.size(); i-- > 0;)
        if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
    return false;
}

Poly operator+(const Poly& a, const Poly& b) {
    const Field& f = a.is_zero() && a.coeffs().empty() ? b.field() : a.field();
    std::vector<Elem> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.add(a[i], b[i]);
    return Poly(f, std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
    const Field& f = a.field();
    std::vector<Elem> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.sub(a[i], b[i]);
    return Poly(f, std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    const Field& f = a.field();
    if (a.is_zero() || b.is_zero()) return Poly(f);
    std::vector<Elem> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] = f.add(c[i + j], f.mul(a[i], b[j]));
    }
    return Poly(f, std::move(c));
}

Poly scale(const Poly& a, Elem s) {
    std::vector<Elem> c(a.coeffs());
    for (auto& x : c) x = a.field().mul(x, s);
    return Poly(a.field(), std::move(c));
}

DivMod divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    const Field& f = a.field();
    std::vector<Elem> r(a.coeffs());
    const int db = b.degree();
    if (a.degree() < db) return {Poly(f), a};
    std::vector<Elem> q(static_cast<std::size_t>(a.degree() - db + 1), 0);
    const Elem linv = f.inv(b.lead());
    for (int i = a.degree(); i >= db; --i) {
        const Elem c = f.mul(r[static_cast<std::size_t>(i)], linv);
        q[static_cast<std::size_t>(i - db)] = c;
        if (c == 0) continue;
        for (int j = 0; j <= db; ++j) {
            auto& x = r[static_cast<std::size_t>(i - db + j)];
            x = f.sub(x, f.mul(c, b[static_cast<std::size_t>(j)]));
        }
    }
    return {Poly(f, std::move(q)), Poly(f, std::move(r))};
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).remainder; }
Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).quotient; }

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

ExtGcd ext_gcd(const Poly& a, const Poly& b) {
    const Field& f = a.field();
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(f, 1), s1(f);
    Poly t0(f), t1 = Poly::constant(f, 1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Poly t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const Elem li = f.inv(r0.lead());
    return {scale(r0, li), scale(s0, li), scale(t0, li)};
}

Poly pow_mod(Poly base, std::uint64_t e, const Poly& mod) {
    Poly r = Poly::constant(mod.field(), 1) % mod;
    base = base % mod;
    while (e) {
        if (e & 1) r = (r * base) % mod;
        base = (base * base) % mod;
        e >>= 1;
    }
    return r;
}

namespace {

// x^(q^k) mod f by repeated q-th powering.
Poly frobenius_x(const Poly& f, std::uint32_t k) {
    const std::uint64_t q = f.field().size();
    Poly h = Poly::x(f.field()) % f;
    for (std::uint32_t i = 0; i < k; ++i) h = pow_mod(h, q, f);
    return h;
}

Poly pth_root(const Poly& c) {
    const Field& f = c.field();
    const std::uint32_t p = f.characteristic();
    const std::uint64_t root_exp = f.size() / p;
    std::vector<Elem> r;
    for (std::size_t i = 0; i < c.coeffs().size(); i += p) r.push_back(f.pow(c[i], root_exp));
    return Poly(f, std::move(r));
}

void squarefree(const Poly& f, int mult, std::vector<std::pair<Poly, int>>& out) {
    const Field& k = f.field();
    const Poly one = Poly::constant(k, 1);
    Poly c = gcd(f, f.derivative());
    Poly w = f / c;
    int i = 1;
    while (!(w == one)) {
        Poly y = gcd(w, c);
        Poly fac = (w / y).monic();
        if (fac.degree() > 0) out.emplace_back(fac, i * mult);
        w = y;
        c = c / y;
        ++i;
    }
    c = c.monic();
    if (c.degree() > 0) squarefree(pth_root(c).monic(), mult * static_cast<int>(k.characteristic()), out);
}

void equal_degree(const Poly& f, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
    if (f.degree() == d) {
        out.push_back(f);
        return;
    }
    const Field& k = f.field();
    const std::uint64_t q = k.size();
    for (;;) {
        std::vector<Elem> coeffs(static_cast<std::size_t>(f.degree()));
        for (auto& x : coeffs) x = static_cast<Elem>(rng() % q);
        Poly a(k, std::move(coeffs));
        if (a.degree() < 1) continue;
        Poly b(k);
        if (k.characteristic() == 2) {
            const std::uint32_t steps = k.degree() * static_cast<std::uint32_t>(d);
            Poly t = a;
            b = a;
            for (std::uint32_t i = 1; i < steps; ++i) {
                t = (t * t) % f;
                b = b + t;
            }
        } else {
            Poly t = a, acc = a;
            for (int i = 1; i < d; ++i) {
                t = pow_mod(t, q, f);
                acc = (acc * t) % f;
            }
            b = pow_mod(acc, (q - 1) / 2, f) - Poly::constant(k, 1);
        }
        Poly g = gcd(f, b);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree((f / g).monic(), d, rng, out);
            return;
        }
    }
}

}  // namespace

bool is_irreducible(const Poly& f) {
    const int n = f.degree();
    if (n < 1) return false;
    if (n == 1) return true;
    const Poly fm = f.monic();
    const Poly x = Poly::x(f.field());
    if (!((frobenius_x(fm, static_cast<std::uint32_t>(n)) - x) % fm).is_zero()) return false;
    for (int r = 2; r <= n; ++r) {
        if (n % r != 0 || !is_prime(static_cast<std::uint64_t>(r))) continue;
        if (gcd(fm, frobenius_x(fm, static_cast<std::uint32_t>(n / r)) - x).degree() > 0) return false;
    }
    return true;
}

Poly Factorization::product() const {
    if (factors.empty()) return Poly(Field(), {unit});
    const Field& k = factors.front().first.field();
    Poly r = Poly::constant(k, unit);
    for (const auto& [g, m] : factors)
        for (int i = 0; i < m; ++i) r = r * g;
    return r;
}

Factorization factor(const Poly& f, std::uint64_t seed) {
    if (f.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
    Factorization out;
    out.unit = f.lead();
    if (f.degree() == 0) return out;
    std::mt19937_64 rng(seed);
    std::vector<std::pair<Poly, int>> sqf;
    squarefree(f.monic(), 1, sqf);
    for (const auto& [g, m] : sqf) {
        // distinct-degree
        Poly rest = g;
        Poly h = Poly::x(g.field()) % rest;
        int d = 1;
        while (rest.degree() >= 2 * d) {
            h = pow_mod(h, g.field().size(), rest);
            Poly part = gcd(rest, h - Poly::x(g.field()));
            if (part.degree() > 0) {
                std::vector<Poly> pieces;
                equal_degree(part, d, rng, pieces);
                for (auto& pc : pieces) out.factors.emplace_back(std::move(pc), m);
                rest = (rest / part).monic();
                h = h % rest;
            }
            ++d;
        }
        if (rest.degree() > 0) out.factors.emplace_back(rest, m);
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        if (a.first == b.first) return a.second < b.second;
        return a.first < b.first;
    });
    for (const auto& [g, m] : out.factors)
        if (!is_irreducible(g)) throw std::logic_error("factor certification failed for " + g.to_string());
    return out;
}

}  // namespace primequot
