/*
   Copyright 2026 The torsor-index authors

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

#include "ti/places.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ti {

namespace {

// ---- dense polynomial arithmetic over F_p, coefficients constant-first ----

using PPoly = std::vector<Int>;

void ptrim(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int pdeg(const PPoly& a) { return static_cast<int>(a.size()) - 1; }

PPoly preduce(const std::vector<Int>& coeffs, const Int& p) {
    PPoly out;
    out.reserve(coeffs.size());
    for (const Int& c : coeffs) out.push_back(mod_floor(c, p));
    ptrim(out);
    return out;
}

PPoly psub(const PPoly& a, const PPoly& b, const Int& p) {
    PPoly out(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] = mod_floor(out[i] - b[i], p);
    ptrim(out);
    return out;
}

PPoly pmul(const PPoly& a, const PPoly& b, const Int& p) {
    if (a.empty() || b.empty()) return {};
    PPoly out(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    ptrim(out);
    return out;
}

// remainder of a by b, b nonzero
PPoly pmod(PPoly a, const PPoly& b, const Int& p) {
    Int lead_inv = mod_inverse(b.back(), p);
    while (pdeg(a) >= pdeg(b)) {
        Int q = a.back() * lead_inv % p;
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i)
            a[shift + i] = mod_floor(a[shift + i] - q * b[i], p);
        ptrim(a);
        if (a.empty()) break;
    }
    return a;
}

PPoly pgcd(PPoly a, PPoly b, const Int& p) {
    while (!b.empty()) {
        PPoly r = pmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        Int inv = mod_inverse(a.back(), p);
        for (Int& c : a) c = c * inv % p;
    }
    return a;
}

PPoly pdiv_exact(PPoly a, const PPoly& b, const Int& p) {
    PPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Int(0));
    Int lead_inv = mod_inverse(b.back(), p);
    while (pdeg(a) >= pdeg(b)) {
        Int qc = a.back() * lead_inv % p;
        size_t shift = a.size() - b.size();
        q[shift] = qc;
        for (size_t i = 0; i < b.size(); ++i)
            a[shift + i] = mod_floor(a[shift + i] - qc * b[i], p);
        ptrim(a);
        if (a.empty()) break;
    }
    ptrim(q);
    return q;
}

PPoly ppow_mod(PPoly base, Int exp, const PPoly& mod, const Int& p) {
    PPoly result{Int(1)};
    base = pmod(std::move(base), mod, p);
    while (exp > 0) {
        if (bit_test(exp, 0)) result = pmod(pmul(result, base, p), mod, p);
        base = pmod(pmul(base, base, p), mod, p);
        exp >>= 1;
    }
    return result;
}

// ---- exact rational polynomial helpers ----

using RPoly = std::vector<Rat>;

void rtrim(RPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

RPoly rderivative(const RPoly& a) {
    RPoly out;
    for (size_t i = 1; i < a.size(); ++i) out.push_back(a[i] * Int(i));
    rtrim(out);
    return out;
}

// Sylvester-matrix resultant via Gaussian elimination.
Rat resultant(const RPoly& a, const RPoly& b) {
    int m = static_cast<int>(a.size()) - 1;
    int n = static_cast<int>(b.size()) - 1;
    if (m < 0 || n < 0) return 0;
    if (m == 0 && n == 0) return 1;
    int size = m + n;
    std::vector<std::vector<Rat>> s(size, std::vector<Rat>(size, Rat(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) s[i][i + j] = a[m - j];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) s[n + i][i + j] = b[n - j];
    Rat det = 1;
    for (int col = 0; col < size; ++col) {
        int pivot = -1;
        for (int row = col; row < size; ++row)
            if (s[row][col] != 0) { pivot = row; break; }
        if (pivot < 0) return 0;
        if (pivot != col) { std::swap(s[pivot], s[col]); det = -det; }
        det *= s[col][col];
        Rat inv = Rat(1) / s[col][col];
        for (int row = col + 1; row < size; ++row) {
            if (s[row][col] == 0) continue;
            Rat fac = s[row][col] * inv;
            for (int k = col; k < size; ++k) s[row][k] -= fac * s[col][k];
        }
    }
    return det;
}

int sign_of(const Rat& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

int sign_variations(const std::vector<int>& signs) {
    int v = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

}  // namespace

// ---- Place ----

Place Place::finite(Int p) {
    if (!is_prime(p)) throw InvalidInput("Place: not a prime");
    return Place(false, std::move(p));
}

std::string Place::str() const {
    if (infinite_) return "inf";
    return p_.str();
}

// ---- Hilbert symbol ----

int hilbert_symbol(const Rat& a, const Rat& b, const Place& v) {
    if (a == 0 || b == 0) throw ZeroArgument("hilbert_symbol: zero argument");
    if (v.is_infinite()) return (a < 0 && b < 0) ? -1 : 1;
    const Int& p = v.prime();
    long alpha = valuation(a, p);
    long beta = valuation(b, p);
    Rat u = unit_part(a, p);
    Rat w = unit_part(b, p);
    if (p == 2) {
        auto mod8 = [](const Rat& x) {
            return mod_floor(num(x) * mod_inverse(den(x), 8), 8);
        };
        Int u8 = mod8(u), w8 = mod8(w);
        long eps_u = (u8 == 3 || u8 == 7) ? 1 : 0;   // (u-1)/2 mod 2
        long eps_w = (w8 == 3 || w8 == 7) ? 1 : 0;
        long om_u = (u8 == 3 || u8 == 5) ? 1 : 0;    // (u^2-1)/8 mod 2
        long om_w = (w8 == 3 || w8 == 5) ? 1 : 0;
        long e = eps_u * eps_w + alpha * om_w + beta * om_u;
        return e % 2 == 0 ? 1 : -1;
    }
    int s = 1;
    if ((alpha % 2) && (beta % 2) && p % 4 == 3) s = -s;
    if (beta % 2) s *= legendre_unit(u, p);
    if (alpha % 2) s *= legendre_unit(w, p);
    return s;
}

// ---- QuadraticField ----

QuadraticField::QuadraticField(Int d) : d_(std::move(d)) {
    if (d_ == 0 || d_ == 1) throw InvalidInput("QuadraticField: d must differ from 0 and 1");
    for (const auto& [p, e] : factor(d_))
        if (e > 1) throw InvalidInput("QuadraticField: d must be squarefree");
}

QuadraticField::Splitting QuadraticField::splitting_at(const Place& v) const {
    if (v.is_infinite())
        return d_ > 0 ? Splitting::split : Splitting::ramified;
    const Int& p = v.prime();
    if (p == 2) {
        Int m = mod_floor(d_, 8);
        if (m == 1) return Splitting::split;
        if (m == 5) return Splitting::inert;
        return Splitting::ramified;
    }
    if (d_ % p == 0) return Splitting::ramified;
    return legendre(d_, p) == 1 ? Splitting::split : Splitting::inert;
}

// ---- IntegerPolynomial ----

IntegerPolynomial IntegerPolynomial::make(std::vector<Int> coeffs) {
    while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
    if (coeffs.size() < 2) throw InvalidPolynomial("degree must be at least 1");
    if (coeffs.back() != 1) throw InvalidPolynomial("not monic");
    IntegerPolynomial f(std::move(coeffs));
    const int n = f.degree();
    if (n == 1) return f;

    // rational roots of a monic integer polynomial are integer divisors of
    // the constant term
    const Int& c0 = f.coeff(0);
    if (c0 == 0) throw InvalidPolynomial("reducible: zero constant term");
    auto eval = [&](const Int& x) {
        Int acc = 0;
        for (int i = n; i >= 0; --i) acc = acc * x + f.coeff(i);
        return acc;
    };
    std::vector<Int> divisors{1};
    for (const auto& [p, e] : factor(c0)) {
        std::vector<Int> next;
        Int pk = 1;
        for (unsigned k = 0; k <= e; ++k, pk *= p)
            for (const Int& d : divisors) next.push_back(d * pk);
        divisors = std::move(next);
    }
    for (const Int& d : divisors) {
        if (eval(d) == 0 || eval(-d) == 0)
            throw InvalidPolynomial("reducible: rational root");
    }
    if (n <= 3) return f;  // no rational root certifies degree 2 and 3

    Int disc = f.discriminant();
    if (disc == 0) throw InvalidPolynomial("not squarefree");

    // modular certification: either an irreducible reduction mod p, or the
    // factor-degree patterns across several primes rule out proper factors
    std::vector<bool> possible(static_cast<size_t>(n) + 1, true);
    int primes_used = 0;
    for (Int p = 2; p < 300 && primes_used < 40; ++p) {
        if (!is_prime(p) || disc % p == 0) continue;
        ++primes_used;
        auto degs = detail::factor_degrees_mod_p(f.coeffs(), p);
        if (degs.size() == 1 && degs[0] == n) return f;
        std::vector<bool> sums(static_cast<size_t>(n) + 1, false);
        sums[0] = true;
        for (int d : degs)
            for (int k = n; k >= d; --k)
                if (sums[static_cast<size_t>(k - d)]) sums[static_cast<size_t>(k)] = true;
        for (int k = 0; k <= n; ++k)
            if (!sums[static_cast<size_t>(k)]) possible[static_cast<size_t>(k)] = false;
        bool only_trivial = true;
        for (int k = 1; k < n; ++k)
            if (possible[static_cast<size_t>(k)]) { only_trivial = false; break; }
        if (only_trivial) return f;
    }
    throw InvalidPolynomial("irreducibility not certified");
}

Int IntegerPolynomial::discriminant() const {
    RPoly a(c_.begin(), c_.end());
    Rat res = resultant(a, rderivative(a));
    int n = degree();
    if ((n * (n - 1) / 2) % 2 == 1) res = -res;
    return num(res);  // monic input, so the resultant is integral
}

std::string IntegerPolynomial::str() const {
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Int& c = coeff(i);
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Int a = abs(c);
        if (i == 0 || a != 1) os << a.str();
        if (i > 0) os << "x";
        if (i > 1) os << "^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

// ---- factorization degrees mod p ----

namespace detail {

std::vector<int> factor_degrees_mod_p(const std::vector<Int>& coeffs, const Int& p) {
    PPoly g = preduce(coeffs, p);
    if (pdeg(g) != static_cast<int>(coeffs.size()) - 1)
        throw RamifiedPrime("factor_degrees_mod_p: leading coefficient vanishes mod p");
    {
        PPoly d;
        for (size_t i = 1; i < g.size(); ++i) d.push_back(g[i] * Int(i) % p);
        ptrim(d);
        if (pgcd(g, d, p).size() != 1)
            throw RamifiedPrime("factor_degrees_mod_p: not squarefree mod p");
    }
    std::vector<int> out;
    PPoly x{Int(0), Int(1)};
    PPoly h = pmod(x, g, p);
    for (int d = 1; 2 * d <= pdeg(g); ++d) {
        h = ppow_mod(h, p, g, p);
        PPoly r = pgcd(psub(h, x, p), g, p);
        if (pdeg(r) > 0) {
            for (int k = 0; k < pdeg(r) / d; ++k) out.push_back(d);
            g = pdiv_exact(g, r, p);
            if (pdeg(g) == 0) break;
            h = pmod(h, g, p);
        }
    }
    if (pdeg(g) > 0) out.push_back(pdeg(g));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

bool ramified_at(const IntegerPolynomial& f, const Int& p) {
    return f.discriminant() % p == 0;
}

std::vector<int> local_degrees(const IntegerPolynomial& f, const Int& p) {
    if (!is_prime(p)) throw InvalidInput("local_degrees: not a prime");
    if (f.degree() == 2) {
        // b^2 - 4c never a square here (f irreducible)
        Int disc = f.coeff(1) * f.coeff(1) - 4 * f.coeff(0);
        QuadraticField k(squarefree_part(Rat(disc)));
        switch (k.splitting_at(Place::finite(p))) {
            case QuadraticField::Splitting::split: return {1, 1};
            case QuadraticField::Splitting::inert: return {2};
            case QuadraticField::Splitting::ramified: return {1};
        }
    }
    if (ramified_at(f, p))
        throw RamifiedPrime("local_degrees: p divides disc(f)");
    return detail::factor_degrees_mod_p(f.coeffs(), p);
}

std::vector<int> local_degrees_full(const IntegerPolynomial& f, const Int& p) {
    if (f.degree() == 2) {
        Int disc = f.coeff(1) * f.coeff(1) - 4 * f.coeff(0);
        QuadraticField k(squarefree_part(Rat(disc)));
        switch (k.splitting_at(Place::finite(p))) {
            case QuadraticField::Splitting::split: return {1, 1};
            case QuadraticField::Splitting::inert: return {2};
            case QuadraticField::Splitting::ramified: return {2};
        }
    }
    return local_degrees(f, p);
}

int real_root_count(const IntegerPolynomial& f) {
    if (f.degree() == 1) return 1;
    RPoly p0(f.coeffs().begin(), f.coeffs().end());
    RPoly p1 = rderivative(p0);
    std::vector<RPoly> chain{p0, p1};
    while (chain.back().size() > 1) {
        const RPoly& a = chain[chain.size() - 2];
        const RPoly& b = chain.back();
        // negated remainder of a by b
        RPoly r = a;
        while (r.size() >= b.size() && !r.empty()) {
            Rat q = r.back() / b.back();
            size_t shift = r.size() - b.size();
            for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= q * b[i];
            rtrim(r);
        }
        for (Rat& c : r) c = -c;
        if (r.empty()) break;
        chain.push_back(std::move(r));
    }
    std::vector<int> at_minus, at_plus;
    for (const RPoly& q : chain) {
        if (q.empty()) continue;
        int lead = sign_of(q.back());
        int deg = static_cast<int>(q.size()) - 1;
        at_plus.push_back(lead);
        at_minus.push_back(deg % 2 == 0 ? lead : -lead);
    }
    return sign_variations(at_minus) - sign_variations(at_plus);
}

}  // namespace ti
