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

#include "ti/numeric.hpp"

#include <algorithm>
#include <stdexcept>

namespace ti {

Int mod_floor(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

Int mod_pow(Int base, Int exp, const Int& m) {
    base = mod_floor(base, m);
    Int result = 1;
    while (exp > 0) {
        if (bit_test(exp, 0)) result = result * base % m;
        base = base * base % m;
        exp >>= 1;
    }
    return result;
}

Int mod_inverse(const Int& a, const Int& m) {
    // extended Euclid
    Int r0 = m, r1 = mod_floor(a, m);
    Int t0 = 0, t1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    if (r0 != 1) throw std::domain_error("mod_inverse: arguments not coprime");
    return mod_floor(t0, m);
}

std::vector<std::pair<Int, unsigned>> factor(const Int& n) {
    if (n == 0) throw std::domain_error("factor: zero argument");
    std::vector<std::pair<Int, unsigned>> out;
    Int m = abs(n);
    auto strip = [&](const Int& p) {
        unsigned e = 0;
        while (m % p == 0) { m /= p; ++e; }
        if (e > 0) out.emplace_back(p, e);
    };
    strip(2);
    strip(3);
    for (Int p = 5; p * p <= m; p += 6) {
        strip(p);
        strip(p + 2);
    }
    if (m > 1) out.emplace_back(m, 1u);
    return out;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (Int p = 3; p * p <= n; p += 2)
        if (n % p == 0) return false;
    return true;
}

bool is_square(const Int& n) {
    if (n < 0) return false;
    Int r = sqrt(n);
    return r * r == n;
}

Int squarefree_part(const Rat& r) {
    if (r == 0) throw std::domain_error("squarefree_part: zero argument");
    Int out = r < 0 ? -1 : 1;
    for (const auto& [p, e] : factor(num(r) * den(r)))
        if (e % 2 == 1) out *= p;
    return out;
}

long valuation(const Rat& r, const Int& p) {
    if (r == 0) throw std::domain_error("valuation: zero argument");
    long v = 0;
    Int n = num(r);
    while (n % p == 0) { n /= p; ++v; }
    Int d = den(r);
    while (d % p == 0) { d /= p; --v; }
    return v;
}

Rat unit_part(const Rat& r, const Int& p) {
    long v = valuation(r, p);
    Rat q(p, 1);
    Rat out = r;
    for (; v > 0; --v) out /= q;
    for (; v < 0; ++v) out *= q;
    return out;
}

int legendre(const Int& a, const Int& p) {
    Int r = mod_floor(a, p);
    if (r == 0) return 0;
    Int s = mod_pow(r, (p - 1) / 2, p);
    return s == 1 ? 1 : -1;
}

int legendre_unit(const Rat& u, const Int& p) {
    // (1/d | p) = (d | p) for units, so numerator and denominator multiply.
    return legendre(num(u), p) * legendre(den(u), p);
}

bool is_local_square(const Rat& r, const Int& p) {
    if (r == 0) throw std::domain_error("is_local_square: zero argument");
    if (valuation(r, p) % 2 != 0) return false;
    Rat u = unit_part(r, p);
    if (p == 2) {
        Int m = mod_floor(num(u) * mod_inverse(den(u), 8), 8);
        return m == 1;
    }
    return legendre_unit(u, p) == 1;
}

std::vector<Int> support_primes(const std::vector<Rat>& values) {
    std::vector<Int> out;
    for (const Rat& r : values) {
        if (r == 0) continue;
        for (const auto& [p, e] : factor(num(r) * den(r))) out.push_back(p);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace ti
