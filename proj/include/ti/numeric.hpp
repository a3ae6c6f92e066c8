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

#ifndef TI_NUMERIC_HPP
#define TI_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <utility>
#include <vector>

namespace ti {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

/// Least nonnegative representative of a mod m (m > 0).
Int mod_floor(const Int& a, const Int& m);

Int mod_pow(Int base, Int exp, const Int& m);

/// Inverse of a mod m; requires gcd(a, m) = 1.
Int mod_inverse(const Int& a, const Int& m);

/// Trial-division factorization of |n|, n != 0. Returns (prime, exponent)
/// pairs in increasing prime order.
std::vector<std::pair<Int, unsigned>> factor(const Int& n);

bool is_prime(const Int& n);

/// True iff n is a perfect square (n >= 0).
bool is_square(const Int& n);

/// Signed squarefree integer representing r modulo nonzero rational squares.
Int squarefree_part(const Rat& r);

/// p-adic valuation of a nonzero rational.
long valuation(const Rat& r, const Int& p);

/// r / p^v(r), the p-adic unit part.
Rat unit_part(const Rat& r, const Int& p);

/// Legendre symbol (a|p) for odd prime p: +1, -1, or 0 when p | a.
int legendre(const Int& a, const Int& p);

/// Legendre symbol of a p-adic unit rational.
int legendre_unit(const Rat& u, const Int& p);

/// True iff r is a square in Q_p (finite p); r nonzero.
bool is_local_square(const Rat& r, const Int& p);

/// Sorted distinct primes dividing any numerator or denominator.
std::vector<Int> support_primes(const std::vector<Rat>& values);

}  // namespace ti

#endif
