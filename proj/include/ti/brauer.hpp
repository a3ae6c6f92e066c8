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

#ifndef TI_BRAUER_HPP
#define TI_BRAUER_HPP

#include <compare>
#include <map>
#include <utility>

#include "ti/places.hpp"
#include "ti/search.hpp"

namespace ti {

/// Element of Q/Z as a reduced fraction with 0 <= num < den.
class Fraction01 {
public:
    Fraction01() : n_(0), d_(1) {}
    /// Reduce an arbitrary rational mod 1.
    static Fraction01 of(const Rat& r);
    static Fraction01 of(Int n, Int d) { return of(Rat(std::move(n), std::move(d))); }

    const Int& numerator() const { return n_; }
    const Int& denominator() const { return d_; }
    bool is_zero() const { return n_ == 0; }
    Rat value() const { return Rat(n_, d_); }

    Fraction01 operator+(const Fraction01& o) const { return of(value() + o.value()); }
    Fraction01 operator-() const { return of(-value()); }
    /// k-fold sum in Q/Z.
    Fraction01 times(const Int& k) const { return of(value() * k); }

    friend bool operator==(const Fraction01&, const Fraction01&) = default;

private:
    Int n_, d_;
};

/// Brauer class over Q as a finite-support map from places to local
/// invariants. A class arising from an actual central simple algebra has
/// invariant sum zero (`coherent`); raw invariant data is representable so
/// that local probes and corestriction images can be expressed.
class BrauerClassQ {
public:
    using Map = std::map<Place, Fraction01>;

    BrauerClassQ() = default;
    /// Drops zero invariants and checks the real-place constraint
    /// inv in {0, 1/2}.
    static BrauerClassQ make(Map inv);

    const Map& invariants() const { return inv_; }
    bool is_zero() const { return inv_.empty(); }
    /// Sum of invariants vanishes in Q/Z.
    bool coherent() const;

    friend bool operator==(const BrauerClassQ&, const BrauerClassQ&) = default;

private:
    explicit BrauerClassQ(Map m) : inv_(std::move(m)) {}
    Map inv_;
};

/// Place of a quadratic field K lying over a place of Q. Split places
/// carry slot 1 or 2; inert and ramified places use slot 1.
struct PlaceOverK {
    Place base;
    int slot = 1;

    friend bool operator==(const PlaceOverK&, const PlaceOverK&) = default;
    friend std::strong_ordering operator<=>(const PlaceOverK& a, const PlaceOverK& b) {
        if (auto c = a.base <=> b.base; c != 0) return c;
        return a.slot <=> b.slot;
    }
};

/// Brauer class over K = Q(sqrt(d)) by local invariants at places of K.
class BrauerClassK {
public:
    using Map = std::map<PlaceOverK, Fraction01>;

    explicit BrauerClassK(QuadraticField k) : K_(std::move(k)) {}
    /// Checks slot consistency with the decomposition of d, zero invariants
    /// at complex places, and inv in {0, 1/2} at real places.
    static BrauerClassK make(QuadraticField k, Map inv);

    const QuadraticField& field() const { return K_; }
    const Map& invariants() const { return inv_; }
    bool is_zero() const { return inv_.empty(); }
    bool coherent() const;

    friend bool operator==(const BrauerClassK&, const BrauerClassK&) = default;

private:
    QuadraticField K_;
    Map inv_;
};

/// Class of the quaternion algebra (a,b) over Q: invariant 1/2 exactly at
/// the places where the Hilbert symbol is -1.
BrauerClassQ quaternion_class(const Rat& a, const Rat& b);

BrauerClassQ tensor(const BrauerClassQ& alpha, const BrauerClassQ& beta);
BrauerClassK tensor(const BrauerClassK& alpha, const BrauerClassK& beta);
BrauerClassQ opposite(const BrauerClassQ& alpha);
BrauerClassK opposite(const BrauerClassK& alpha);

/// Schur index: lcm of the denominators of the local invariants
/// (exponent = index over number fields).
Int schur_index(const BrauerClassQ& alpha);
Int schur_index(const BrauerClassK& alpha);

/// Base change along Q -> K: split places copy the invariant, inert and
/// ramified places double it.
BrauerClassK restrict_to_quadratic(const BrauerClassQ& alpha, const QuadraticField& k);

/// Corestriction Br K -> Br Q: invariant at v is the sum over places above v.
BrauerClassQ corestrict(const BrauerClassK& beta);

/// Albert-Riehm-Scharlau existence criterion: beta underlies an algebra
/// with a K/Q-involution iff its corestriction vanishes.
bool admits_unitary_involution(const BrauerClassK& beta);

/// True iff F = Q[x]/(f) splits alpha: every local degree of F above a
/// supported place multiplies the invariant into Z.
bool splits_over(const BrauerClassQ& alpha, const IntegerPolynomial& f);

/// K-class version over the compositum FK.
bool splits_over(const BrauerClassK& beta, const IntegerPolynomial& f);

/// Local degrees of the places of FK above the places of K over p,
/// derived from the decomposition of p in F and in K.
std::vector<int> compositum_local_degrees(const IntegerPolynomial& f, const Int& p,
                                          const QuadraticField& k);

/// Minimal-height squarefree pair (a,b) with quaternion_class(a,b) = alpha,
/// ordered by max(|a|,|b|), then (|a|,|b|), positive signs first.
/// Requires every invariant of alpha to lie in {0, 1/2}.
std::pair<Int, Int> find_quaternion_symbol(const BrauerClassQ& alpha,
                                           const SearchConfig& config = {});

}  // namespace ti

#endif
