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

#ifndef TI_PLACES_HPP
#define TI_PLACES_HPP

#include <compare>
#include <string>
#include <vector>

#include "ti/errors.hpp"
#include "ti/numeric.hpp"

namespace ti {

/// A place of Q: the real place or a finite prime.
class Place {
public:
    static Place infinite() { return Place(true, 0); }
    static Place finite(Int p);

    bool is_infinite() const { return infinite_; }
    const Int& prime() const { return p_; }

    std::string str() const;

    friend bool operator==(const Place& a, const Place& b) = default;
    friend std::strong_ordering operator<=>(const Place& a, const Place& b) {
        // finite places in prime order, the real place last
        if (a.infinite_ != b.infinite_)
            return a.infinite_ ? std::strong_ordering::greater
                               : std::strong_ordering::less;
        if (a.p_ < b.p_) return std::strong_ordering::less;
        if (a.p_ > b.p_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    Place(bool inf, Int p) : infinite_(inf), p_(std::move(p)) {}
    bool infinite_;
    Int p_;
};

/// Hilbert symbol (a,b)_v over the completion of Q at v: +1 or -1.
int hilbert_symbol(const Rat& a, const Rat& b, const Place& v);

/// K = Q(sqrt(d)) for squarefree d not in {0,1}, with its nontrivial
/// Galois conjugation understood.
class QuadraticField {
public:
    enum class Splitting { split, inert, ramified };

    explicit QuadraticField(Int d);

    const Int& d() const { return d_; }
    bool is_real() const { return d_ > 0; }

    /// Decomposition of a place of Q in K. The complex place of an
    /// imaginary field is reported as ramified.
    Splitting splitting_at(const Place& v) const;

    /// [K_w : Q_v] for any place w over v.
    int local_degree_at(const Place& v) const {
        return splitting_at(v) == Splitting::split ? 1 : 2;
    }

    friend bool operator==(const QuadraticField&, const QuadraticField&) = default;

private:
    Int d_;
};

/// Monic integer polynomial, irreducible over Q; irreducibility is
/// certified at construction and construction throws otherwise.
class IntegerPolynomial {
public:
    /// coeffs constant-first, leading coefficient 1.
    static IntegerPolynomial make(std::vector<Int> coeffs);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Int>& coeffs() const { return c_; }
    const Int& coeff(int i) const { return c_[static_cast<size_t>(i)]; }

    Int discriminant() const;
    std::string str() const;

    friend bool operator==(const IntegerPolynomial&, const IntegerPolynomial&) = default;

private:
    explicit IntegerPolynomial(std::vector<Int> c) : c_(std::move(c)) {}
    std::vector<Int> c_;
};

/// Residue degrees of the places above p in Q[x]/(f), i.e. the degrees of
/// the irreducible factors of f mod p (sorted ascending). Requires p
/// unramified (p not dividing disc f), except for quadratic f where the
/// ramified case is resolved through the discriminant.
std::vector<int> local_degrees(const IntegerPolynomial& f, const Int& p);

/// Local degrees [F_w : Q_p] of the places above p. Agrees with
/// local_degrees when p is unramified; for ramified quadratic f the single
/// place has local degree 2.
std::vector<int> local_degrees_full(const IntegerPolynomial& f, const Int& p);

/// Number of real roots of f, by Sturm's theorem.
int real_root_count(const IntegerPolynomial& f);

/// True iff p divides disc(f).
bool ramified_at(const IntegerPolynomial& f, const Int& p);

namespace detail {
/// Degrees of the irreducible factors of a squarefree monic polynomial
/// mod p (distinct-degree factorization), sorted ascending.
std::vector<int> factor_degrees_mod_p(const std::vector<Int>& coeffs, const Int& p);
}  // namespace detail

}  // namespace ti

#endif
