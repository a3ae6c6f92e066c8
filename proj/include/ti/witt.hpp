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

#ifndef TI_WITT_HPP
#define TI_WITT_HPP

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "ti/places.hpp"

namespace ti {

/// Diagonal quadratic form <a_1, ..., a_n> over Q, entries nonzero.
class QuadraticForm {
public:
    QuadraticForm() = default;
    static QuadraticForm make(std::vector<Rat> entries);

    const std::vector<Rat>& entries() const { return e_; }
    int dim() const { return static_cast<int>(e_.size()); }

    QuadraticForm scaled(const Rat& c) const;
    QuadraticForm orthogonal_sum(const QuadraticForm& o) const;
    QuadraticForm negated() const;

    friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;

private:
    std::vector<Rat> e_;
};

/// Complete isometry invariants over Q: dimension, discriminant mod
/// squares (plain determinant convention, signed squarefree integer),
/// the set of places with Hasse symbol -1, and the real signature.
struct WittInvariants {
    int dim = 0;
    Int disc = 1;
    std::set<Place> hasse_minus;
    int signature = 0;

    friend bool operator==(const WittInvariants&, const WittInvariants&) = default;
};

/// Diagonalize a symmetric nondegenerate Gram matrix by symmetric
/// Gaussian elimination; throws Degenerate on determinant 0.
QuadraticForm diagonalize(const std::vector<std::vector<Rat>>& gram);

WittInvariants invariants(const QuadraticForm& q);

bool isometric(const QuadraticForm& a, const QuadraticForm& b);

/// Equality in the Witt ring, decided by hyperbolic padding plus the
/// classification invariants.
bool witt_equivalent(const QuadraticForm& a, const QuadraticForm& b);

bool witt_trivial(const QuadraticForm& q);

/// True iff q represents 0 nontrivially over Q (Hasse-Minkowski, checked
/// place by place over the support).
bool is_isotropic(const QuadraticForm& q);

/// Diagonal hermitian form over (K, conjugation); diagonal entries lie
/// in Q^x.
class HermitianForm {
public:
    static HermitianForm make(QuadraticField k, std::vector<Rat> entries);

    const QuadraticField& field() const { return K_; }
    const std::vector<Rat>& entries() const { return e_; }
    int rank() const { return static_cast<int>(e_.size()); }

    HermitianForm scaled(const Rat& c) const;

    friend bool operator==(const HermitianForm&, const HermitianForm&) = default;

private:
    HermitianForm(QuadraticField k, std::vector<Rat> e)
        : K_(std::move(k)), e_(std::move(e)) {}
    QuadraticField K_;
    std::vector<Rat> e_;
};

/// Trace form of <a_1,...,a_n> over (Q(sqrt d), bar): the 2n-dimensional
/// quadratic form <a_1, -a_1 d, ..., a_n, -a_n d>. Hermitian isometry is
/// detected by isometry of trace forms.
QuadraticForm trace_form(const HermitianForm& h);

/// Witness nu in Q^x with nu h' isometric to h, or nullopt. The search
/// runs over signed squarefree products of 2 and the primes dividing the
/// entries and d.
std::optional<Rat> hermitian_similar(const HermitianForm& h, const HermitianForm& hp);

/// L = Q[x]/(f) with the functional s(1) = 1, s(lambda^i) = 0, plus an
/// optional one-step odd-degree tower L_1 = L(mu) with its own functional;
/// tower steps deeper than one are not supported. Tower fieldness is
/// certified at construction (coprime degrees, or distinct local splitting
/// patterns for equal prime degrees).
class SimpleExtension {
public:
    static SimpleExtension make(IntegerPolynomial f,
                                std::vector<IntegerPolynomial> tower = {});

    const IntegerPolynomial& base() const { return f_; }
    const std::vector<IntegerPolynomial>& tower() const { return tower_; }
    int base_degree() const { return f_.degree(); }
    int total_degree() const;

private:
    SimpleExtension(IntegerPolynomial f, std::vector<IntegerPolynomial> t)
        : f_(std::move(f)), tower_(std::move(t)) {}
    IntegerPolynomial f_;
    std::vector<IntegerPolynomial> tower_;
};

/// Element of L (or of the one-step tower L_1) as coefficients over the
/// monomial basis lambda^j mu^l, index l * deg(f) + j, constant first.
/// Trailing zeros may be omitted.
using FieldElement = std::vector<Rat>;

FieldElement field_one();
/// lambda^j mu^l as a FieldElement.
FieldElement field_monomial(const SimpleExtension& ext, int j, int l = 0);
FieldElement field_add(const SimpleExtension& ext, const FieldElement& a,
                       const FieldElement& b);
FieldElement field_multiply(const SimpleExtension& ext, const FieldElement& a,
                            const FieldElement& b);
bool field_is_zero(const FieldElement& a);

/// Field norm down to Q (determinant of the multiplication matrix,
/// computed stepwise through the tower).
Rat field_norm(const SimpleExtension& ext, const FieldElement& a);

/// Scharlau transfer of the diagonal form with the given invertible
/// entries, with respect to the coordinate functionals s(1)=1,
/// s(lambda^i)=0 (composed stepwise through the tower). Returns the
/// diagonalized transferred form over Q.
QuadraticForm transfer(const SimpleExtension& ext,
                       const std::vector<FieldElement>& entries);

/// (s_*(r^*(q)) ~ q, s_*(scalar r^*(q)) ~ N(scalar) q) in the Witt ring.
std::pair<bool, bool> projection_formula_check(const SimpleExtension& ext,
                                               const QuadraticForm& q,
                                               const FieldElement& scalar);

/// Odd-degree descent for split hermitian forms: if h (x) L and
/// scalar (h' (x) L) agree in the Witt sense over L (tested through
/// transfers against all basis functionals), returns nu = N(scalar) with
/// h isometric to nu h' verified over Q; otherwise nullopt.
std::optional<Rat> odd_degree_descent(const HermitianForm& h, const HermitianForm& hp,
                                      const SimpleExtension& ext,
                                      const FieldElement& scalar);

}  // namespace ti

#endif
