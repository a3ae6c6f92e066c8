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

#ifndef TI_QUAT_HPP
#define TI_QUAT_HPP

#include <functional>
#include <optional>

#include "ti/brauer.hpp"

namespace ti {

/// Quaternion symbol algebra (a,b) over Q: i^2 = a, j^2 = b, ij = -ji = k.
struct QuaternionAlgebra {
    Rat a, b;

    QuaternionAlgebra(Rat a_, Rat b_) : a(std::move(a_)), b(std::move(b_)) {
        if (a == 0 || b == 0) throw ZeroArgument("QuaternionAlgebra: zero symbol entry");
    }

    BrauerClassQ brauer_class() const { return quaternion_class(a, b); }
};

/// Element w + x i + y j + z k with rational coordinates.
struct QuaternionElement {
    Rat w, x, y, z;

    friend bool operator==(const QuaternionElement&, const QuaternionElement&) = default;
};

QuaternionElement multiply(const QuaternionElement& u, const QuaternionElement& v,
                           const QuaternionAlgebra& alg);
QuaternionElement add(const QuaternionElement& u, const QuaternionElement& v);
QuaternionElement scale(const Rat& c, const QuaternionElement& u);

/// Canonical (symplectic) involution: u -> trd(u) - u.
QuaternionElement conjugate(const QuaternionElement& u);
Rat reduced_trace(const QuaternionElement& u);
Rat reduced_norm(const QuaternionElement& u, const QuaternionAlgebra& alg);

/// Element q1 + q2 sqrt(d) of Q0 tensor K in descent form.
struct KQuaternionElement {
    QuaternionElement first, second;

    friend bool operator==(const KQuaternionElement&, const KQuaternionElement&) = default;
};

/// Scalar u + v sqrt(d) of K.
struct KScalar {
    Rat u, v;
};

/// (Q0, canonical involution) tensored with (K, conjugation): the Albert
/// descent presentation of a quaternion algebra over K with unitary
/// involution sigma = sigma0 (x) bar.
class UnitaryQuaternion {
public:
    UnitaryQuaternion(QuaternionAlgebra base, QuadraticField k)
        : base_(std::move(base)), K_(std::move(k)) {}

    const QuaternionAlgebra& base() const { return base_; }
    const QuadraticField& field() const { return K_; }

    KQuaternionElement multiply(const KQuaternionElement& u,
                                const KQuaternionElement& v) const;
    KQuaternionElement scalar_multiply(const KScalar& c, const KQuaternionElement& u) const;
    /// sigma(q1 + q2 sqrt(d)) = sigma0(q1) - sigma0(q2) sqrt(d).
    KQuaternionElement involution(const KQuaternionElement& u) const;

private:
    QuaternionAlgebra base_;
    QuadraticField K_;
};

UnitaryQuaternion albert_descent(const QuaternionAlgebra& alg, const QuadraticField& k);

/// Minimal-height squarefree d such that Q(sqrt(d)) splits the algebra;
/// nullopt when the algebra is already split.
std::optional<Int> splitting_quadratic(const QuaternionAlgebra& alg,
                                       const SearchConfig& config = {});

/// Deterministic squarefree-d search, |d| ascending, positive d first,
/// for any predicate; shared by splitting-field searches.
std::optional<Int> find_squarefree_d(int bound, ExecMode exec,
                                     const std::function<bool(const Int&)>& pred);

}  // namespace ti

#endif
