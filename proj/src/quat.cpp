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

#include "ti/quat.hpp"

namespace ti {

QuaternionElement multiply(const QuaternionElement& u, const QuaternionElement& v,
                           const QuaternionAlgebra& alg) {
    const Rat &a = alg.a, &b = alg.b;
    return QuaternionElement{
        u.w * v.w + a * u.x * v.x + b * u.y * v.y - a * b * u.z * v.z,
        u.w * v.x + u.x * v.w - b * u.y * v.z + b * u.z * v.y,
        u.w * v.y + u.y * v.w + a * u.x * v.z - a * u.z * v.x,
        u.w * v.z + u.z * v.w + u.x * v.y - u.y * v.x,
    };
}

QuaternionElement add(const QuaternionElement& u, const QuaternionElement& v) {
    return {u.w + v.w, u.x + v.x, u.y + v.y, u.z + v.z};
}

QuaternionElement scale(const Rat& c, const QuaternionElement& u) {
    return {c * u.w, c * u.x, c * u.y, c * u.z};
}

QuaternionElement conjugate(const QuaternionElement& u) {
    return {u.w, -u.x, -u.y, -u.z};
}

Rat reduced_trace(const QuaternionElement& u) { return 2 * u.w; }

Rat reduced_norm(const QuaternionElement& u, const QuaternionAlgebra& alg) {
    return u.w * u.w - alg.a * u.x * u.x - alg.b * u.y * u.y +
           alg.a * alg.b * u.z * u.z;
}

KQuaternionElement UnitaryQuaternion::multiply(const KQuaternionElement& u,
                                               const KQuaternionElement& v) const {
    // (q1 + q2 s)(r1 + r2 s) = (q1 r1 + d q2 r2) + (q1 r2 + q2 r1) s
    Rat d(K_.d());
    QuaternionElement first =
        add(ti::multiply(u.first, v.first, base_),
            scale(d, ti::multiply(u.second, v.second, base_)));
    QuaternionElement second = add(ti::multiply(u.first, v.second, base_),
                                   ti::multiply(u.second, v.first, base_));
    return {first, second};
}

KQuaternionElement UnitaryQuaternion::scalar_multiply(const KScalar& c,
                                                      const KQuaternionElement& u) const {
    Rat d(K_.d());
    return {add(scale(c.u, u.first), scale(c.v * d, u.second)),
            add(scale(c.u, u.second), scale(c.v, u.first))};
}

KQuaternionElement UnitaryQuaternion::involution(const KQuaternionElement& u) const {
    return {conjugate(u.first), scale(Rat(-1), conjugate(u.second))};
}

UnitaryQuaternion albert_descent(const QuaternionAlgebra& alg, const QuadraticField& k) {
    return UnitaryQuaternion(alg, k);
}

std::optional<Int> find_squarefree_d(int bound, ExecMode exec,
                                     const std::function<bool(const Int&)>& pred) {
    auto is_squarefree = [](int n) {
        for (int q = 2; q * q <= n; ++q)
            if (n % (q * q) == 0) return false;
        return true;
    };
    for (int h = 1; h <= bound; ++h) {
        if (!is_squarefree(h)) continue;
        std::vector<Int> shell;
        if (h != 1) shell.emplace_back(h);
        shell.emplace_back(-h);
        auto hit = first_match(shell, [&](const Int& d) { return pred(d); }, exec);
        if (hit) return shell[*hit];
    }
    return std::nullopt;
}

std::optional<Int> splitting_quadratic(const QuaternionAlgebra& alg,
                                       const SearchConfig& config) {
    BrauerClassQ cls = alg.brauer_class();
    if (cls.is_zero()) return std::nullopt;  // already split
    auto d = find_squarefree_d(config.symbol_bound, config.exec, [&](const Int& cand) {
        auto f = IntegerPolynomial::make({-cand, Int(0), Int(1)});
        return splits_over(cls, f);
    });
    if (!d) throw SearchExhausted("splitting_quadratic: height bound reached");
    return d;
}

}  // namespace ti
