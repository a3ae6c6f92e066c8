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

#include "ti/brauer.hpp"

#include <algorithm>

namespace ti {

namespace {

bool is_squarefree(const Int& n) {
    if (n == 0) return false;
    for (const auto& [p, e] : factor(n))
        if (e > 1) return false;
    return true;
}

bool half_or_zero(const Fraction01& f) {
    return f.is_zero() || (f.numerator() == 1 && f.denominator() == 2);
}

bool kills(int degree, const Fraction01& inv) {
    return inv.numerator() * degree % inv.denominator() == 0;
}

}  // namespace

// ---- Fraction01 ----

Fraction01 Fraction01::of(const Rat& r) {
    Rat v = r - Rat(num(r) / den(r));  // truncate toward zero, then normalize
    if (v < 0) v += 1;
    Fraction01 out;
    out.n_ = num(v);
    out.d_ = den(v);
    return out;
}

// ---- class construction ----

BrauerClassQ BrauerClassQ::make(Map inv) {
    for (auto it = inv.begin(); it != inv.end();) {
        if (it->second.is_zero()) {
            it = inv.erase(it);
            continue;
        }
        if (it->first.is_infinite() && !half_or_zero(it->second))
            throw InvalidInput("BrauerClassQ: real invariant must be 0 or 1/2");
        ++it;
    }
    return BrauerClassQ(std::move(inv));
}

bool BrauerClassQ::coherent() const {
    Fraction01 sum;
    for (const auto& [v, f] : inv_) sum = sum + f;
    return sum.is_zero();
}

BrauerClassK BrauerClassK::make(QuadraticField k, Map inv) {
    for (auto it = inv.begin(); it != inv.end();) {
        const auto& [w, f] = *it;
        if (f.is_zero()) {
            it = inv.erase(it);
            continue;
        }
        if (w.slot != 1 && w.slot != 2)
            throw InvalidInput("BrauerClassK: slot must be 1 or 2");
        bool split = k.splitting_at(w.base) == QuadraticField::Splitting::split;
        if (w.slot == 2 && !split)
            throw InvalidInput("BrauerClassK: slot 2 at a non-split place");
        if (w.base.is_infinite()) {
            if (!k.is_real())
                throw InvalidInput("BrauerClassK: complex place invariant must vanish");
            if (!half_or_zero(f))
                throw InvalidInput("BrauerClassK: real invariant must be 0 or 1/2");
        }
        ++it;
    }
    BrauerClassK out(std::move(k));
    out.inv_ = std::move(inv);
    return out;
}

bool BrauerClassK::coherent() const {
    Fraction01 sum;
    for (const auto& [w, f] : inv_) sum = sum + f;
    return sum.is_zero();
}

// ---- operations ----

BrauerClassQ quaternion_class(const Rat& a, const Rat& b) {
    if (a == 0 || b == 0) throw ZeroArgument("quaternion_class: zero argument");
    std::vector<Place> support{Place::infinite(), Place::finite(2)};
    for (const Int& p : support_primes({a, b}))
        if (p != 2) support.push_back(Place::finite(p));
    BrauerClassQ::Map inv;
    for (const Place& v : support)
        if (hilbert_symbol(a, b, v) == -1) inv.emplace(v, Fraction01::of(1, 2));
    return BrauerClassQ::make(std::move(inv));
}

BrauerClassQ tensor(const BrauerClassQ& alpha, const BrauerClassQ& beta) {
    BrauerClassQ::Map inv = alpha.invariants();
    for (const auto& [v, f] : beta.invariants()) {
        auto [it, inserted] = inv.emplace(v, f);
        if (!inserted) it->second = it->second + f;
    }
    return BrauerClassQ::make(std::move(inv));
}

BrauerClassK tensor(const BrauerClassK& alpha, const BrauerClassK& beta) {
    if (alpha.field() != beta.field())
        throw BaseMismatch("tensor: classes over different quadratic fields");
    BrauerClassK::Map inv = alpha.invariants();
    for (const auto& [w, f] : beta.invariants()) {
        auto [it, inserted] = inv.emplace(w, f);
        if (!inserted) it->second = it->second + f;
    }
    return BrauerClassK::make(alpha.field(), std::move(inv));
}

BrauerClassQ opposite(const BrauerClassQ& alpha) {
    BrauerClassQ::Map inv;
    for (const auto& [v, f] : alpha.invariants()) inv.emplace(v, -f);
    return BrauerClassQ::make(std::move(inv));
}

BrauerClassK opposite(const BrauerClassK& alpha) {
    BrauerClassK::Map inv;
    for (const auto& [w, f] : alpha.invariants()) inv.emplace(w, -f);
    return BrauerClassK::make(alpha.field(), std::move(inv));
}

Int schur_index(const BrauerClassQ& alpha) {
    Int l = 1;
    for (const auto& [v, f] : alpha.invariants()) l = lcm(l, f.denominator());
    return l;
}

Int schur_index(const BrauerClassK& alpha) {
    Int l = 1;
    for (const auto& [w, f] : alpha.invariants()) l = lcm(l, f.denominator());
    return l;
}

BrauerClassK restrict_to_quadratic(const BrauerClassQ& alpha, const QuadraticField& k) {
    BrauerClassK::Map inv;
    for (const auto& [v, f] : alpha.invariants()) {
        if (k.splitting_at(v) == QuadraticField::Splitting::split) {
            inv.emplace(PlaceOverK{v, 1}, f);
            inv.emplace(PlaceOverK{v, 2}, f);
        } else {
            inv.emplace(PlaceOverK{v, 1}, f.times(2));
        }
    }
    return BrauerClassK::make(k, std::move(inv));
}

BrauerClassQ corestrict(const BrauerClassK& beta) {
    BrauerClassQ::Map inv;
    for (const auto& [w, f] : beta.invariants()) {
        auto [it, inserted] = inv.emplace(w.base, f);
        if (!inserted) it->second = it->second + f;
    }
    return BrauerClassQ::make(std::move(inv));
}

bool admits_unitary_involution(const BrauerClassK& beta) {
    return corestrict(beta).is_zero();
}

bool splits_over(const BrauerClassQ& alpha, const IntegerPolynomial& f) {
    for (const auto& [v, inv] : alpha.invariants()) {
        if (v.is_infinite()) {
            if (real_root_count(f) > 0) return false;
            continue;  // all archimedean places of F complex: degree 2 kills 1/2
        }
        for (int d : local_degrees_full(f, v.prime()))
            if (!kills(d, inv)) return false;
    }
    return true;
}

std::vector<int> compositum_local_degrees(const IntegerPolynomial& f, const Int& p,
                                          const QuadraticField& k) {
    auto ks = k.splitting_at(Place::finite(p));
    if (f.degree() == 2) {
        Int disc = f.coeff(1) * f.coeff(1) - 4 * f.coeff(0);
        QuadraticField fq(squarefree_part(Rat(disc)));
        auto fs = fq.splitting_at(Place::finite(p));
        using S = QuadraticField::Splitting;
        if (fs == S::split) return {1, 1};
        if (ks == S::split) return {2};
        if (fs == S::inert)
            return ks == S::inert ? std::vector<int>{1, 1} : std::vector<int>{2};
        // f ramified at p
        if (ks == S::inert) return {2};
        // both quadratics ramified: same local field iff d_F d_K is a p-adic square
        return is_local_square(Rat(fq.d() * k.d()), p) ? std::vector<int>{1, 1}
                                                       : std::vector<int>{2};
    }
    std::vector<int> degs = local_degrees(f, p);  // throws RamifiedPrime if needed
    if (k.splitting_at(Place::finite(p)) == QuadraticField::Splitting::inert) {
        std::vector<int> out;
        for (int d : degs) {
            if (d % 2 == 0) {
                out.push_back(d / 2);
                out.push_back(d / 2);
            } else {
                out.push_back(d);
            }
        }
        return out;
    }
    return degs;  // split: F-degrees pass through; ramified: linearly disjoint
}

bool splits_over(const BrauerClassK& beta, const IntegerPolynomial& f) {
    const QuadraticField& k = beta.field();
    for (const auto& [w, inv] : beta.invariants()) {
        if (w.base.is_infinite()) {
            // only real places carry nonzero invariants
            if (real_root_count(f) > 0) return false;
            continue;
        }
        for (int d : compositum_local_degrees(f, w.base.prime(), k))
            if (!kills(d, inv)) return false;
    }
    return true;
}

std::pair<Int, Int> find_quaternion_symbol(const BrauerClassQ& alpha,
                                           const SearchConfig& config) {
    for (const auto& [v, f] : alpha.invariants())
        if (f.denominator() > 2)
            throw InvalidInput("find_quaternion_symbol: exponent must divide 2");
    for (int h = 1; h <= config.symbol_bound; ++h) {
        std::vector<std::pair<Int, Int>> shell;
        for (int aa = 1; aa <= h; ++aa) {
            if (!is_squarefree(aa)) continue;
            for (int bb = 1; bb <= h; ++bb) {
                if (std::max(aa, bb) != h || !is_squarefree(bb)) continue;
                shell.emplace_back(aa, bb);
                shell.emplace_back(aa, -bb);
                shell.emplace_back(-aa, bb);
                shell.emplace_back(-aa, -bb);
            }
        }
        auto hit = first_match(
            shell,
            [&](const std::pair<Int, Int>& c) {
                return quaternion_class(Rat(c.first), Rat(c.second)) == alpha;
            },
            config.exec);
        if (hit) return shell[*hit];
    }
    throw SearchExhausted("find_quaternion_symbol: height bound reached");
}

}  // namespace ti
