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

#include "ti/witt.hpp"

#include <algorithm>

namespace ti {

namespace {

// ---------------------------------------------------------------------------
// Field abstraction: transfer Gram assembly and symmetric diagonalization run
// both over Q and over the intermediate field L_0 = Q[x]/(f) of a tower.
// ---------------------------------------------------------------------------

struct RatOps {
    using T = Rat;
    T zero() const { return 0; }
    T one() const { return 1; }
    T add(const T& a, const T& b) const { return a + b; }
    T sub(const T& a, const T& b) const { return a - b; }
    T mul(const T& a, const T& b) const { return a * b; }
    T neg(const T& a) const { return -a; }
    T inv(const T& a) const { return Rat(1) / a; }
    bool is_zero(const T& a) const { return a == 0; }
};

using RPoly = std::vector<Rat>;

void rtrim(RPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

RPoly radd(const RPoly& a, const RPoly& b) {
    RPoly out(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    rtrim(out);
    return out;
}

RPoly rmul(const RPoly& a, const RPoly& b) {
    if (a.empty() || b.empty()) return {};
    RPoly out(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    rtrim(out);
    return out;
}

RPoly rrem(RPoly a, const RPoly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Rat q = a.back() / b.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
        rtrim(a);
    }
    return a;
}

// inverse of a mod m, m irreducible over Q
RPoly rinv_mod(const RPoly& a, const RPoly& m) {
    RPoly r0 = m, r1 = rrem(a, m);
    RPoly t0, t1{Rat(1)};
    while (!r1.empty()) {
        // quotient of r0 by r1
        RPoly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, Rat(0));
        RPoly rem = r0;
        while (rem.size() >= r1.size() && !rem.empty()) {
            Rat qc = rem.back() / r1.back();
            size_t shift = rem.size() - r1.size();
            q[shift] = qc;
            for (size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= qc * r1[i];
            rtrim(rem);
        }
        rtrim(q);
        RPoly t2 = radd(t0, rmul(RPoly{Rat(-1)}, rmul(q, t1)));
        r0 = std::move(r1);
        r1 = std::move(rem);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.size() != 1)
        throw NonInvertibleEntry("element not invertible modulo the extension");
    Rat lead_inv = Rat(1) / r0[0];
    RPoly out = rrem(t0, m);
    for (Rat& c : out) c *= lead_inv;
    rtrim(out);
    return out;
}

/// Elements of Q[x]/(f) as reduced rational coefficient vectors.
struct NFOps {
    RPoly f;  // monic, irreducible
    using T = RPoly;
    T zero() const { return {}; }
    T one() const { return {Rat(1)}; }
    T add(const T& a, const T& b) const { return radd(a, b); }
    T sub(const T& a, const T& b) const { return radd(a, neg(b)); }
    T mul(const T& a, const T& b) const { return rrem(rmul(a, b), f); }
    T neg(const T& a) const {
        T out = a;
        for (Rat& c : out) c = -c;
        return out;
    }
    T inv(const T& a) const { return rinv_mod(a, f); }
    bool is_zero(const T& a) const {
        for (const Rat& c : a)
            if (c != 0) return false;
        return true;
    }
};

template <class Ops>
using Mat = std::vector<std::vector<typename Ops::T>>;

/// Symmetric Gaussian elimination; returns the diagonal (zeros included
/// when the input is degenerate).
template <class Ops>
std::vector<typename Ops::T> diagonalize_sym(const Ops& F, Mat<Ops> m) {
    const size_t n = m.size();
    std::vector<typename Ops::T> diag;
    for (size_t i = 0; i < n; ++i) {
        if (F.is_zero(m[i][i])) {
            size_t j = i + 1;
            for (; j < n; ++j)
                if (!F.is_zero(m[j][j])) break;
            if (j < n) {
                std::swap(m[i], m[j]);
                for (auto& row : m) std::swap(row[i], row[j]);
            } else {
                for (j = i + 1; j < n; ++j)
                    if (!F.is_zero(m[i][j])) break;
                if (j < n) {
                    // add row/column j to i; the diagonal entry becomes 2 m_ij
                    for (size_t k = 0; k < n; ++k) m[i][k] = F.add(m[i][k], m[j][k]);
                    for (size_t k = 0; k < n; ++k) m[k][i] = F.add(m[k][i], m[k][j]);
                }
            }
        }
        if (F.is_zero(m[i][i])) {
            diag.push_back(F.zero());
            continue;
        }
        auto pivot_inv = F.inv(m[i][i]);
        for (size_t r = i + 1; r < n; ++r) {
            if (F.is_zero(m[r][i])) continue;
            auto fac = F.mul(m[r][i], pivot_inv);
            for (size_t k = i; k < n; ++k)
                m[r][k] = F.sub(m[r][k], F.mul(fac, m[i][k]));
            for (size_t k = i; k < n; ++k)
                m[k][r] = F.sub(m[k][r], F.mul(fac, m[k][i]));
        }
        diag.push_back(m[i][i]);
    }
    return diag;
}

template <class Ops>
typename Ops::T determinant(const Ops& F, Mat<Ops> m) {
    const size_t n = m.size();
    auto det = F.one();
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && F.is_zero(m[pivot][col])) ++pivot;
        if (pivot == n) return F.zero();
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = F.neg(det);
        }
        det = F.mul(det, m[col][col]);
        auto inv = F.inv(m[col][col]);
        for (size_t r = col + 1; r < n; ++r) {
            if (F.is_zero(m[r][col])) continue;
            auto fac = F.mul(m[r][col], inv);
            for (size_t k = col; k < n; ++k)
                m[r][k] = F.sub(m[r][k], F.mul(fac, m[col][k]));
        }
    }
    return det;
}

// polynomials over Ops::T, used for the top step modulus of a tower
template <class Ops>
using PolyT = std::vector<typename Ops::T>;

template <class Ops>
void pt_trim(const Ops& F, PolyT<Ops>& a) {
    while (!a.empty() && F.is_zero(a.back())) a.pop_back();
}

template <class Ops>
PolyT<Ops> pt_mul(const Ops& F, const PolyT<Ops>& a, const PolyT<Ops>& b) {
    if (a.empty() || b.empty()) return {};
    PolyT<Ops> out(a.size() + b.size() - 1, F.zero());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
    pt_trim(F, out);
    return out;
}

// remainder by a monic modulus
template <class Ops>
PolyT<Ops> pt_rem(const Ops& F, PolyT<Ops> a, const PolyT<Ops>& g) {
    while (a.size() >= g.size() && !a.empty()) {
        auto q = a.back();
        size_t shift = a.size() - g.size();
        for (size_t i = 0; i < g.size(); ++i)
            a[shift + i] = F.sub(a[shift + i], F.mul(q, g[i]));
        pt_trim(F, a);
    }
    return a;
}

/// One Scharlau-transfer step from F[y]/(g) down to F with the functional
/// s(1)=1, s(y^i)=0: Gram blocks s(mu y^{j+k}), then diagonalization over F.
template <class Ops>
std::vector<typename Ops::T> transfer_step(const Ops& F, const PolyT<Ops>& g,
                                           const std::vector<PolyT<Ops>>& entries) {
    const int n = static_cast<int>(g.size()) - 1;
    // powers y^t mod g for t <= 2n-2
    std::vector<PolyT<Ops>> pow(static_cast<size_t>(std::max(2 * n - 1, 1)));
    pow[0] = {F.one()};
    PolyT<Ops> y{F.zero(), F.one()};
    for (size_t t = 1; t < pow.size(); ++t)
        pow[t] = pt_rem(F, pt_mul(F, pow[t - 1], y), g);
    const size_t total = entries.size() * static_cast<size_t>(n);
    Mat<Ops> m(total, std::vector<typename Ops::T>(total, F.zero()));
    for (size_t e = 0; e < entries.size(); ++e) {
        PolyT<Ops> mu = pt_rem(F, entries[e], g);
        pt_trim(F, mu);
        if (mu.empty())
            throw NonInvertibleEntry("transfer: entry is zero in the extension");
        for (int j = 0; j < n; ++j) {
            for (int k = j; k < n; ++k) {
                PolyT<Ops> prod =
                    pt_rem(F, pt_mul(F, mu, pow[static_cast<size_t>(j + k)]), g);
                auto s = prod.empty() ? F.zero() : prod[0];
                size_t row = e * n + static_cast<size_t>(j);
                size_t col = e * n + static_cast<size_t>(k);
                m[row][col] = s;
                m[col][row] = s;
            }
        }
    }
    auto diag = diagonalize_sym(F, std::move(m));
    for (const auto& d : diag)
        if (F.is_zero(d))
            throw Degenerate("transfer: degenerate Gram block");
    return diag;
}

template <class Ops>
typename Ops::T norm_step(const Ops& F, const PolyT<Ops>& g, const PolyT<Ops>& elem) {
    const int n = static_cast<int>(g.size()) - 1;
    PolyT<Ops> cur = pt_rem(F, elem, g);
    Mat<Ops> m(static_cast<size_t>(n), std::vector<typename Ops::T>(static_cast<size_t>(n), F.zero()));
    PolyT<Ops> y{F.zero(), F.one()};
    for (int col = 0; col < n; ++col) {
        for (size_t i = 0; i < cur.size(); ++i) m[i][static_cast<size_t>(col)] = cur[i];
        if (col + 1 < n) cur = pt_rem(F, pt_mul(F, cur, y), g);
    }
    return determinant(F, std::move(m));
}

RPoly to_rpoly(const std::vector<Int>& coeffs) {
    return RPoly(coeffs.begin(), coeffs.end());
}

// split a flattened tower element into its mu-coefficients over L_0
std::vector<RPoly> split_chunks(const FieldElement& a, int n0, int n1) {
    if (static_cast<int>(a.size()) > n0 * n1)
        throw InvalidInput("field element longer than the extension degree");
    std::vector<RPoly> out(static_cast<size_t>(n1));
    for (size_t i = 0; i < a.size(); ++i)
        out[i / static_cast<size_t>(n0)].push_back(a[i]);
    for (RPoly& c : out) rtrim(c);
    while (!out.empty() && out.back().empty()) out.pop_back();
    return out;
}

FieldElement flatten_chunks(const std::vector<RPoly>& chunks, int n0) {
    FieldElement out;
    for (size_t l = 0; l < chunks.size(); ++l) {
        for (int j = 0; j < n0; ++j)
            out.push_back(j < static_cast<int>(chunks[l].size()) ? chunks[l][static_cast<size_t>(j)]
                                                                 : Rat(0));
    }
    rtrim(out);
    return out;
}

std::vector<Int> support_ints(const std::vector<Rat>& values) {
    return support_primes(values);
}

}  // namespace

// ---- QuadraticForm ----

QuadraticForm QuadraticForm::make(std::vector<Rat> entries) {
    for (const Rat& a : entries)
        if (a == 0) throw InvalidInput("QuadraticForm: zero entry");
    QuadraticForm q;
    q.e_ = std::move(entries);
    return q;
}

QuadraticForm QuadraticForm::scaled(const Rat& c) const {
    if (c == 0) throw ZeroArgument("QuadraticForm::scaled: zero scalar");
    std::vector<Rat> e = e_;
    for (Rat& a : e) a *= c;
    return make(std::move(e));
}

QuadraticForm QuadraticForm::orthogonal_sum(const QuadraticForm& o) const {
    std::vector<Rat> e = e_;
    e.insert(e.end(), o.e_.begin(), o.e_.end());
    return make(std::move(e));
}

QuadraticForm QuadraticForm::negated() const {
    std::vector<Rat> e = e_;
    for (Rat& a : e) a = -a;
    return make(std::move(e));
}

QuadraticForm diagonalize(const std::vector<std::vector<Rat>>& gram) {
    const size_t n = gram.size();
    for (const auto& row : gram)
        if (row.size() != n) throw InvalidInput("diagonalize: matrix not square");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (gram[i][j] != gram[j][i])
                throw InvalidInput("diagonalize: matrix not symmetric");
    auto diag = diagonalize_sym(RatOps{}, gram);
    std::vector<Rat> entries;
    for (const Rat& d : diag) {
        if (d == 0) throw Degenerate("diagonalize: determinant is zero");
        entries.push_back(d);
    }
    return QuadraticForm::make(std::move(entries));
}

WittInvariants invariants(const QuadraticForm& q) {
    WittInvariants out;
    out.dim = q.dim();
    Rat prod = 1;
    for (const Rat& a : q.entries()) {
        prod *= a;
        if (a > 0) ++out.signature;
        else --out.signature;
    }
    out.disc = q.dim() == 0 ? Int(1) : squarefree_part(prod);
    std::vector<Place> places{Place::infinite(), Place::finite(2)};
    for (const Int& p : support_ints(q.entries()))
        if (p != 2) places.push_back(Place::finite(p));
    for (const Place& v : places) {
        int s = 1;
        for (int i = 0; i < q.dim(); ++i)
            for (int j = i + 1; j < q.dim(); ++j)
                s *= hilbert_symbol(q.entries()[static_cast<size_t>(i)],
                                    q.entries()[static_cast<size_t>(j)], v);
        if (s == -1) out.hasse_minus.insert(v);
    }
    return out;
}

bool isometric(const QuadraticForm& a, const QuadraticForm& b) {
    return invariants(a) == invariants(b);
}

bool witt_equivalent(const QuadraticForm& a, const QuadraticForm& b) {
    if ((a.dim() - b.dim()) % 2 != 0) return false;
    std::vector<Rat> ea = a.entries(), eb = b.entries();
    while (ea.size() < eb.size()) {
        ea.push_back(1);
        ea.push_back(-1);
    }
    while (eb.size() < ea.size()) {
        eb.push_back(1);
        eb.push_back(-1);
    }
    if (ea.size() != eb.size()) return false;
    return invariants(QuadraticForm::make(ea)) == invariants(QuadraticForm::make(eb));
}

bool witt_trivial(const QuadraticForm& q) {
    return witt_equivalent(q, QuadraticForm());
}

namespace {

bool locally_isotropic(const QuadraticForm& q, const Place& v) {
    const int n = q.dim();
    if (v.is_infinite()) {
        bool pos = false, neg = false;
        for (const Rat& a : q.entries()) (a > 0 ? pos : neg) = true;
        return pos && neg;
    }
    if (n >= 5) return true;
    const Int& p = v.prime();
    Rat disc = 1;
    for (const Rat& a : q.entries()) disc *= a;
    int eps = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            eps *= hilbert_symbol(q.entries()[static_cast<size_t>(i)],
                                  q.entries()[static_cast<size_t>(j)], v);
    switch (n) {
        case 2:
            return is_local_square(-disc, p);
        case 3:
            return hilbert_symbol(Rat(-1), -disc, v) == eps;
        case 4:
            return !is_local_square(disc, p) || eps == hilbert_symbol(Rat(-1), Rat(-1), v);
        default:
            return false;  // n <= 1
    }
}

}  // namespace

bool is_isotropic(const QuadraticForm& q) {
    const int n = q.dim();
    if (n <= 1) return false;
    if (n == 2) {
        Rat prod = q.entries()[0] * q.entries()[1];
        return squarefree_part(-prod) == 1;
    }
    if (!locally_isotropic(q, Place::infinite())) return false;
    if (n >= 5) return true;
    std::vector<Place> places{Place::finite(2)};
    for (const Int& p : support_ints(q.entries()))
        if (p != 2) places.push_back(Place::finite(p));
    for (const Place& v : places)
        if (!locally_isotropic(q, v)) return false;
    return true;
}

// ---- HermitianForm ----

HermitianForm HermitianForm::make(QuadraticField k, std::vector<Rat> entries) {
    for (const Rat& a : entries)
        if (a == 0) throw InvalidInput("HermitianForm: zero entry");
    return HermitianForm(std::move(k), std::move(entries));
}

HermitianForm HermitianForm::scaled(const Rat& c) const {
    if (c == 0) throw ZeroArgument("HermitianForm::scaled: zero scalar");
    std::vector<Rat> e = e_;
    for (Rat& a : e) a *= c;
    return HermitianForm(K_, std::move(e));
}

QuadraticForm trace_form(const HermitianForm& h) {
    Rat d(h.field().d());
    std::vector<Rat> entries;
    for (const Rat& a : h.entries()) {
        entries.push_back(a);
        entries.push_back(-a * d);
    }
    return QuadraticForm::make(std::move(entries));
}

std::optional<Rat> hermitian_similar(const HermitianForm& h, const HermitianForm& hp) {
    if (h.field() != hp.field())
        throw BaseMismatch("hermitian_similar: different quadratic fields");
    if (h.rank() != hp.rank())
        throw RankMismatch("hermitian_similar: rank mismatch");
    std::vector<Rat> pool = h.entries();
    pool.insert(pool.end(), hp.entries().begin(), hp.entries().end());
    pool.emplace_back(h.field().d());
    pool.emplace_back(2);
    std::vector<Int> primes = support_ints(pool);
    // all squarefree products of the support primes, smallest first
    std::vector<Int> magnitudes{1};
    for (const Int& p : primes) {
        size_t n = magnitudes.size();
        for (size_t i = 0; i < n; ++i) magnitudes.push_back(magnitudes[i] * p);
    }
    std::sort(magnitudes.begin(), magnitudes.end());
    QuadraticForm target = trace_form(h);
    for (const Int& m : magnitudes) {
        for (int sign : {1, -1}) {
            Rat nu(sign * m);
            if (isometric(target, trace_form(hp.scaled(nu)))) return nu;
        }
    }
    return std::nullopt;
}

// ---- SimpleExtension ----

SimpleExtension SimpleExtension::make(IntegerPolynomial f,
                                      std::vector<IntegerPolynomial> tower) {
    if (f.degree() % 2 == 0)
        throw EvenDegree("SimpleExtension: base degree must be odd");
    for (const auto& g : tower)
        if (g.degree() % 2 == 0)
            throw EvenDegree("SimpleExtension: tower degree must be odd");
    if (tower.size() > 1)
        throw InvalidInput("SimpleExtension: towers deeper than one step unsupported");
    if (tower.size() == 1) {
        const IntegerPolynomial& g = tower[0];
        const int n0 = f.degree(), n1 = g.degree();
        if (gcd(Int(n0), Int(n1)) != 1) {
            // equal prime degrees: the step is a field iff the two fields are
            // not isomorphic, certified by a differing splitting pattern
            if (n0 != n1 || !is_prime(Int(n0)))
                throw InvalidInput("SimpleExtension: tower configuration not certified");
            if (f == g)
                throw InvalidPolynomial("SimpleExtension: tower step collapses");
            Int df = f.discriminant() * g.discriminant();
            bool certified = false;
            for (Int p = 2; p < 500 && !certified; ++p) {
                if (!is_prime(p) || df % p == 0) continue;
                if (local_degrees(f, p) != local_degrees(g, p)) certified = true;
            }
            if (!certified)
                throw InvalidInput("SimpleExtension: tower fieldness not certified");
        }
    }
    return SimpleExtension(std::move(f), std::move(tower));
}

int SimpleExtension::total_degree() const {
    int n = f_.degree();
    for (const auto& g : tower_) n *= g.degree();
    return n;
}

// ---- field elements ----

FieldElement field_one() { return {Rat(1)}; }

FieldElement field_monomial(const SimpleExtension& ext, int j, int l) {
    const int n0 = ext.base_degree();
    if (j < 0 || j >= n0 || l < 0 ||
        l >= (ext.tower().empty() ? 1 : ext.tower()[0].degree()))
        throw InvalidInput("field_monomial: exponent out of range");
    FieldElement out(static_cast<size_t>(l * n0 + j) + 1, Rat(0));
    out.back() = 1;
    return out;
}

bool field_is_zero(const FieldElement& a) {
    for (const Rat& c : a)
        if (c != 0) return false;
    return true;
}

FieldElement field_add(const SimpleExtension&, const FieldElement& a,
                       const FieldElement& b) {
    return radd(a, b);
}

FieldElement field_multiply(const SimpleExtension& ext, const FieldElement& a,
                            const FieldElement& b) {
    const int n0 = ext.base_degree();
    RPoly f = to_rpoly(ext.base().coeffs());
    if (ext.tower().empty()) {
        return rrem(rmul(rrem(a, f), rrem(b, f)), f);
    }
    const int n1 = ext.tower()[0].degree();
    NFOps F{f};
    PolyT<NFOps> g;
    for (const Int& c : ext.tower()[0].coeffs()) g.push_back(RPoly{Rat(c)});
    for (auto& c : g) rtrim(c);
    auto ca = split_chunks(a, n0, n1);
    auto cb = split_chunks(b, n0, n1);
    auto prod = pt_rem(F, pt_mul(F, ca, cb), g);
    return flatten_chunks(prod, n0);
}

Rat field_norm(const SimpleExtension& ext, const FieldElement& a) {
    RPoly f = to_rpoly(ext.base().coeffs());
    if (ext.tower().empty()) {
        return norm_step(RatOps{}, f, rrem(a, f));
    }
    const int n0 = ext.base_degree();
    const int n1 = ext.tower()[0].degree();
    NFOps F{f};
    PolyT<NFOps> g;
    for (const Int& c : ext.tower()[0].coeffs()) g.push_back(RPoly{Rat(c)});
    for (auto& c : g) rtrim(c);
    RPoly inner = norm_step(F, g, split_chunks(a, n0, n1));
    return norm_step(RatOps{}, f, inner);
}

QuadraticForm transfer(const SimpleExtension& ext,
                       const std::vector<FieldElement>& entries) {
    RPoly f = to_rpoly(ext.base().coeffs());
    if (ext.tower().empty()) {
        std::vector<RPoly> es;
        for (const FieldElement& e : entries) es.push_back(rrem(e, f));
        auto diag = transfer_step(RatOps{}, f, es);
        return QuadraticForm::make(std::move(diag));
    }
    const int n0 = ext.base_degree();
    const int n1 = ext.tower()[0].degree();
    NFOps F{f};
    PolyT<NFOps> g;
    for (const Int& c : ext.tower()[0].coeffs()) g.push_back(RPoly{Rat(c)});
    for (auto& c : g) rtrim(c);
    std::vector<PolyT<NFOps>> es;
    for (const FieldElement& e : entries) es.push_back(split_chunks(e, n0, n1));
    // step down to L_0, then from L_0 to Q
    std::vector<RPoly> mid = transfer_step(F, g, es);
    auto diag = transfer_step(RatOps{}, f, mid);
    return QuadraticForm::make(std::move(diag));
}

std::pair<bool, bool> projection_formula_check(const SimpleExtension& ext,
                                               const QuadraticForm& q,
                                               const FieldElement& scalar) {
    if (field_is_zero(scalar))
        throw NonInvertibleEntry("projection_formula_check: zero scalar");
    std::vector<FieldElement> constants;
    for (const Rat& a : q.entries()) constants.push_back(FieldElement{a});
    bool first = witt_equivalent(transfer(ext, constants), q);
    std::vector<FieldElement> scaled;
    for (const Rat& a : q.entries())
        scaled.push_back(field_multiply(ext, scalar, FieldElement{a}));
    Rat n = field_norm(ext, scalar);
    bool second = witt_equivalent(transfer(ext, scaled), q.scaled(n));
    return {first, second};
}

std::optional<Rat> odd_degree_descent(const HermitianForm& h, const HermitianForm& hp,
                                      const SimpleExtension& ext,
                                      const FieldElement& scalar) {
    if (h.field() != hp.field())
        throw BaseMismatch("odd_degree_descent: different quadratic fields");
    if (h.rank() != hp.rank())
        throw RankMismatch("odd_degree_descent: rank mismatch");
    if (field_is_zero(scalar))
        throw NonInvertibleEntry("odd_degree_descent: zero scalar");

    // trace forms extended to L: h's entries stay constant, h' entries are
    // multiplied by the similarity scalar
    const QuadraticForm th = trace_form(h);
    const QuadraticForm thp = trace_form(hp);
    std::vector<FieldElement> difference;
    for (const Rat& a : th.entries()) difference.push_back(FieldElement{a});
    for (const Rat& a : thp.entries())
        difference.push_back(field_multiply(ext, scalar, FieldElement{-a}));

    // premise: the difference class vanishes against every basis functional
    const int n1 = ext.tower().empty() ? 1 : ext.tower()[0].degree();
    for (int l = 0; l < n1; ++l) {
        for (int j = 0; j < ext.base_degree(); ++j) {
            FieldElement shift = field_monomial(ext, j, l);
            std::vector<FieldElement> shifted;
            for (const FieldElement& e : difference)
                shifted.push_back(field_multiply(ext, shift, e));
            if (!witt_trivial(transfer(ext, shifted))) return std::nullopt;
        }
    }
    Rat nu = field_norm(ext, scalar);
    if (isometric(trace_form(h), trace_form(hp.scaled(nu)))) return nu;
    return std::nullopt;
}

}  // namespace ti
