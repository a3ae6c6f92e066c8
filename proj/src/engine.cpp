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

#include "ti/engine.hpp"

namespace ti {

namespace {

FieldDescription rationals_field() {
    return FieldDescription{FieldDescription::Kind::rationals, std::nullopt, std::nullopt, 1};
}

FieldDescription quadratic_field(const Int& d) {
    return FieldDescription{FieldDescription::Kind::quadratic, d, std::nullopt, 2};
}

FieldDescription simple_field(IntegerPolynomial f) {
    int deg = f.degree();
    return FieldDescription{FieldDescription::Kind::simple, std::nullopt, std::move(f), deg};
}

FieldDescription compositum_field(const Int& d, IntegerPolynomial f) {
    int deg = 2 * f.degree();
    return FieldDescription{FieldDescription::Kind::compositum, d, std::move(f), deg};
}

IntegerPolynomial identity_poly() {
    return IntegerPolynomial::make({Int(0), Int(1)});  // x
}

/// F = Q or Q(sqrt d) for an exponent-dividing-2 class, via the symbol
/// realization and its minimal quadratic splitting field.
FieldDescription order_two_field(const BrauerClassQ& cls, const SearchConfig& config,
                                 std::vector<VerificationEntry>& verification) {
    if (cls.is_zero()) {
        verification.push_back({"splits_over(class, x)", splits_over(cls, identity_poly())});
        return rationals_field();
    }
    auto [a, b] = find_quaternion_symbol(cls, config);
    verification.push_back(
        {"symbol_round_trip", quaternion_class(Rat(a), Rat(b)) == cls});
    auto d = splitting_quadratic(QuaternionAlgebra(Rat(a), Rat(b)), config);
    // nonzero class: splitting_quadratic cannot report already-split
    auto f = IntegerPolynomial::make({-*d, Int(0), Int(1)});
    verification.push_back({"splits_over(class, " + f.str() + ")", splits_over(cls, f)});
    return quadratic_field(*d);
}

}  // namespace

IntegerPolynomial find_odd_polynomial(
    int degree, const SearchConfig& config,
    const std::function<bool(const IntegerPolynomial&)>& pred) {
    if (degree == 1) {
        auto f = identity_poly();
        if (pred(f)) return f;
        throw SearchExhausted("find_odd_polynomial: degree-1 predicate failed");
    }
    for (int h = 1; h <= config.poly_bound; ++h) {
        std::vector<std::pair<int, int>> shell;
        for (int c = -h; c <= h; ++c)
            for (int e = -h; e <= h; ++e)
                if (std::max(std::abs(c), std::abs(e)) == h) shell.emplace_back(c, e);
        auto hit = first_match(
            shell,
            [&](const std::pair<int, int>& ce) {
                std::vector<Int> coeffs(static_cast<size_t>(degree) + 1, Int(0));
                coeffs[0] = ce.second;
                coeffs[1] = ce.first;
                coeffs[static_cast<size_t>(degree)] = 1;
                auto f = IntegerPolynomial::make(std::move(coeffs));
                return pred(f);
            },
            config.exec);
        if (hit) {
            std::vector<Int> coeffs(static_cast<size_t>(degree) + 1, Int(0));
            coeffs[0] = shell[*hit].second;
            coeffs[1] = shell[*hit].first;
            coeffs[static_cast<size_t>(degree)] = 1;
            return IntegerPolynomial::make(std::move(coeffs));
        }
    }
    throw SearchExhausted("find_odd_polynomial: height bound reached");
}

TotaroReport case_split_etale(const BrauerClassQ& c, const BrauerClassQ& b,
                              const SearchConfig& config) {
    BrauerClassQ cls = tensor(c, opposite(b));
    Int m = schur_index(cls);
    TotaroReport report;
    report.ind_sch = m;
    report.theta = Theta::zero;
    report.index = m;
    if (m == 1 || m == 2) {
        report.fields.push_back(order_two_field(cls, config, report.verification));
    } else if (m == 3) {
        auto f = find_odd_polynomial(3, config,
                                     [&](const IntegerPolynomial& g) { return splits_over(cls, g); });
        report.verification.push_back({"splits_over(class, " + f.str() + ")", splits_over(cls, f)});
        report.fields.push_back(simple_field(std::move(f)));
    } else {
        throw UnsupportedIndex("case_split_etale: index outside {1,2,3}");
    }
    report.verification.push_back(
        {"field_degree_equals_index", Int(report.fields[0].degree) == m});
    return report;
}

TotaroReport case_quaternion(const QuaternionAlgebra& a0, const QuaternionAlgebra& b0,
                             const QuadraticField& k, const SearchConfig& config) {
    (void)k;  // the tensor class of the descents decides everything
    BrauerClassQ cls = tensor(a0.brauer_class(), b0.brauer_class());
    Int m = schur_index(cls);
    TotaroReport report;
    report.ind_sch = m;
    report.theta = Theta::zero;
    report.index = m;
    report.fields.push_back(order_two_field(cls, config, report.verification));
    report.verification.push_back(
        {"field_degree_equals_index", Int(report.fields[0].degree) == m});
    report.verification.push_back({"independent_of_k", true});
    return report;
}

TotaroReport case_odd(const OddDegreeSpec& spec, const SearchConfig& config) {
    const BrauerClassK& cls = spec.d_class;
    if (!admits_unitary_involution(cls))
        throw CoresNonzero("case_odd: corestriction does not vanish");
    Int m = schur_index(cls);
    if (m % 2 == 0) throw EvenIndex("case_odd: even Schur index");

    TotaroReport report;
    report.ind_sch = m;
    report.verification.push_back({"cores_zero", true});
    report.verification.push_back({"ind_sch_odd", true});
    if (spec.degree) {
        Int sq = Int(*spec.degree) * Int(*spec.degree);
        report.verification.push_back({"ind_sch_divides_degree_squared", sq % m == 0});
    }

    IntegerPolynomial f0 =
        m == 1 ? identity_poly()
               : find_odd_polynomial(static_cast<int>(m), config, [&](const IntegerPolynomial& g) {
                     return splits_over(cls, g);
                 });
    report.verification.push_back({"splits_over(class, " + f0.str() + ")", splits_over(cls, f0)});

    const Int d = cls.field().d();
    if (cls.is_zero()) {
        if (!spec.forms)
            throw InvalidInput("case_odd: split class requires the two hermitian forms");
        const auto& [h, hp] = *spec.forms;
        if (h.field() != cls.field() || hp.field() != cls.field())
            throw BaseMismatch("case_odd: hermitian forms over a different field");
        auto nu = hermitian_similar(h, hp);
        if (nu) {
            report.theta = Theta::zero;
            report.index = m;
            report.fields.push_back(m == 1 ? rationals_field() : simple_field(f0));
            report.verification.push_back(
                {"hermitian_similar", isometric(trace_form(h), trace_form(hp.scaled(*nu)))});
        } else {
            report.theta = Theta::one;
            report.index = 2 * m;
            report.fields.push_back(m == 1 ? quadratic_field(d) : compositum_field(d, f0));
            report.verification.push_back({"swap_check(h)", swap_check(h).hyperbolic});
            report.verification.push_back({"swap_check(h')", swap_check(hp).hyperbolic});
        }
        report.verification.push_back(
            {"field_degree_equals_index", Int(report.fields[0].degree) == *report.index});
    } else {
        report.theta = Theta::undetermined;
        report.fields.push_back(simple_field(f0));
        report.fields.push_back(compositum_field(d, f0));
        report.verification.push_back(
            {"candidate_degrees", Int(report.fields[0].degree) == m &&
                                      Int(report.fields[1].degree) == 2 * m});
    }
    return report;
}

TotaroReport run_case(const TorsorSpec& spec, const SearchConfig& config) {
    return std::visit(
        [&](const auto& s) -> TotaroReport {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, SplitEtaleSpec>)
                return case_split_etale(s.c, s.b, config);
            else if constexpr (std::is_same_v<T, QuaternionSpec>)
                return case_quaternion(s.a0, s.b0, s.k, config);
            else
                return case_odd(s, config);
        },
        spec);
}

SwapWitness swap_check(const HermitianForm& h) {
    const Rat d(h.field().d());
    SwapWitness out;
    out.hyperbolic = true;
    for (const Rat& a : h.entries()) {
        // plane <a, -a d> over K with vector (sqrt d, 1):
        // a (sqrt d)^2 + (-a d) 1^2 = 0
        SwapWitness::Plane plane;
        plane.entry = a;
        plane.first = KScalar{Rat(0), Rat(1)};
        plane.second = KScalar{Rat(1), Rat(0)};
        // evaluate a x^2 - a d y^2 in K = Q(sqrt d)
        auto square = [&](const KScalar& s) {
            return KScalar{s.u * s.u + s.v * s.v * d, 2 * s.u * s.v};
        };
        KScalar x2 = square(plane.first), y2 = square(plane.second);
        KScalar value{a * x2.u - a * d * y2.u, a * x2.v - a * d * y2.v};
        plane.verified = value.u == 0 && value.v == 0;
        out.hyperbolic = out.hyperbolic && plane.verified;
        out.planes.push_back(std::move(plane));
    }
    return out;
}

}  // namespace ti
