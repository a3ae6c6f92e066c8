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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "ti/brauer.hpp"

using namespace ti;
using testutil::random_rational;

namespace {

IntegerPolynomial poly(std::vector<long long> coeffs) {
    std::vector<Int> c(coeffs.begin(), coeffs.end());
    return IntegerPolynomial::make(std::move(c));
}

BrauerClassQ class_q(std::vector<std::pair<Place, std::pair<long long, long long>>> inv) {
    BrauerClassQ::Map m;
    for (auto& [v, f] : inv) m.emplace(v, Fraction01::of(f.first, f.second));
    return BrauerClassQ::make(std::move(m));
}

BrauerClassK class_k(Int d,
                     std::vector<std::pair<PlaceOverK, std::pair<long long, long long>>> inv) {
    BrauerClassK::Map m;
    for (auto& [w, f] : inv) m.emplace(w, Fraction01::of(f.first, f.second));
    return BrauerClassK::make(QuadraticField(std::move(d)), std::move(m));
}

const Place p2 = Place::finite(2);
const Place p3 = Place::finite(3);
const Place p5 = Place::finite(5);
const Place p7 = Place::finite(7);
const Place inf = Place::infinite();

}  // namespace

TEST_CASE("fraction01 normalization") {
    CHECK(Fraction01::of(7, 3) == Fraction01::of(1, 3));
    CHECK(Fraction01::of(-1, 3) == Fraction01::of(2, 3));
    CHECK(Fraction01::of(4, 2).is_zero());
    CHECK((Fraction01::of(1, 2) + Fraction01::of(1, 2)).is_zero());
    CHECK(Fraction01::of(1, 3).times(3).is_zero());
    CHECK(-Fraction01::of(1, 3) == Fraction01::of(2, 3));
}

TEST_CASE("quaternion classes") {
    CHECK(quaternion_class(1, 1).is_zero());
    CHECK(quaternion_class(-1, -1) == class_q({{p2, {1, 2}}, {inf, {1, 2}}}));
    CHECK(quaternion_class(-1, 3) == class_q({{p2, {1, 2}}, {p3, {1, 2}}}));
    CHECK(quaternion_class(-1, -3) == class_q({{p3, {1, 2}}, {inf, {1, 2}}}));
    CHECK_THROWS_AS(quaternion_class(0, 1), ZeroArgument);
    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        auto cls = quaternion_class(random_rational(rng, 30), random_rational(rng, 30));
        CHECK(cls.coherent());
    }
}

TEST_CASE("tensor, opposite, schur index") {
    auto alpha = class_q({{p2, {1, 2}}, {inf, {1, 2}}});
    auto beta = class_q({{p2, {1, 2}}, {p3, {1, 2}}});
    CHECK(tensor(BrauerClassQ(), alpha) == alpha);
    CHECK(tensor(alpha, beta) == class_q({{p3, {1, 2}}, {inf, {1, 2}}}));
    CHECK(tensor(alpha, opposite(alpha)).is_zero());
    CHECK(schur_index(BrauerClassQ()) == 1);
    CHECK(schur_index(alpha) == 2);
    auto gamma = class_k(-1, {{{p5, 1}, {1, 3}}, {{p5, 2}, {2, 3}}});
    CHECK(schur_index(gamma) == 3);
    CHECK(tensor(gamma, opposite(gamma)).is_zero());
    CHECK_THROWS_AS(tensor(gamma, class_k(5, {})), BaseMismatch);
}

TEST_CASE("class construction constraints") {
    CHECK_THROWS_AS(class_q({{inf, {1, 3}}}), InvalidInput);
    // slot 2 requires a split place: 7 is inert in Q(i)
    CHECK_THROWS_AS(class_k(-1, {{{p7, 2}, {1, 2}}}), InvalidInput);
    // complex place carries no invariant
    CHECK_THROWS_AS(class_k(-1, {{{inf, 1}, {1, 2}}}), InvalidInput);
    // real place of a real field may carry 1/2
    CHECK(class_k(5, {{{inf, 1}, {1, 2}}, {{inf, 2}, {1, 2}}}).coherent());
}

TEST_CASE("restriction to a quadratic field") {
    auto alpha = class_q({{p2, {1, 2}}, {inf, {1, 2}}});
    CHECK(restrict_to_quadratic(BrauerClassQ(), QuadraticField(-1)).is_zero());
    // 2 ramified and infinity complex in Q(i): doubling kills both halves
    CHECK(restrict_to_quadratic(alpha, QuadraticField(-1)).is_zero());
    // 5 splits in Q(i): the invariant is copied to both places
    auto beta = class_q({{p5, {1, 2}}, {inf, {1, 2}}});
    CHECK(restrict_to_quadratic(beta, QuadraticField(-1)) ==
          class_k(-1, {{{p5, 1}, {1, 2}}, {{p5, 2}, {1, 2}}}));
}

TEST_CASE("corestriction and involution existence") {
    CHECK(corestrict(class_k(-1, {})).is_zero());
    CHECK(corestrict(class_k(-1, {{{p5, 1}, {1, 3}}, {{p5, 2}, {2, 3}}})).is_zero());
    CHECK(corestrict(class_k(-1, {{{p5, 1}, {1, 3}}, {{p5, 2}, {1, 3}}})) ==
          class_q({{p5, {2, 3}}}));
    CHECK(admits_unitary_involution(class_k(-1, {})));
    CHECK(admits_unitary_involution(class_k(-1, {{{p5, 1}, {1, 3}}, {{p5, 2}, {2, 3}}})));
    CHECK_FALSE(admits_unitary_involution(class_k(-1, {{{p7, 1}, {1, 2}}})));
    // cores o restrict doubles the invariants
    std::mt19937 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        auto alpha =
            quaternion_class(random_rational(rng, 20), random_rational(rng, 20));
        for (long long d : {-1, 5, -6}) {
            QuadraticField k{Int(d)};
            CHECK(corestrict(restrict_to_quadratic(alpha, k)) == tensor(alpha, alpha));
        }
    }
}

TEST_CASE("splitting over a number field") {
    CHECK(splits_over(BrauerClassQ(), poly({0, 1})));
    CHECK(splits_over(quaternion_class(-1, -3), poly({1, 0, 1})));
    CHECK_FALSE(splits_over(quaternion_class(-1, -1), poly({0, 1})));
    CHECK(splits_over(quaternion_class(-1, -1), poly({1, 0, 1})));
    // degree-1 field splits only the zero class
    std::mt19937 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        auto alpha =
            quaternion_class(random_rational(rng, 20), random_rational(rng, 20));
        CHECK(splits_over(alpha, poly({0, 1})) == alpha.is_zero());
    }
    // the symbol's own quadratic subfield splits it
    for (long long a : {-1, 2, -2, 3, 5, -6}) {
        for (long long b : {-1, 2, 3, -5, 7}) {
            Int sf = squarefree_part(Rat(a));
            if (sf == 1) continue;
            auto f = IntegerPolynomial::make({-sf, Int(0), Int(1)});
            CHECK(splits_over(quaternion_class(a, b), f));
        }
    }
}

TEST_CASE("splitting of K-classes over the compositum") {
    auto d35 = class_k(-1, {{{p5, 1}, {1, 3}}, {{p5, 2}, {2, 3}}});
    CHECK(splits_over(d35, poly({-1, 1, 0, 1})));       // res. degree 3 at 5
    CHECK_FALSE(splits_over(d35, poly({0, 1})));        // Q does not split it
    CHECK_FALSE(splits_over(d35, poly({-1, -1, 0, 1})));  // x^3-x-1 has degree {1,2} at 5
    // real invariants die over totally imaginary fields only
    auto real_half = class_k(5, {{{inf, 1}, {1, 2}}, {{inf, 2}, {1, 2}}});
    CHECK(splits_over(real_half, poly({1, 0, 1})));
    CHECK_FALSE(splits_over(real_half, poly({-2, 0, 1})));
}

TEST_CASE("compositum local degrees") {
    QuadraticField gauss(-1);
    // 5 splits in Q(i): degrees of F pass through
    CHECK(compositum_local_degrees(poly({-1, 1, 0, 1}), 5, gauss) ==
          std::vector<int>{3});
    // 3 inert in Q(i): even F-degrees halve and double up
    CHECK(compositum_local_degrees(poly({1, 0, 1}), 3, gauss) ==
          std::vector<int>{1, 1});
    CHECK(compositum_local_degrees(poly({-1, -1, 0, 1}), 2, gauss) ==
          std::vector<int>{3});
    // two ramified quadratics giving the same local field: degree 1 twice
    CHECK(compositum_local_degrees(poly({1, 0, 1}), 2, gauss) ==
          std::vector<int>{1, 1});
    CHECK(compositum_local_degrees(poly({-2, 0, 1}), 2, gauss) ==
          std::vector<int>{2});
}

TEST_CASE("find_quaternion_symbol") {
    CHECK(find_quaternion_symbol(BrauerClassQ()) == std::pair<Int, Int>{1, 1});
    CHECK(find_quaternion_symbol(class_q({{p2, {1, 2}}, {inf, {1, 2}}})) ==
          std::pair<Int, Int>{-1, -1});
    CHECK(find_quaternion_symbol(class_q({{p3, {1, 2}}, {inf, {1, 2}}})) ==
          std::pair<Int, Int>{-1, -3});
    CHECK_THROWS_AS(find_quaternion_symbol(class_q({{p5, {1, 3}}, {p7, {2, 3}}})),
                    InvalidInput);
    // round trip on random symbol classes
    std::mt19937 rng(19);
    for (int trial = 0; trial < 25; ++trial) {
        auto alpha =
            quaternion_class(random_rational(rng, 10), random_rational(rng, 10));
        auto [a, b] = find_quaternion_symbol(alpha);
        CHECK(quaternion_class(Rat(a), Rat(b)) == alpha);
    }
    // serial and parallel modes return the same symbol
    SearchConfig serial;
    serial.exec = ExecMode::serial;
    auto alpha = quaternion_class(3, 10);
    CHECK(find_quaternion_symbol(alpha, serial) == find_quaternion_symbol(alpha));
}
