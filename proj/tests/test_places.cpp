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

#include "local_solvability.hpp"
#include "test_util.hpp"
#include "ti/places.hpp"

using namespace ti;
using testutil::random_rational;
using testutil::symbol_support;

namespace {

IntegerPolynomial poly(std::vector<long long> coeffs) {
    std::vector<Int> c(coeffs.begin(), coeffs.end());
    return IntegerPolynomial::make(std::move(c));
}

}  // namespace

TEST_CASE("place construction and ordering") {
    CHECK(Place::finite(2) < Place::finite(3));
    CHECK(Place::finite(97) < Place::infinite());
    CHECK(Place::infinite() == Place::infinite());
    CHECK_THROWS_AS(Place::finite(4), InvalidInput);
    CHECK_THROWS_AS(Place::finite(1), InvalidInput);
    CHECK_THROWS_AS(Place::finite(-3), InvalidInput);
}

TEST_CASE("hilbert symbol base cases") {
    CHECK(hilbert_symbol(1, 7, Place::infinite()) == 1);
    CHECK(hilbert_symbol(1, -30, Place::finite(2)) == 1);
    CHECK(hilbert_symbol(-1, -1, Place::infinite()) == -1);
    CHECK(hilbert_symbol(-1, -1, Place::finite(2)) == -1);
    CHECK(hilbert_symbol(-1, -1, Place::finite(5)) == 1);
    CHECK(hilbert_symbol(-1, 3, Place::finite(3)) == -1);
    CHECK(hilbert_symbol(2, 7, Place::finite(7)) == 1);
    CHECK_THROWS_AS(hilbert_symbol(0, 1, Place::finite(2)), ZeroArgument);
    CHECK_THROWS_AS(hilbert_symbol(1, 0, Place::infinite()), ZeroArgument);
}

TEST_CASE("hilbert symbol rational arguments") {
    // symbols only depend on square classes
    CHECK(hilbert_symbol(Rat(1, 4), Rat(-1), Place::finite(2)) ==
          hilbert_symbol(Rat(1), Rat(-1), Place::finite(2)));
    CHECK(hilbert_symbol(Rat(-9, 2), Rat(5, 3), Place::finite(3)) ==
          hilbert_symbol(Rat(-1, 2), Rat(15), Place::finite(3)));
}

TEST_CASE("hilbert reciprocity on random pairs") {
    std::mt19937 rng(20260825);
    for (int trial = 0; trial < 200; ++trial) {
        Rat a = random_rational(rng, 50), b = random_rational(rng, 50);
        int product = 1;
        for (const Place& v : symbol_support(a, b)) product *= hilbert_symbol(a, b, v);
        CHECK(product == 1);
    }
}

TEST_CASE("bimultiplicativity and (a,-a)") {
    std::mt19937 rng(7);
    std::vector<Place> places{Place::infinite(), Place::finite(2), Place::finite(3),
                              Place::finite(5), Place::finite(7)};
    for (int trial = 0; trial < 60; ++trial) {
        Rat a = random_rational(rng, 20), ap = random_rational(rng, 20),
            b = random_rational(rng, 20);
        for (const Place& v : places) {
            CHECK(hilbert_symbol(a * ap, b, v) ==
                  hilbert_symbol(a, b, v) * hilbert_symbol(ap, b, v));
            CHECK(hilbert_symbol(a, -a, v) == 1);
            CHECK(hilbert_symbol(a, b, v) == hilbert_symbol(b, a, v));
        }
    }
}

TEST_CASE("hilbert symbol agrees with the solvability oracle (spot checks)") {
    CHECK(oracle::solvable_finite(-1, -1, 2) == false);
    CHECK(oracle::solvable_finite(-1, -1, 5) == true);
    for (long long a : {-5, -2, 3, 10})
        for (long long b : {-7, 2, 6})
            for (long long p : {2, 3, 5, 7})
                CHECK(oracle::oracle_symbol(a, b, Place::finite(p)) ==
                      hilbert_symbol(Rat(a), Rat(b), Place::finite(p)));
}

TEST_CASE("quadratic field validation and splitting") {
    CHECK_THROWS_AS(QuadraticField(0), InvalidInput);
    CHECK_THROWS_AS(QuadraticField(1), InvalidInput);
    CHECK_THROWS_AS(QuadraticField(12), InvalidInput);
    using S = QuadraticField::Splitting;
    QuadraticField gauss(-1);
    CHECK(gauss.splitting_at(Place::finite(5)) == S::split);
    CHECK(gauss.splitting_at(Place::finite(3)) == S::inert);
    CHECK(gauss.splitting_at(Place::finite(2)) == S::ramified);
    CHECK(gauss.splitting_at(Place::infinite()) == S::ramified);  // complex
    CHECK_FALSE(gauss.is_real());
    QuadraticField five(5);
    CHECK(five.splitting_at(Place::infinite()) == S::split);
    CHECK(five.splitting_at(Place::finite(2)) == S::inert);   // 5 = 5 mod 8
    CHECK(five.splitting_at(Place::finite(11)) == S::split);  // 4^2 = 5 mod 11
    CHECK(five.splitting_at(Place::finite(5)) == S::ramified);
    QuadraticField seventeen(17);  // 1 mod 8
    CHECK(seventeen.splitting_at(Place::finite(2)) == S::split);
    QuadraticField six(6);
    CHECK(six.splitting_at(Place::finite(2)) == S::ramified);
}

TEST_CASE("polynomial construction certifies irreducibility") {
    CHECK_THROWS_AS(poly({1, 2, 1}), InvalidPolynomial);   // (x+1)^2
    CHECK_THROWS_AS(poly({-1, 0, 1}), InvalidPolynomial);  // (x-1)(x+1)
    CHECK_THROWS_AS(poly({0, 1, 1}), InvalidPolynomial);   // x(x+1)
    CHECK_THROWS_AS(poly({1, 0, 2}), InvalidPolynomial);   // not monic
    CHECK_THROWS_AS(poly({5}), InvalidPolynomial);         // constant
    CHECK(poly({2, 0, 1}).degree() == 2);                  // x^2 + 2
    CHECK(poly({-2, 0, 0, 1}).degree() == 3);              // x^3 - 2
    CHECK(poly({-1, -1, 0, 0, 0, 1}).degree() == 5);       // x^5 - x - 1
    CHECK(poly({0, 1}).degree() == 1);                     // x
}

TEST_CASE("x^6 + 4x^4... reducible products rejected") {
    // (x^2+1)(x^2+2) = x^4 + 3x^2 + 2
    CHECK_THROWS_AS(poly({2, 0, 3, 0, 1}), InvalidPolynomial);
    // (x^2 - 2)(x^2 - 3) = x^4 - 5x^2 + 6 has no rational roots
    CHECK_THROWS_AS(poly({6, 0, -5, 0, 1}), InvalidPolynomial);
    // x^4 + 1 is irreducible over Q but reducible mod every prime, so no
    // modular certificate exists; the conservative certifier rejects it
    CHECK_THROWS_AS(poly({1, 0, 0, 0, 1}), InvalidPolynomial);
}

TEST_CASE("local degrees") {
    CHECK(local_degrees(poly({0, 1}), 5) == std::vector<int>{1});
    CHECK(local_degrees(poly({-1, -1, 0, 1}), 2) == std::vector<int>{3});
    CHECK(local_degrees(poly({1, 0, 1}), 5) == std::vector<int>{1, 1});
    CHECK(local_degrees(poly({-1, 1, 0, 1}), 5) == std::vector<int>{3});
    CHECK(local_degrees(poly({-1, -1, 0, 1}), 5) == std::vector<int>{1, 2});
    // sum of entries = degree
    for (long long p : {2, 3, 5, 7, 11, 13}) {
        auto f = poly({-2, 0, 0, 1});
        if (ramified_at(f, p)) continue;
        int total = 0;
        for (int d : local_degrees(f, p)) total += d;
        CHECK(total == 3);
    }
}

TEST_CASE("quadratic local degrees track the Legendre symbol") {
    for (long long d : {-1, -5, 2, 3, 7, 10}) {
        auto f = poly({-d, 0, 1});
        for (long long p : {3, 5, 7, 11, 13}) {
            if (d % p == 0) continue;
            bool split = legendre(d, p) == 1;
            CHECK(local_degrees(f, p) ==
                  (split ? std::vector<int>{1, 1} : std::vector<int>{2}));
        }
    }
}

TEST_CASE("ramified primes") {
    CHECK(ramified_at(poly({-2, 0, 0, 1}), 2));
    CHECK(ramified_at(poly({-2, 0, 0, 1}), 3));  // disc(x^3-2) = -108
    CHECK_FALSE(ramified_at(poly({-2, 0, 0, 1}), 5));
    CHECK_THROWS_AS(local_degrees(poly({-2, 0, 0, 1}), 2), RamifiedPrime);
    // ramified quadratic: supported through the discriminant
    CHECK(local_degrees(poly({-2, 0, 1}), 2) == std::vector<int>{1});
    CHECK(local_degrees_full(poly({-2, 0, 1}), 2) == std::vector<int>{2});
}

TEST_CASE("real root counts") {
    CHECK(real_root_count(poly({1, 0, 1})) == 0);       // x^2 + 1
    CHECK(real_root_count(poly({-2, 0, 1})) == 2);      // x^2 - 2
    CHECK(real_root_count(poly({-2, 0, 0, 1})) == 1);   // x^3 - 2
    CHECK(real_root_count(poly({-1, -1, 0, 1})) == 1);  // x^3 - x - 1
    CHECK(real_root_count(poly({-1, -1, 0, 0, 0, 1})) == 1);  // x^5 - x - 1
    CHECK(real_root_count(poly({0, 1})) == 1);
}

TEST_CASE("discriminants") {
    CHECK(poly({-2, 0, 0, 1}).discriminant() == -108);
    CHECK(poly({1, 0, 1}).discriminant() == -4);
    CHECK(poly({-1, -1, 0, 1}).discriminant() == -23);
    CHECK(poly({-1, 1, 0, 1}).discriminant() == -31);
}

TEST_CASE("numeric helpers") {
    CHECK(squarefree_part(Rat(8)) == 2);
    CHECK(squarefree_part(Rat(-9, 4)) == -1);
    CHECK(squarefree_part(Rat(12, 5)) == 15);
    CHECK(legendre(2, 7) == 1);
    CHECK(legendre(3, 7) == -1);
    CHECK(legendre(14, 7) == 0);
    CHECK(is_local_square(Rat(17), 2));       // 17 = 1 mod 8
    CHECK_FALSE(is_local_square(Rat(5), 2));  // 5 mod 8
    CHECK(is_local_square(Rat(4), 3));
    CHECK_FALSE(is_local_square(Rat(3), 3));
    CHECK(is_local_square(Rat(9, 16), 5));
    CHECK(valuation(Rat(12), 2) == 2);
    CHECK(valuation(Rat(5, 8), 2) == -3);
    CHECK(unit_part(Rat(12), 2) == 3);
}
