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

// Compares the serial reference implementations against the OpenMP paths:
// the solvability-oracle chart scans and the bounded first-match searches.
// Results must agree exactly; timings are informational.

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "local_solvability.hpp"
#include "ti/brauer.hpp"
#include "ti/engine.hpp"

using namespace ti;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

template <typename F>
void compare(const std::string& name, F&& body) {
    auto t0 = std::chrono::steady_clock::now();
    auto serial = body(ExecMode::serial);
    double serial_s = seconds_since(t0);
    auto t1 = std::chrono::steady_clock::now();
    auto parallel = body(ExecMode::parallel);
    double parallel_s = seconds_since(t1);
    std::cout << name << ": serial " << serial_s << " s, parallel " << parallel_s
              << " s, agree " << (serial == parallel ? "yes" : "NO") << "\n";
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::cout << "openmp threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "openmp: not enabled (parallel mode falls back to serial)\n";
#endif

    compare("oracle sweep |a|,|b| <= 8, p <= 13", [](ExecMode mode) {
        std::vector<int> results;
        for (long long a = -8; a <= 8; ++a) {
            if (a == 0) continue;
            for (long long b = -8; b <= 8; ++b) {
                if (b == 0) continue;
                for (long long p : {2, 3, 5, 7, 11, 13})
                    results.push_back(oracle::solvable_finite(a, b, p, mode) ? 1 : 0);
            }
        }
        return results;
    });

    compare("oracle heavy pair (16, -16) at 2", [](ExecMode mode) {
        return oracle::solvable_finite(16, -16, 2, mode);
    });

    compare("find_quaternion_symbol on 40 classes", [](ExecMode mode) {
        SearchConfig config;
        config.exec = mode;
        std::vector<std::pair<Int, Int>> symbols;
        for (long long a : {-1, 2, 3, -5, 7, 10, -13, 15})
            for (long long b : {-1, 3, -7, 11, 14}) {
                auto cls = quaternion_class(a, b);
                symbols.push_back(find_quaternion_symbol(cls, config));
            }
        return symbols;
    });

    compare("cubic splitting-field searches", [](ExecMode mode) {
        SearchConfig config;
        config.exec = mode;
        std::vector<std::string> polys;
        for (long long p : {5, 7, 13, 31}) {
            BrauerClassQ::Map m;
            m.emplace(Place::finite(p), Fraction01::of(1, 3));
            m.emplace(Place::finite(61), Fraction01::of(2, 3));
            auto cls = BrauerClassQ::make(std::move(m));
            auto f = find_odd_polynomial(
                3, config, [&](const IntegerPolynomial& g) { return splits_over(cls, g); });
            polys.push_back(f.str());
        }
        return polys;
    });

    return 0;
}
