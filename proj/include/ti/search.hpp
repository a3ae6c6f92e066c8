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

#ifndef TI_SEARCH_HPP
#define TI_SEARCH_HPP

#include <cstddef>
#include <optional>
#include <vector>

namespace ti {

enum class ExecMode { serial, parallel };

/// Search bounds and execution mode shared by the bounded searches.
struct SearchConfig {
    int symbol_bound = 50;  // height bound for quaternion symbols and fields
    int poly_bound = 30;    // coefficient bound for trinomial searches
    ExecMode exec = ExecMode::parallel;
};

/// Index of the first candidate satisfying pred, or nullopt. The parallel
/// mode evaluates candidates concurrently and reduces to the smallest
/// matching index, so both modes return the same answer. A predicate that
/// throws is treated as not matching.
template <class Cand, class Pred>
std::optional<std::size_t> first_match(const std::vector<Cand>& shell,
                                       Pred&& pred, ExecMode mode) {
    const long n = static_cast<long>(shell.size());
    auto safe = [&](long i) {
        try {
            return pred(shell[static_cast<std::size_t>(i)]);
        } catch (...) {
            return false;
        }
    };
    if (mode == ExecMode::serial) {
        for (long i = 0; i < n; ++i)
            if (safe(i)) return static_cast<std::size_t>(i);
        return std::nullopt;
    }
    long best = n;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(min : best)
#endif
    for (long i = 0; i < n; ++i) {
        if (i < best && safe(i) && i < best) best = i;
    }
    if (best == n) return std::nullopt;
    return static_cast<std::size_t>(best);
}

}  // namespace ti

#endif
