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

#ifndef TI_ENGINE_HPP
#define TI_ENGINE_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ti/quat.hpp"
#include "ti/witt.hpp"

namespace ti {

/// Severi-Brauer case: torsor class determined by [C (x) B^op] in Br Q.
struct SplitEtaleSpec {
    BrauerClassQ c, b;
};

/// Quaternion-with-unitary-involution case in descent form; the answer
/// depends only on the two descents, not on K.
struct QuaternionSpec {
    QuaternionAlgebra a0, b0;
    QuadraticField k;
};

/// Odd-index case: D = [A (x)_K B^op] with corestriction zero; when D is
/// split, the hermitian forms attached to the two involutions decide the
/// remaining factor of 2.
struct OddDegreeSpec {
    BrauerClassK d_class;
    std::optional<std::pair<HermitianForm, HermitianForm>> forms;
    std::optional<int> degree;  // deg A = 2n+1 when known
};

using TorsorSpec = std::variant<SplitEtaleSpec, QuaternionSpec, OddDegreeSpec>;

enum class Theta { zero, one, undetermined };

/// Description of the constructed splitting field F.
struct FieldDescription {
    enum class Kind { rationals, quadratic, simple, compositum };
    Kind kind = Kind::rationals;
    std::optional<Int> d;                    // quadratic / compositum
    std::optional<IntegerPolynomial> poly;   // simple / compositum
    int degree = 1;
};

struct VerificationEntry {
    std::string name;
    bool pass = false;
};

struct TotaroReport {
    std::optional<Int> index;  // absent exactly when theta is undetermined
    Int ind_sch = 1;
    Theta theta = Theta::zero;
    std::vector<FieldDescription> fields;  // one field, or both candidates
    std::vector<VerificationEntry> verification;

    bool all_verified() const {
        for (const auto& e : verification)
            if (!e.pass) return false;
        return true;
    }
};

TotaroReport case_split_etale(const BrauerClassQ& c, const BrauerClassQ& b,
                              const SearchConfig& config = {});

TotaroReport case_quaternion(const QuaternionAlgebra& a0, const QuaternionAlgebra& b0,
                             const QuadraticField& k, const SearchConfig& config = {});

TotaroReport case_odd(const OddDegreeSpec& spec, const SearchConfig& config = {});

TotaroReport run_case(const TorsorSpec& spec, const SearchConfig& config = {});

/// Explicit hyperbolicity witness for the base change of a trace form to
/// K: one isotropic vector per plane <a, -a d>.
struct SwapWitness {
    struct Plane {
        Rat entry;
        KScalar first, second;  // isotropic vector in K^2
        bool verified = false;
    };
    std::vector<Plane> planes;
    bool hyperbolic = false;
};

SwapWitness swap_check(const HermitianForm& h);

/// Minimal-height monic trinomial x^n + c x + e (ties by c then e) that is
/// irreducible and satisfies pred; throws SearchExhausted at the bound.
IntegerPolynomial find_odd_polynomial(int degree, const SearchConfig& config,
                                      const std::function<bool(const IntegerPolynomial&)>& pred);

}  // namespace ti

#endif
