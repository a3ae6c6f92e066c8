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

#ifndef TI_ERRORS_HPP
#define TI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ti {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define TI_DEFINE_ERROR(Name)                                                \
    class Name : public Error {                                              \
    public:                                                                  \
        explicit Name(const std::string& msg = #Name) : Error(msg) {}        \
    }

TI_DEFINE_ERROR(ZeroArgument);
TI_DEFINE_ERROR(InvalidPolynomial);
TI_DEFINE_ERROR(RamifiedPrime);
TI_DEFINE_ERROR(BaseMismatch);
TI_DEFINE_ERROR(SearchExhausted);
TI_DEFINE_ERROR(Degenerate);
TI_DEFINE_ERROR(NonInvertibleEntry);
TI_DEFINE_ERROR(RankMismatch);
TI_DEFINE_ERROR(EvenDegree);
TI_DEFINE_ERROR(CoresNonzero);
TI_DEFINE_ERROR(EvenIndex);
TI_DEFINE_ERROR(UnsupportedIndex);
TI_DEFINE_ERROR(InvalidInput);

#undef TI_DEFINE_ERROR

}  // namespace ti

#endif
