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

#ifndef TI_JSON_IO_HPP
#define TI_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "ti/engine.hpp"

namespace ti {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "1.0.0";

/// Parse an exact rational: integer, or {"num": n, "den": d}. Floating
/// point values are a schema error.
Rat parse_rational(const Json& j, const std::string& where);

/// Arbitrary-precision integer as JSON (plain number when it fits int64,
/// decimal string otherwise).
Json int_to_json(const Int& n);
Json rational_to_json(const Rat& r);

BrauerClassQ parse_class_q(const Json& j, const std::string& where);
BrauerClassK parse_class_k(const Json& j, const std::string& where);

/// Execute one input document {"command": ..., "spec": ...}.
/// Returns the report document and the process exit code
/// (0 ok, 2 invalid input, 3 search exhausted, 4 theta undetermined).
std::pair<Json, int> run_document(const Json& doc, const SearchConfig& config);

/// Convenience wrapper: parse text, run, serialize.
std::pair<std::string, int> run_text(const std::string& text, const SearchConfig& config,
                                     bool compact);

}  // namespace ti

#endif
