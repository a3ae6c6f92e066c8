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

#include "ti/json_io.hpp"

namespace ti {

namespace {

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
    throw InvalidInput(where + ": " + what);
}

Int parse_int(const Json& j, const std::string& where) {
    if (j.is_number_float()) schema_error(where, "floating point is not accepted");
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) return Int(j.get<std::string>());
    schema_error(where, "expected an integer");
}

Place parse_place(const Json& j, const std::string& where) {
    if (j.is_string() && j.get<std::string>() == "inf") return Place::infinite();
    Int p = parse_int(j, where);
    if (!is_prime(p)) schema_error(where, "place must be \"inf\" or a prime");
    return Place::finite(p);
}

std::vector<Rat> parse_rational_list(const Json& j, const std::string& where) {
    if (!j.is_array()) schema_error(where, "expected an array of rationals");
    std::vector<Rat> out;
    for (size_t i = 0; i < j.size(); ++i)
        out.push_back(parse_rational(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

FieldElement parse_field_element(const Json& j, const std::string& where) {
    if (j.is_array()) return parse_rational_list(j, where);
    return {parse_rational(j, where)};
}

IntegerPolynomial parse_poly(const Json& j, const std::string& where) {
    if (!j.is_array()) schema_error(where, "expected coefficient array, constant first");
    std::vector<Int> coeffs;
    for (size_t i = 0; i < j.size(); ++i)
        coeffs.push_back(parse_int(j[i], where + "[" + std::to_string(i) + "]"));
    return IntegerPolynomial::make(std::move(coeffs));
}

QuaternionAlgebra parse_quaternion(const Json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("a") || !j.contains("b"))
        schema_error(where, "expected {\"a\": rational, \"b\": rational}");
    return QuaternionAlgebra(parse_rational(j["a"], where + ".a"),
                             parse_rational(j["b"], where + ".b"));
}

QuadraticField parse_quadratic_field(const Json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("d"))
        schema_error(where, "expected {\"d\": integer}");
    return QuadraticField(parse_int(j["d"], where + ".d"));
}

HermitianForm parse_hermitian(const Json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("entries") || !j.contains("d"))
        schema_error(where, "expected {\"entries\": [rational...], \"d\": integer}");
    return HermitianForm::make(QuadraticField(parse_int(j["d"], where + ".d")),
                               parse_rational_list(j["entries"], where + ".entries"));
}

Json fraction_to_json(const Fraction01& f) {
    Json out;
    out["num"] = int_to_json(f.numerator());
    out["den"] = int_to_json(f.denominator());
    return out;
}

Json place_to_json(const Place& v) {
    if (v.is_infinite()) return "inf";
    return int_to_json(v.prime());
}

Json class_q_to_json(const BrauerClassQ& cls) {
    Json arr = Json::array();
    for (const auto& [v, f] : cls.invariants()) {
        Json e = fraction_to_json(f);
        Json item;
        item["place"] = place_to_json(v);
        item["num"] = e["num"];
        item["den"] = e["den"];
        arr.push_back(item);
    }
    Json out;
    out["invariants"] = arr;
    return out;
}

Json class_k_to_json(const BrauerClassK& cls) {
    Json arr = Json::array();
    for (const auto& [w, f] : cls.invariants()) {
        Json e = fraction_to_json(f);
        Json item;
        item["place"] = place_to_json(w.base);
        item["slot"] = w.slot;
        item["num"] = e["num"];
        item["den"] = e["den"];
        arr.push_back(item);
    }
    Json out;
    out["d"] = int_to_json(cls.field().d());
    out["invariants"] = arr;
    return out;
}

Json form_to_json(const QuadraticForm& q) {
    Json arr = Json::array();
    for (const Rat& a : q.entries()) arr.push_back(rational_to_json(a));
    return arr;
}

Json witt_invariants_to_json(const WittInvariants& w) {
    Json out;
    out["dim"] = w.dim;
    out["disc"] = int_to_json(w.disc);
    Json hm = Json::array();
    for (const Place& v : w.hasse_minus) hm.push_back(place_to_json(v));
    out["hasse_minus"] = hm;
    out["signature"] = w.signature;
    return out;
}

Json field_to_json(const FieldDescription& f) {
    Json out;
    switch (f.kind) {
        case FieldDescription::Kind::rationals:
            out["kind"] = "rationals";
            break;
        case FieldDescription::Kind::quadratic:
            out["kind"] = "quadratic";
            break;
        case FieldDescription::Kind::simple:
            out["kind"] = "simple";
            break;
        case FieldDescription::Kind::compositum:
            out["kind"] = "compositum";
            break;
    }
    if (f.d) out["d"] = int_to_json(*f.d);
    if (f.poly) {
        Json arr = Json::array();
        for (const Int& c : f.poly->coeffs()) arr.push_back(int_to_json(c));
        out["poly"] = arr;
    }
    out["degree"] = f.degree;
    return out;
}

Json verification_to_json(const std::vector<VerificationEntry>& entries) {
    Json arr = Json::array();
    for (const auto& e : entries) {
        Json item;
        item["name"] = e.name;
        item["pass"] = e.pass;
        arr.push_back(item);
    }
    return arr;
}

struct CommandResult {
    Json result;
    std::vector<VerificationEntry> verification;
    int exit_code = 0;
};

CommandResult run_symbol(const Json& spec, const SearchConfig&) {
    Rat a = parse_rational(spec.at("a"), "spec.a");
    Rat b = parse_rational(spec.at("b"), "spec.b");
    Place v = parse_place(spec.at("v"), "spec.v");
    int value = hilbert_symbol(a, b, v);
    CommandResult out;
    out.result["value"] = value;
    out.verification.push_back({"symmetric", hilbert_symbol(b, a, v) == value});
    int product = 1;
    std::vector<Place> support{Place::infinite(), Place::finite(2)};
    for (const Int& p : support_primes({a, b}))
        if (p != 2) support.push_back(Place::finite(p));
    for (const Place& w : support) product *= hilbert_symbol(a, b, w);
    out.verification.push_back({"reciprocity", product == 1});
    return out;
}

CommandResult run_class(const Json& spec, const SearchConfig&) {
    CommandResult out;
    if (spec.contains("entries")) {
        QuadraticForm q =
            QuadraticForm::make(parse_rational_list(spec["entries"], "spec.entries"));
        WittInvariants w = invariants(q);
        out.result["invariants"] = witt_invariants_to_json(w);
        out.verification.push_back(
            {"signature_parity", (w.signature - w.dim) % 2 == 0});
        out.verification.push_back({"self_isometric", isometric(q, q)});
        return out;
    }
    Rat a = parse_rational(spec.at("a"), "spec.a");
    Rat b = parse_rational(spec.at("b"), "spec.b");
    BrauerClassQ cls = quaternion_class(a, b);
    out.result = class_q_to_json(cls);
    out.result["index"] = int_to_json(schur_index(cls));
    out.verification.push_back({"coherent", cls.coherent()});
    return out;
}

CommandResult run_index(const Json& spec, const SearchConfig&) {
    CommandResult out;
    if (spec.contains("d")) {
        BrauerClassK cls = parse_class_k(spec, "spec");
        out.result["index"] = int_to_json(schur_index(cls));
        out.verification.push_back({"coherent", cls.coherent()});
    } else {
        BrauerClassQ cls = parse_class_q(spec, "spec");
        out.result["index"] = int_to_json(schur_index(cls));
        out.verification.push_back({"coherent", cls.coherent()});
    }
    return out;
}

CommandResult run_transfer(const Json& spec, const SearchConfig&) {
    IntegerPolynomial f = parse_poly(spec.at("poly"), "spec.poly");
    std::vector<IntegerPolynomial> tower;
    if (spec.contains("tower"))
        for (size_t i = 0; i < spec["tower"].size(); ++i)
            tower.push_back(
                parse_poly(spec["tower"][i], "spec.tower[" + std::to_string(i) + "]"));
    SimpleExtension ext = SimpleExtension::make(std::move(f), std::move(tower));
    if (!spec.contains("entries")) schema_error("spec", "missing entries");
    std::vector<FieldElement> entries;
    for (size_t i = 0; i < spec["entries"].size(); ++i)
        entries.push_back(parse_field_element(spec["entries"][i],
                                              "spec.entries[" + std::to_string(i) + "]"));
    QuadraticForm transferred = transfer(ext, entries);
    CommandResult out;
    out.result["transfer"] = form_to_json(transferred);
    out.result["invariants"] = witt_invariants_to_json(invariants(transferred));
    QuadraticForm q = spec.contains("form")
                          ? QuadraticForm::make(parse_rational_list(spec["form"], "spec.form"))
                          : QuadraticForm::make({Rat(1)});
    FieldElement scalar = spec.contains("scalar")
                              ? parse_field_element(spec["scalar"], "spec.scalar")
                              : field_one();
    auto [first, second] = projection_formula_check(ext, q, scalar);
    out.verification.push_back({"projection_formula_pullback", first});
    out.verification.push_back({"projection_formula_scaled", second});
    return out;
}

CommandResult run_totaro(const Json& spec, const SearchConfig& config) {
    if (!spec.contains("case")) schema_error("spec", "missing case tag");
    std::string tag = spec["case"].get<std::string>();
    TotaroReport report;
    if (tag == "split-etale") {
        report = case_split_etale(parse_class_q(spec.at("c"), "spec.c"),
                                  parse_class_q(spec.at("b"), "spec.b"), config);
    } else if (tag == "quaternion") {
        report = case_quaternion(parse_quaternion(spec.at("a0"), "spec.a0"),
                                 parse_quaternion(spec.at("b0"), "spec.b0"),
                                 parse_quadratic_field(spec.at("k"), "spec.k"), config);
    } else if (tag == "odd-degree") {
        OddDegreeSpec odd{parse_class_k(spec.at("d_class"), "spec.d_class"), std::nullopt,
                          std::nullopt};
        if (spec.contains("h") != spec.contains("hp"))
            schema_error("spec", "hermitian forms must come in pairs");
        if (spec.contains("h"))
            odd.forms = {parse_hermitian(spec["h"], "spec.h"),
                         parse_hermitian(spec["hp"], "spec.hp")};
        if (spec.contains("degree")) {
            Int deg = parse_int(spec["degree"], "spec.degree");
            odd.degree = deg.convert_to<int>();
        }
        report = case_odd(odd, config);
    } else {
        schema_error("spec.case", "unknown case tag");
    }
    CommandResult out;
    out.result["index"] = report.index ? int_to_json(*report.index) : Json(nullptr);
    out.result["ind_sch"] = int_to_json(report.ind_sch);
    switch (report.theta) {
        case Theta::zero: out.result["theta"] = "0"; break;
        case Theta::one: out.result["theta"] = "1"; break;
        case Theta::undetermined: out.result["theta"] = "undetermined"; break;
    }
    Json fields = Json::array();
    for (const auto& f : report.fields) fields.push_back(field_to_json(f));
    out.result["fields"] = fields;
    out.verification = report.verification;
    if (report.theta == Theta::undetermined) out.exit_code = 4;
    return out;
}

}  // namespace

Rat parse_rational(const Json& j, const std::string& where) {
    if (j.is_number_float()) schema_error(where, "floating point is not accepted");
    if (j.is_number_integer() || j.is_string()) return Rat(parse_int(j, where));
    if (j.is_object() && j.contains("num") && j.contains("den")) {
        Int den = parse_int(j["den"], where + ".den");
        if (den == 0) schema_error(where, "zero denominator");
        return Rat(parse_int(j["num"], where + ".num"), den);
    }
    schema_error(where, "expected integer or {\"num\", \"den\"}");
}

Json int_to_json(const Int& n) {
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    if (n >= lo && n <= hi) return n.convert_to<long long>();
    return n.str();
}

Json rational_to_json(const Rat& r) {
    if (den(r) == 1) return int_to_json(num(r));
    Json out;
    out["num"] = int_to_json(num(r));
    out["den"] = int_to_json(den(r));
    return out;
}

BrauerClassQ parse_class_q(const Json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("invariants"))
        schema_error(where, "expected {\"invariants\": [...]}");
    BrauerClassQ::Map inv;
    for (size_t i = 0; i < j["invariants"].size(); ++i) {
        const Json& item = j["invariants"][i];
        std::string at = where + ".invariants[" + std::to_string(i) + "]";
        Place v = parse_place(item.at("place"), at + ".place");
        Int den_ = parse_int(item.at("den"), at + ".den");
        if (den_ == 0) schema_error(at, "zero denominator");
        auto [it, inserted] =
            inv.emplace(v, Fraction01::of(parse_int(item.at("num"), at + ".num"), den_));
        if (!inserted) schema_error(at, "duplicate place");
    }
    return BrauerClassQ::make(std::move(inv));
}

BrauerClassK parse_class_k(const Json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("d") || !j.contains("invariants"))
        schema_error(where, "expected {\"d\": integer, \"invariants\": [...]}");
    QuadraticField k(parse_int(j["d"], where + ".d"));
    BrauerClassK::Map inv;
    for (size_t i = 0; i < j["invariants"].size(); ++i) {
        const Json& item = j["invariants"][i];
        std::string at = where + ".invariants[" + std::to_string(i) + "]";
        PlaceOverK w{parse_place(item.at("place"), at + ".place"), 1};
        if (item.contains("slot")) {
            Int slot = parse_int(item["slot"], at + ".slot");
            w.slot = slot.convert_to<int>();
        }
        Int den_ = parse_int(item.at("den"), at + ".den");
        if (den_ == 0) schema_error(at, "zero denominator");
        auto [it, inserted] =
            inv.emplace(w, Fraction01::of(parse_int(item.at("num"), at + ".num"), den_));
        if (!inserted) schema_error(at, "duplicate place");
    }
    return BrauerClassK::make(std::move(k), std::move(inv));
}

std::pair<Json, int> run_document(const Json& doc, const SearchConfig& config) {
    Json report;
    report["input"] = doc;
    int code = 0;
    try {
        if (!doc.is_object() || !doc.contains("command") || !doc.contains("spec"))
            schema_error("document", "expected {\"command\": ..., \"spec\": ...}");
        std::string command = doc["command"].get<std::string>();
        const Json& spec = doc["spec"];
        CommandResult res;
        if (command == "symbol") res = run_symbol(spec, config);
        else if (command == "class") res = run_class(spec, config);
        else if (command == "index") res = run_index(spec, config);
        else if (command == "transfer") res = run_transfer(spec, config);
        else if (command == "totaro") res = run_totaro(spec, config);
        else schema_error("document.command", "unknown command");
        report["result"] = res.result;
        report["verification"] = verification_to_json(res.verification);
        code = res.exit_code;
    } catch (const SearchExhausted& e) {
        report["error"] = {{"type", "SearchExhausted"}, {"message", e.what()}};
        code = 3;
    } catch (const Json::exception& e) {
        report["error"] = {{"type", "InvalidInput"}, {"message", e.what()}};
        code = 2;
    } catch (const Error& e) {
        report["error"] = {{"type", "InvalidInput"}, {"message", e.what()}};
        code = 2;
    }
    Json cfg;
    cfg["search_bound"] = config.symbol_bound;
    cfg["poly_bound"] = config.poly_bound;
    report["config"] = cfg;
    report["version"] = kVersion;
    return {report, code};
}

std::pair<std::string, int> run_text(const std::string& text, const SearchConfig& config,
                                     bool compact) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::exception& e) {
        Json report;
        report["error"] = {{"type", "InvalidInput"}, {"message", e.what()}};
        report["version"] = kVersion;
        return {compact ? report.dump() : report.dump(2), 2};
    }
    auto [report, code] = run_document(doc, config);
    return {compact ? report.dump() : report.dump(2), code};
}

}  // namespace ti
