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

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ti/json_io.hpp"

int main(int argc, char** argv) {
    CLI::App app{"torsor-index: exact torsor index computations over Q and quadratic fields"};

    std::string command, input_path, output_path;
    bool compact = false;
    int search_bound = 50, poly_bound = 30;

    app.add_option("command", command, "symbol | class | index | transfer | totaro")
        ->required();
    app.add_option("--input", input_path, "input document path")->required();
    app.add_flag("--json", compact, "emit the report as a single line");
    app.add_option("--output", output_path, "write the report to a file instead of stdout");
    app.add_option("--search-bound", search_bound, "height bound for symbol searches");
    app.add_option("--poly-bound", poly_bound, "height bound for polynomial searches");

    CLI11_PARSE(app, argc, argv);

    std::ifstream in(input_path);
    if (!in) {
        std::cerr << "cannot open input: " << input_path << "\n";
        return 2;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();

    ti::SearchConfig config;
    config.symbol_bound = search_bound;
    config.poly_bound = poly_bound;

    // the positional command must match the document's command field
    ti::Json doc;
    try {
        doc = ti::Json::parse(buffer.str());
    } catch (const ti::Json::exception& e) {
        std::cerr << "invalid input document: " << e.what() << "\n";
        return 2;
    }
    if (!doc.is_object() || !doc.contains("command") ||
        doc["command"] != ti::Json(command)) {
        std::cerr << "input document command does not match \"" << command << "\"\n";
        return 2;
    }

    auto [report, code] = ti::run_document(doc, config);
    std::string text = compact ? report.dump() : report.dump(2);
    if (!output_path.empty()) {
        std::ofstream out(output_path);
        out << text << "\n";
    } else {
        std::cout << text << "\n";
    }
    return code;
}
