// Copyright 2026 The qecc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qecc/code_library.h"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace qecc {

namespace {

std::string trim(std::string_view s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) {
        return "";
    }
    size_t e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

size_t parse_count(const std::string &source, size_t line, const std::string &value) {
    try {
        size_t used = 0;
        long long v = std::stoll(value, &used);
        if (used != value.size() || v < 0) {
            throw std::invalid_argument("");
        }
        return static_cast<size_t>(v);
    } catch (const std::exception &) {
        throw StabFormatError(source, line, "expected a non-negative integer, got '" + value + "'");
    }
}

}  // namespace

StabFormatError::StabFormatError(const std::string &source, size_t line, const std::string &message)
    : std::invalid_argument(source + ":" + std::to_string(line) + ": " + message), line(line) {
}

CodeDefinition parse_stab(std::string_view text, const std::string &source) {
    CodeDefinition code;
    bool have_n = false, have_k = false;
    std::vector<size_t> generator_lines;
    std::istringstream in{std::string(text)};
    std::string raw;
    size_t line_no = 0;
    while (std::getline(in, raw)) {
        line_no++;
        std::string line = trim(raw);
        if (line.empty()) {
            continue;
        }
        if (line[0] == '#') {
            code.notes.push_back(trim(std::string_view(line).substr(1)));
            continue;
        }
        size_t colon = line.find(':');
        if (colon != std::string::npos) {
            std::string key = trim(std::string_view(line).substr(0, colon));
            std::string value = trim(std::string_view(line).substr(colon + 1));
            if (key == "name") {
                code.name = value;
            } else if (key == "n") {
                code.n = parse_count(source, line_no, value);
                have_n = true;
            } else if (key == "k") {
                code.k = parse_count(source, line_no, value);
                have_k = true;
            } else {
                throw StabFormatError(source, line_no, "unknown header '" + key + "'");
            }
            continue;
        }
        if (!have_n || !have_k) {
            throw StabFormatError(source, line_no, "generator before the 'n:' and 'k:' headers");
        }
        PauliString p;
        try {
            p = PauliString::parse(line);
        } catch (const std::invalid_argument &e) {
            throw StabFormatError(source, line_no, e.what());
        }
        if (p.n != code.n) {
            throw StabFormatError(
                source, line_no,
                "generator has " + std::to_string(p.n) + " letters, expected n = " + std::to_string(code.n));
        }
        code.generators.push_back(p);
        generator_lines.push_back(line_no);
    }
    if (!have_n || !have_k) {
        throw StabFormatError(source, line_no, "missing 'n:' or 'k:' header");
    }
    if (code.k > code.n || code.generators.size() != code.n - code.k) {
        throw StabFormatError(
            source, line_no,
            "expected n - k = " + std::to_string(code.n - std::min(code.k, code.n)) + " generators, found " +
                std::to_string(code.generators.size()));
    }
    for (size_t i = 0; i < code.generators.size(); i++) {
        for (size_t j = i + 1; j < code.generators.size(); j++) {
            if (!commutes(code.generators[i], code.generators[j])) {
                throw StabFormatError(
                    source, generator_lines[j],
                    "generator on line " + std::to_string(generator_lines[j]) + " anticommutes with line " +
                        std::to_string(generator_lines[i]));
            }
        }
    }
    try {
        build_check_matrix(code.generators);
    } catch (const std::invalid_argument &e) {
        throw StabFormatError(source, generator_lines.empty() ? line_no : generator_lines.back(), e.what());
    }
    if (code.name.empty()) {
        code.name = std::filesystem::path(source).stem().string();
    }
    return code;
}

CodeDefinition load_stab(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open code file " + path.string());
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_stab(buf.str(), path.string());
}

std::filesystem::path data_directory() {
    if (const char *env = std::getenv("QECC_DATA_DIR"); env && *env) {
        return env;
    }
#ifdef QECC_DEFAULT_DATA_DIR
    return QECC_DEFAULT_DATA_DIR;
#else
    return "data";
#endif
}

CodeDefinition resolve_code(const std::string &name_or_path) {
    std::filesystem::path direct(name_or_path);
    if (std::filesystem::is_regular_file(direct)) {
        return load_stab(direct);
    }
    std::filesystem::path dir = data_directory() / "codes";
    for (const auto &candidate : {dir / name_or_path, dir / (name_or_path + ".stab")}) {
        if (std::filesystem::is_regular_file(candidate)) {
            return load_stab(candidate);
        }
    }
    throw std::invalid_argument("no code file '" + name_or_path + "' (also searched " + dir.string() + ")");
}

}  // namespace qecc
