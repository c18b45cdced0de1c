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
#include <filesystem>
#include <fstream>

#include "gtest/gtest.h"

using namespace qecc;

TEST(code_library, shipped_codes) {
    struct Expect {
        const char *name;
        size_t n, k;
    };
    for (Expect e : {Expect{"eight_qubit", 8, 3}, Expect{"steane", 7, 1}, Expect{"thirteen_qubit", 13, 7}}) {
        CodeDefinition c = resolve_code(e.name);
        EXPECT_EQ(c.n, e.n);
        EXPECT_EQ(c.k, e.k);
        EXPECT_EQ(c.generators.size(), e.n - e.k);
        EXPECT_EQ(resolve_code(std::string(e.name) + ".stab").generators, c.generators);
    }
    EXPECT_EQ(resolve_code("eight_qubit").generators[2].str(), "IXIXYZYZ");
}

TEST(code_library, parse_minimal) {
    CodeDefinition c = parse_stab("# repetition\nname: rep\nn: 3\nk: 1\nZZI\nIZZ\n");
    EXPECT_EQ(c.name, "rep");
    EXPECT_EQ(c.generators.size(), 2u);
    EXPECT_EQ(c.notes, (std::vector<std::string>{"repetition"}));
    EXPECT_EQ(c.check_matrix().k, 1u);
}

TEST(code_library, errors_name_the_line) {
    auto line_of = [](const char *text) {
        try {
            parse_stab(text, "t.stab");
        } catch (const StabFormatError &e) {
            EXPECT_NE(std::string(e.what()).find("t.stab:"), std::string::npos) << e.what();
            return e.line;
        }
        return size_t{0};
    };
    EXPECT_EQ(line_of("n: 2\nk: 0\nXX\nZQ\n"), 4u);
    EXPECT_EQ(line_of("n: 2\nk: 0\nXI\nZI\n"), 4u);
    EXPECT_EQ(line_of("n: 2\nk: 1\nXX\nZZ\n"), 4u);
    EXPECT_EQ(line_of("n: x\n"), 1u);
    EXPECT_EQ(line_of("XX\n"), 1u);
    EXPECT_EQ(line_of("n: 2\nk: 0\nbogus: 1\n"), 3u);
    EXPECT_EQ(line_of("n: 3\nk: 0\nXXX\nZZZ\n"), 4u);
}

TEST(code_library, dependent_generators_rejected) {
    EXPECT_THROW(parse_stab("n: 3\nk: 0\nZZI\nIZZ\nZIZ\n"), StabFormatError);
}

TEST(code_library, missing_code) {
    EXPECT_THROW(resolve_code("no_such_code"), std::invalid_argument);
}

TEST(code_library, loads_explicit_path) {
    auto path = std::filesystem::temp_directory_path() / "qecc_rep.stab";
    {
        std::ofstream out(path);
        out << "name: rep\nn: 3\nk: 1\nZZI\nIZZ\n";
    }
    EXPECT_EQ(resolve_code(path.string()).name, "rep");
    std::filesystem::remove(path);
}
