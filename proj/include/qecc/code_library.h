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

#ifndef QECC_CODE_LIBRARY_H
#define QECC_CODE_LIBRARY_H

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qecc/pauli.h"
#include "qecc/symplectic.h"

namespace qecc {

struct CodeDefinition {
    std::string name;
    size_t n = 0;
    size_t k = 0;
    std::vector<PauliString> generators;
    /// Comment lines from the file, without the leading '#'.
    std::vector<std::string> notes;

    CheckMatrix check_matrix() const {
        return build_check_matrix(generators);
    }
};

/// Parse or validation failure with the offending line.
class StabFormatError : public std::invalid_argument {
   public:
    StabFormatError(const std::string &source, size_t line, const std::string &message);
    size_t line;
};

/// Parses the `.stab` format:
///
///     # comment
///     name: eight_qubit
///     n: 8
///     k: 3
///     XXXXXXXX
///     ...
///
/// Generators must number n-k and be commuting and independent.
CodeDefinition parse_stab(std::string_view text, const std::string &source = "<text>");
CodeDefinition load_stab(const std::filesystem::path &path);

/// Directory holding shipped data. QECC_DATA_DIR in the environment overrides
/// the build-time default.
std::filesystem::path data_directory();

/// Loads `name_or_path` as a path if it exists, else as a shipped code name such as
/// "steane" or "eight_qubit.stab" under data_directory()/codes.
CodeDefinition resolve_code(const std::string &name_or_path);

}  // namespace qecc

#endif
