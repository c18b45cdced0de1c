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

#ifndef QECC_SYNDROME_H
#define QECC_SYNDROME_H

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qecc/bits.h"
#include "qecc/pauli.h"
#include "qecc/symplectic.h"

namespace qecc {

/// Bit i is 1 iff the error anticommutes with standard generator i+1.
BitVector syndrome_of(const PauliString &error, const StandardForm &s);

/// Integer value with generator 1 as the most significant bit.
uint64_t syndrome_value(const BitVector &syndrome);

struct SyndromeEntry {
    PauliString error;
    BitVector syndrome;
};

/// Two correctable errors share a syndrome.
class SyndromeCollisionError : public std::runtime_error {
   public:
    SyndromeCollisionError(const PauliString &a, const PauliString &b, const BitVector &syndrome);
    PauliString first;
    PauliString second;
};

/// Lookup decoder over the identity and all weight-one errors.
struct SyndromeTable {
    size_t n = 0;
    /// X, Z, Y on qubit 1, then on qubit 2, ..., and the identity last.
    std::vector<SyndromeEntry> entries;
    std::map<BitVector, PauliString> by_syndrome;

    /// Aligned text: error letters, one column per generator, decimal value.
    std::string to_text() const;
    std::string to_json() const;
};

/// Throws SyndromeCollisionError when two entries share a syndrome.
SyndromeTable build_syndrome_table(const StandardForm &s);

/// The tabulated error for this syndrome, or nullopt when it is uncorrectable.
std::optional<PauliString> decode(const BitVector &syndrome, const SyndromeTable &table);

}  // namespace qecc

#endif
