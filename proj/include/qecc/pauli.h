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

#ifndef QECC_PAULI_H
#define QECC_PAULI_H

#include <cstdint>
#include <string>
#include <string_view>

#include "qecc/bits.h"

namespace qecc {

/// An n-qubit Pauli operator i^phase_exp * P_1 (x) ... (x) P_n.
///
/// Each factor P_j is I, X, Z or Y chosen by the bit pair (x_j, z_j), where
/// the pair (1, 1) stands for the Hermitian Y = iXZ. Qubit 1 is the leftmost
/// letter and sits at bit index 0.
struct PauliString {
    size_t n = 0;
    BitVector x;
    BitVector z;
    uint8_t phase_exp = 0;

    PauliString() = default;
    explicit PauliString(size_t num_qubits) : n(num_qubits), x(num_qubits), z(num_qubits) {
    }

    /// Parses text like "XXIZ", "-IYXZ", "iZZ" or "-iX". Throws std::invalid_argument.
    static PauliString parse(std::string_view text);
    /// Weight-one operator with `letter` in {'I','X','Y','Z'} on 1-based qubit `q`.
    static PauliString single(size_t n, size_t q, char letter);
    /// Inverse of to_symplectic_row; the phase is 0.
    static PauliString from_symplectic_row(const BitVector &row);

    char letter(size_t j) const {
        return "IXZY"[x[j] + 2 * z[j]];
    }
    void set_letter(size_t j, char letter);
    size_t weight() const;
    bool is_identity_up_to_phase() const {
        return x.none() && z.none();
    }

    /// Concatenated (x | z) row of length 2n.
    BitVector to_symplectic_row() const;

    /// Phase prefix ("", "i", "-", "-i") followed by the letters.
    std::string str() const;

    PauliString operator*(const PauliString &rhs) const;
    bool operator==(const PauliString &other) const = default;
};

bool commutes(const PauliString &p, const PauliString &q);
PauliString multiply(const PauliString &p, const PauliString &q);

}  // namespace qecc

#endif
