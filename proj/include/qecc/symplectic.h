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

#ifndef QECC_SYMPLECTIC_H
#define QECC_SYMPLECTIC_H

#include <string>
#include <vector>

#include "qecc/bit_matrix.h"
#include "qecc/pauli.h"

namespace qecc {

/// Stabilizer generators as an (n-k) x 2n binary matrix (x-part | z-part).
struct CheckMatrix {
    size_t n = 0;
    size_t k = 0;
    BitMatrix rows;
    /// Per-row phase exponent, 0 (+1) or 2 (-1).
    std::vector<uint8_t> signs;

    size_t num_generators() const {
        return rows.rows();
    }
    PauliString generator(size_t i) const;
    std::vector<PauliString> generators() const;
};

/// Validates the generators (Hermitian, commuting, independent) and packs them.
CheckMatrix build_check_matrix(const std::vector<PauliString> &generators);

/// CSS construction: X-type rows from h1, Z-type rows from h2. Requires h2 * h1^T = 0.
CheckMatrix css_check_matrix(const BitMatrix &h1, const BitMatrix &h2);

/// How reduced generators get their signs.
enum class SignPolicy {
    /// Every standard-form row is taken with sign +1, as in the usual binary
    /// formalism. Regenerated signs are kept as a diagnostic.
    kBinary,
    /// Rows carry the sign obtained by multiplying out the input generators.
    /// Encoder synthesis refuses codes with a -1 row.
    kStrict,
};

struct StandardBlocks {
    BitMatrix a1, a2, b, c1, c2, d, e;
};

struct StandardForm {
    /// Rows in standard layout over the permuted qubit order.
    CheckMatrix base;
    size_t r = 0;
    /// qubit_perm[j] is the 1-based input qubit placed at standard position j+1.
    std::vector<size_t> qubit_perm;
    /// 0-based indices of the input generators whose product forms each row.
    std::vector<std::vector<size_t>> row_recipe;
    /// Phase-tracked products of the (permuted) input generators.
    std::vector<PauliString> regenerated;
    SignPolicy policy = SignPolicy::kBinary;

    size_t n() const {
        return base.n;
    }
    size_t k() const {
        return base.k;
    }
    /// Signed generators used for encoding and syndrome extraction.
    std::vector<PauliString> generators() const {
        return base.generators();
    }
    /// 0-based rows whose regenerated sign is -1.
    std::vector<size_t> negative_rows() const;
    /// True when the policy's signs disagree with the regenerated ones.
    bool has_sign_conflict() const;
};

StandardForm standard_form(const CheckMatrix &h, SignPolicy policy = SignPolicy::kBinary);

StandardBlocks extract_blocks(const StandardForm &s);

struct LogicalOperators {
    std::vector<PauliString> xbar;
    std::vector<PauliString> zbar;
};

LogicalOperators logical_operators(const StandardForm &s);

/// A Pauli that anticommutes exactly with the rows whose policy sign differs
/// from the regenerated sign and commutes with every logical operator. Applying
/// it to a state of the policy code yields the same logical state in the
/// regenerated-sign code. Identity when there is no conflict.
PauliString sign_correction(const StandardForm &s, const LogicalOperators &l);

/// Reorders qubits of a Pauli from input order to standard order.
PauliString to_standard_order(const StandardForm &s, const PauliString &p);
/// Reorders qubits of a Pauli from standard order back to input order.
PauliString to_input_order(const StandardForm &s, const PauliString &p);

}  // namespace qecc

#endif
