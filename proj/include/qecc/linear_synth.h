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

#ifndef QECC_LINEAR_SYNTH_H
#define QECC_LINEAR_SYNTH_H

#include <cstdint>
#include <vector>

#include "qecc/bit_matrix.h"
#include "qecc/circuit.h"

namespace qecc {

/// Invertible n x n matrix over GF(2) describing a CNOT circuit's action on
/// computational basis labels. Row i is the parity wire i carries at the end,
/// as a combination of the input wires.
using LinearMatrix = BitMatrix;

/// Starts from the identity and, for each CX(c, t) in order, adds row c into row t.
/// Throws std::invalid_argument for non-CX gates.
LinearMatrix block_to_matrix(size_t n, const std::vector<Gate> &block);

enum class ResynthesisStrategy { kGaussian, kSearch };

struct ResynthesisOptions {
    ResynthesisStrategy strategy = ResynthesisStrategy::kGaussian;
    /// Node budget shared by the exact meet-in-the-middle phase and the beam phase.
    size_t search_budget = 2'000'000;
};

/// CX list (1-based qubits) whose block_to_matrix equals m.
///
/// kGaussian runs forward elimination then back substitution and reverses the
/// recorded row operations; it is deterministic. kSearch returns the shortest
/// sequence found by an exact bidirectional search and a popcount-guided beam
/// search, seeded with the Gaussian result, so it is never longer than that.
/// Throws std::invalid_argument when m is singular.
std::vector<Gate> resynthesize(const LinearMatrix &m, const ResynthesisOptions &options = {});

}  // namespace qecc

#endif
