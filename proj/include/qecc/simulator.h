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

#ifndef QECC_SIMULATOR_H
#define QECC_SIMULATOR_H

#include <stdexcept>
#include <string_view>

#include "qecc/circuit.h"
#include "qecc/statevector.h"
#include "qecc/symplectic.h"
#include "qecc/syndrome.h"

namespace qecc {

using State = StateVector<double>;

/// Equality tolerance for amplitudes.
constexpr double kTolerance = 1e-10;

/// Applies the gates in order, then the Pauli frame if present.
template <typename Real>
StateVector<Real> run(const Circuit &c, StateVector<Real> input) {
    if (input.num_qubits() != c.n) {
        throw std::invalid_argument(
            "circuit has " + std::to_string(c.n) + " qubits but the input state has " +
            std::to_string(input.num_qubits()));
    }
    for (const Gate &g : c.gates) {
        input.apply(g);
    }
    if (c.frame) {
        input.apply(*c.frame);
    }
    return input;
}

State run(const Circuit &c, std::string_view basis_label);

/// Encoded state built from the projector (I + M_1)...(I + M_{n-k}) applied to
/// |0...0>, followed by X-bar_i for each set bit. Uses no circuit.
/// Throws std::domain_error when the projection vanishes (inconsistent signs).
State projector_encode(const StandardForm &s, const LogicalOperators &l, const BitVector &bits);

/// True iff g|v> equals |v> within the tolerance.
bool check_stabilized(const State &v, const PauliString &g);

/// True iff a == phase * b for a unit phase (elementwise, within the tolerance).
bool equal_up_to_global_phase(const State &a, const State &b);

enum class EquivalenceScope {
    /// Every computational basis input.
    kFull,
    /// Inputs with all ancilla_zero qubits (taken from the first circuit) at |0>.
    kAncillaRestricted,
};

/// Compares the two circuits column by column. With `up_to_global_phase` a
/// single phase, fixed from the first nonzero amplitude, must fit every column.
bool circuits_equivalent(
    const Circuit &a, const Circuit &b, EquivalenceScope scope, bool up_to_global_phase = true);

/// Runs the syndrome circuit on `encoded` after applying `error` and reads the
/// ancillas. Throws std::runtime_error if an ancilla is not in a basis state.
BitVector measure_syndrome(const State &encoded, const PauliString &error, const StandardForm &s);

/// Encodes `bits` with `encoder`, applies `error`, measures the syndrome,
/// applies the decoded correction and compares with the clean encoded state.
bool roundtrip_correct(
    const StandardForm &s,
    const Circuit &encoder,
    const SyndromeTable &table,
    const BitVector &bits,
    const PauliString &error);

/// Encoder input with ancillas at |0> and the logical qubits set from `bits`.
State encoder_input(const Circuit &encoder, const BitVector &bits);

}  // namespace qecc

#endif
