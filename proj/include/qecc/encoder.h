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

#ifndef QECC_ENCODER_H
#define QECC_ENCODER_H

#include <stdexcept>
#include <string>

#include "qecc/circuit.h"
#include "qecc/symplectic.h"

namespace qecc {

enum class EncoderGateSet {
    /// H, S, CX, CY, CZ.
    kMixed,
    /// H, Z, CX, CZ; each controlled-Y becomes a CZ/CX pair.
    kCnotCz,
};

struct EncoderOptions {
    EncoderGateSet gate_set = EncoderGateSet::kMixed;
    /// Drop gates that provably act on |0> (see strip_trivial_gates).
    bool strip = true;
    std::string name = "encoder";
};

/// Raised when a code's reduced generators carry signs the encoder cannot honor.
class SignDiagnosticError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Encoder over the standard qubit order: qubits 1..n-k start in |0>, qubits
/// n-k+1..n carry the logical inputs.
///
/// The logical stage copies each input onto the X-support of its X-bar; the
/// stabilizer stage prepares each of the first r generators with a Hadamard on
/// its pivot qubit followed by the generator controlled on that qubit.
Circuit synthesize_encoder(const StandardForm &s, const LogicalOperators &l, const EncoderOptions &options = {});

/// Removes Z and CZ gates acting on a qubit still in |0>, and CX/CY gates whose
/// control is still in |0>. A qubit leaves |0> when a kept gate touches it.
Circuit strip_trivial_gates(const Circuit &c);

/// Syndrome extraction: one ancilla per standard generator at qubits n+1..n+(n-k).
/// Each ancilla gets H, the generator controlled on it, and H; measuring
/// ancilla i yields syndrome bit i.
Circuit synthesize_syndrome_circuit(const StandardForm &s);

}  // namespace qecc

#endif
