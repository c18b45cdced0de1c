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

#ifndef QECC_CIRCUIT_H
#define QECC_CIRCUIT_H

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qecc/pauli.h"

namespace qecc {

enum class GateKind : uint8_t { H, S, X, Y, Z, CX, CY, CZ };

constexpr size_t kNumGateKinds = 8;

std::string_view gate_name(GateKind kind);
/// Accepts the canonical names ("H", "CX", ...). Throws std::invalid_argument.
GateKind parse_gate_kind(std::string_view name);

inline bool is_two_qubit(GateKind kind) {
    return kind == GateKind::CX || kind == GateKind::CY || kind == GateKind::CZ;
}
inline bool is_pauli(GateKind kind) {
    return kind == GateKind::X || kind == GateKind::Y || kind == GateKind::Z;
}
/// Self-inverse gates; everything except S.
inline bool is_involution(GateKind kind) {
    return kind != GateKind::S;
}

/// One gate on 1-based qubits. For controlled gates q0 is the control.
struct Gate {
    GateKind kind = GateKind::H;
    size_t q0 = 0;
    size_t q1 = 0;

    static Gate single(GateKind kind, size_t q) {
        return Gate{kind, q, 0};
    }
    static Gate controlled(GateKind kind, size_t control, size_t target) {
        return Gate{kind, control, target};
    }

    bool touches(size_t q) const {
        return q0 == q || (is_two_qubit(kind) && q1 == q);
    }
    std::string str() const;
    bool operator==(const Gate &other) const = default;
    auto operator<=>(const Gate &other) const = default;
};

enum class QubitRole : uint8_t {
    /// Starts in |0>.
    kAncillaZero,
    /// Carries a logical input qubit of an encoder.
    kLogicalInput,
    /// Carries an arbitrary code state, e.g. the data block of a syndrome circuit.
    kData,
};

std::string_view role_name(QubitRole role);
QubitRole parse_role(std::string_view name);

/// Histogram of gate kinds.
struct GateCounts {
    std::array<size_t, kNumGateKinds> by_kind{};

    size_t operator[](GateKind kind) const {
        return by_kind[static_cast<size_t>(kind)];
    }
    size_t total() const;
    size_t two_qubit() const;
    /// Nonzero entries only, e.g. {"H": 4, "CX": 18}.
    std::map<std::string, size_t> to_map() const;
    /// Compact form "{H:4, CX:18}" in canonical kind order.
    std::string str() const;
    bool operator==(const GateCounts &other) const = default;
};

/// Builds counts from "{H:4, CX:18}"-style pairs.
GateCounts make_counts(std::initializer_list<std::pair<GateKind, size_t>> entries);

/// Ordered gate list over n qubits, followed by an optional Pauli frame.
///
/// The frame is a Pauli correction applied after the last gate. The optimizer
/// moves Pauli gates into it so that they can be tracked classically instead
/// of executed.
struct Circuit {
    std::string name;
    size_t n = 0;
    std::vector<QubitRole> roles;
    std::vector<Gate> gates;
    std::vector<std::string> notes;
    /// Qubits read out at the end, in classical-bit order.
    std::vector<size_t> measured;
    std::optional<PauliString> frame;

    Circuit() = default;
    Circuit(std::string name, size_t n) : name(std::move(name)), n(n), roles(n, QubitRole::kData) {
    }

    Circuit &h(size_t q) {
        return append(Gate::single(GateKind::H, q));
    }
    Circuit &cx(size_t c, size_t t) {
        return append(Gate::controlled(GateKind::CX, c, t));
    }
    Circuit &append(const Gate &g);

    /// Throws std::invalid_argument when an index or role is out of shape.
    void validate() const;
    std::vector<size_t> qubits_with_role(QubitRole role) const;
    bool has_nontrivial_frame() const {
        return frame && !frame->is_identity_up_to_phase();
    }
};

GateCounts gate_counts(const Circuit &c);

/// OpenQASM 2.0; qubit i becomes q[i-1]. A Pauli frame is emitted as trailing gates.
std::string to_qasm(const Circuit &c);

std::string to_json(const Circuit &c);
/// Throws std::invalid_argument naming the offending field.
Circuit from_json(std::string_view text);

}  // namespace qecc

#endif
