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

#include "qecc/encoder.h"

#include <optional>

#include "qecc/dataflow.h"

namespace qecc {

namespace {

GateKind controlled_letter(bool x, bool z) {
    if (x && z) {
        return GateKind::CY;
    }
    return x ? GateKind::CX : GateKind::CZ;
}

std::string join_qubits(const std::vector<size_t> &qs) {
    std::string s;
    for (size_t q : qs) {
        s += (s.empty() ? "" : " ") + std::to_string(q);
    }
    return s;
}

/// Emits the cnot_cz form of one controlled generator.
///
/// A CZ-then-CX pair realizes controlled-(-iY), a CX-then-CZ pair
/// controlled-(iY). The product of the pair phases times the control's phase
/// gate must equal i^s, where s says whether the generator has Y on its pivot.
/// Z-first pairs are used wherever the phase budget allows; the control phase
/// is a Z (or nothing) when possible and an S otherwise.
void emit_cnot_cz_generator(Circuit &c, size_t control, const PauliString &g, bool pivot_y) {
    std::vector<size_t> ys;
    for (size_t j = 0; j < g.n; j++) {
        if (j + 1 != control && g.x[j] && g.z[j]) {
            ys.push_back(j + 1);
        }
    }
    int m = static_cast<int>(ys.size());
    int s = pivot_y ? 1 : 0;
    // Control phase options as powers of i, cheapest first.
    std::vector<std::pair<int, std::vector<GateKind>>> options;
    if (s) {
        options = {{2, {GateKind::Z}}, {0, {}}, {1, {GateKind::S}}, {3, {GateKind::S, GateKind::Z}}};
    } else {
        options = {{0, {}}, {2, {GateKind::Z}}, {1, {GateKind::S}}, {3, {GateKind::S, GateKind::Z}}};
    }
    std::optional<int> z_first;
    std::vector<GateKind> phase_gates;
    for (const auto &[phi, gates] : options) {
        for (int a = m; a >= 0; a--) {
            if ((((phi + m - 2 * a) - s) % 4 + 4) % 4 == 0) {
                z_first = a;
                break;
            }
        }
        if (z_first) {
            phase_gates = gates;
            break;
        }
    }
    for (GateKind k : phase_gates) {
        c.append(Gate::single(k, control));
    }
    int used = 0;
    for (size_t j = 0; j < g.n; j++) {
        size_t q = j + 1;
        if (q == control || (!g.x[j] && !g.z[j])) {
            continue;
        }
        if (g.x[j] && g.z[j]) {
            if (used++ < *z_first) {
                c.append(Gate::controlled(GateKind::CZ, control, q));
                c.append(Gate::controlled(GateKind::CX, control, q));
            } else {
                c.append(Gate::controlled(GateKind::CX, control, q));
                c.append(Gate::controlled(GateKind::CZ, control, q));
            }
        } else {
            c.append(Gate::controlled(controlled_letter(g.x[j], g.z[j]), control, q));
        }
    }
}

}  // namespace

Circuit synthesize_encoder(const StandardForm &s, const LogicalOperators &l, const EncoderOptions &options) {
    size_t n = s.n(), k = s.k(), m = n - k;
    if (s.policy == SignPolicy::kStrict) {
        auto neg = s.negative_rows();
        if (!neg.empty()) {
            std::vector<size_t> rows;
            for (size_t i : neg) {
                rows.push_back(i + 1);
            }
            throw SignDiagnosticError(
                "standard-form rows " + join_qubits(rows) +
                " regenerate with sign -1 from the input generators; refusing to synthesize under the strict "
                "sign policy");
        }
    }
    Circuit c(options.name, n);
    for (size_t q = 1; q <= n; q++) {
        c.roles[q - 1] = q <= m ? QubitRole::kAncillaZero : QubitRole::kLogicalInput;
    }

    for (size_t i = 0; i < k; i++) {
        size_t control = m + i + 1;
        const PauliString &xb = l.xbar[i];
        for (size_t j = 0; j < n; j++) {
            if (j + 1 != control && xb.x[j]) {
                c.cx(control, j + 1);
            }
        }
    }

    std::vector<PauliString> gens = s.generators();
    for (size_t i = 0; i < s.r; i++) {
        size_t control = i + 1;
        const PauliString &g = gens[i];
        bool pivot_y = g.z[i];
        c.h(control);
        if (g.phase_exp == 2) {
            // -M: prepare |0> - |1> on the control before the controlled generator.
            c.append(Gate::single(GateKind::Z, control));
        }
        if (options.gate_set == EncoderGateSet::kMixed) {
            if (pivot_y) {
                c.append(Gate::single(GateKind::S, control));
            }
            for (size_t j = 0; j < n; j++) {
                if (j != i && (g.x[j] || g.z[j])) {
                    c.append(Gate::controlled(controlled_letter(g.x[j], g.z[j]), control, j + 1));
                }
            }
        } else {
            emit_cnot_cz_generator(c, control, g, pivot_y);
        }
    }

    c.notes.push_back(
        std::string("gate set: ") + (options.gate_set == EncoderGateSet::kMixed ? "mixed" : "cnot_cz"));
    c.notes.push_back("qubit order (input qubit at each position): " + join_qubits(s.qubit_perm));
    if (s.has_sign_conflict()) {
        std::vector<size_t> rows;
        for (size_t i : s.negative_rows()) {
            rows.push_back(i + 1);
        }
        c.notes.push_back(
            "standard-form rows " + join_qubits(rows) +
            " regenerate with sign -1; the encoder targets the +1 eigenspace of the reduced rows");
    }
    if (options.strip) {
        size_t before = c.gates.size();
        c = strip_trivial_gates(c);
        c.notes.push_back("stripped " + std::to_string(before - c.gates.size()) + " gates acting on |0>");
    }
    return c;
}

Circuit strip_trivial_gates(const Circuit &c) {
    Circuit out = c;
    out.gates.clear();
    BasisTracker tracker(c, false);
    for (const Gate &g : c.gates) {
        bool drop = false;
        switch (g.kind) {
            case GateKind::Z:
            case GateKind::CZ:
            case GateKind::CX:
            case GateKind::CY:
                drop = tracker.is_trivial(g);
                break;
            default:
                break;
        }
        if (!drop) {
            tracker.step(g);
            out.gates.push_back(g);
        }
    }
    return out;
}

Circuit synthesize_syndrome_circuit(const StandardForm &s) {
    size_t n = s.n();
    std::vector<PauliString> gens = s.generators();
    Circuit c("syndrome", n + gens.size());
    for (size_t q = 1; q <= c.n; q++) {
        c.roles[q - 1] = q <= n ? QubitRole::kData : QubitRole::kAncillaZero;
    }
    for (size_t i = 0; i < gens.size(); i++) {
        size_t a = n + i + 1;
        const PauliString &g = gens[i];
        c.h(a);
        if (g.phase_exp == 2) {
            c.append(Gate::single(GateKind::Z, a));
        }
        for (size_t j = 0; j < n; j++) {
            if (g.x[j] || g.z[j]) {
                c.append(Gate::controlled(controlled_letter(g.x[j], g.z[j]), a, j + 1));
            }
        }
        c.h(a);
        c.measured.push_back(a);
    }
    c.notes.push_back("ancilla n+i measures standard generator i");
    return c;
}

}  // namespace qecc
