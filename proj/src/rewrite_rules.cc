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

#include "qecc/rewrite_rules.h"

#include <stdexcept>

#include "qecc/simulator.h"

namespace qecc {

namespace {

Gate g1(GateKind k, size_t q) {
    return Gate::single(k, q);
}
Gate g2(GateKind k, size_t a, size_t b) {
    return Gate::controlled(k, a, b);
}

constexpr GateKind H = GateKind::H, S = GateKind::S, X = GateKind::X, Y = GateKind::Y, Z = GateKind::Z,
                   CX = GateKind::CX, CY = GateKind::CY, CZ = GateKind::CZ;

RuleWitness w(size_t n, std::vector<Gate> lhs, std::vector<Gate> rhs) {
    return RuleWitness{n, std::move(lhs), std::move(rhs), {}, {}};
}
RuleWitness w_zero(size_t n, std::vector<Gate> lhs, std::vector<Gate> rhs, std::vector<size_t> zeros) {
    return RuleWitness{n, std::move(lhs), std::move(rhs), std::move(zeros), {}};
}
RuleWitness w_plus(size_t n, std::vector<Gate> lhs, std::vector<Gate> rhs, std::vector<size_t> pluses) {
    return RuleWitness{n, std::move(lhs), std::move(rhs), {}, std::move(pluses)};
}

std::vector<RewriteRule> build_rules() {
    std::vector<RewriteRule> rules;
    rules.push_back(
        {"cz_from_cx_conjugation",
         "CZ equals CX conjugated by Hadamards on the target",
         {w(2, {g2(CZ, 1, 2)}, {g1(H, 2), g2(CX, 1, 2), g1(H, 2)})}});
    rules.push_back(
        {"cz_control_target_swap", "CZ is symmetric in its qubits", {w(2, {g2(CZ, 1, 2)}, {g2(CZ, 2, 1)})}});
    rules.push_back(
        {"hadamard_cz_absorb",
         "a CZ next to a Hadamard on one of its qubits becomes a CX across that Hadamard",
         {w(2, {g1(H, 2), g2(CZ, 1, 2)}, {g2(CX, 1, 2), g1(H, 2)}),
          w(2, {g2(CZ, 1, 2), g1(H, 2)}, {g1(H, 2), g2(CX, 1, 2)})}});
    rules.push_back(
        {"cz_cnot_exchange",
         "a CZ passes the CX on the same pair by emitting Z on the control",
         {w(2, {g2(CX, 1, 2), g2(CZ, 1, 2)}, {g2(CZ, 1, 2), g1(Z, 1), g2(CX, 1, 2)})}});
    rules.push_back(
        {"cy_decomposition",
         "CY splits into CZ, CX and S on the control",
         {w(2, {g2(CY, 1, 2)}, {g2(CZ, 1, 2), g2(CX, 1, 2), g1(S, 1)})}});
    rules.push_back({"phase_merge", "two S gates make a Z", {w(1, {g1(S, 1), g1(S, 1)}, {g1(Z, 1)})}});
    rules.push_back(
        {"pauli_propagation",
         "a Pauli moves past a Clifford gate as its conjugate",
         {w(1, {g1(X, 1), g1(H, 1)}, {g1(H, 1), g1(Z, 1)}),
          w(1, {g1(Z, 1), g1(H, 1)}, {g1(H, 1), g1(X, 1)}),
          w(1, {g1(X, 1), g1(S, 1)}, {g1(S, 1), g1(Y, 1)}),
          w(1, {g1(Z, 1), g1(S, 1)}, {g1(S, 1), g1(Z, 1)}),
          w(2, {g1(X, 1), g2(CX, 1, 2)}, {g2(CX, 1, 2), g1(X, 1), g1(X, 2)}),
          w(2, {g1(Z, 2), g2(CX, 1, 2)}, {g2(CX, 1, 2), g1(Z, 1), g1(Z, 2)}),
          w(2, {g1(X, 2), g2(CX, 1, 2)}, {g2(CX, 1, 2), g1(X, 2)}),
          w(2, {g1(Z, 1), g2(CX, 1, 2)}, {g2(CX, 1, 2), g1(Z, 1)}),
          w(2, {g1(X, 1), g2(CZ, 1, 2)}, {g2(CZ, 1, 2), g1(X, 1), g1(Z, 2)}),
          w(2, {g1(Z, 1), g2(CZ, 1, 2)}, {g2(CZ, 1, 2), g1(Z, 1)}),
          w(2, {g1(X, 1), g2(CY, 1, 2)}, {g2(CY, 1, 2), g1(X, 1), g1(Y, 2)}),
          w(2, {g1(X, 2), g2(CY, 1, 2)}, {g2(CY, 1, 2), g1(Z, 1), g1(X, 2)}),
          w(2, {g1(Z, 2), g2(CY, 1, 2)}, {g2(CY, 1, 2), g1(Z, 1), g1(Z, 2)})}});
    rules.push_back(
        {"self_inverse_cancellation",
         "two equal involutions next to each other cancel",
         {w(1, {g1(H, 1), g1(H, 1)}, {}), w(1, {g1(X, 1), g1(X, 1)}, {}), w(1, {g1(Y, 1), g1(Y, 1)}, {}),
          w(1, {g1(Z, 1), g1(Z, 1)}, {}), w(2, {g2(CX, 1, 2), g2(CX, 1, 2)}, {}),
          w(2, {g2(CY, 1, 2), g2(CY, 1, 2)}, {}), w(2, {g2(CZ, 1, 2), g2(CZ, 1, 2)}, {})}});
    rules.push_back(
        {"gate_commutation_move",
         "gates that commute may swap places",
         {w(3, {g2(CX, 1, 2), g2(CX, 1, 3)}, {g2(CX, 1, 3), g2(CX, 1, 2)}),
          w(3, {g2(CX, 1, 3), g2(CX, 2, 3)}, {g2(CX, 2, 3), g2(CX, 1, 3)}),
          w(3, {g2(CX, 1, 2), g1(H, 3)}, {g1(H, 3), g2(CX, 1, 2)}),
          w(3, {g2(CZ, 1, 2), g2(CX, 1, 3)}, {g2(CX, 1, 3), g2(CZ, 1, 2)}),
          w(3, {g2(CZ, 1, 2), g2(CZ, 2, 3)}, {g2(CZ, 2, 3), g2(CZ, 1, 2)}),
          w(2, {g1(Z, 1), g2(CX, 1, 2)}, {g2(CX, 1, 2), g1(Z, 1)}),
          w(2, {g1(S, 1), g2(CX, 1, 2)}, {g2(CX, 1, 2), g1(S, 1)}),
          w(2, {g1(S, 1), g2(CZ, 1, 2)}, {g2(CZ, 1, 2), g1(S, 1)})}});
    rules.push_back(
        {"cnot_distribution",
         "a CX crossing another that shares a wire spawns a third CX",
         {w(3, {g2(CX, 1, 2), g2(CX, 2, 3)}, {g2(CX, 2, 3), g2(CX, 1, 3), g2(CX, 1, 2)}),
          w(3, {g2(CX, 1, 2), g2(CX, 3, 1)}, {g2(CX, 3, 1), g2(CX, 1, 2), g2(CX, 3, 2)})}});
    rules.push_back(
        {"cnot_zero_control_elision",
         "a controlled gate whose control is |0> does nothing",
         {w_zero(2, {g2(CX, 1, 2)}, {}, {1}), w_zero(2, {g2(CY, 1, 2)}, {}, {1})}});
    rules.push_back(
        {"phase_zero_elision",
         "diagonal gates leave |0> unchanged",
         {w_zero(2, {g2(CZ, 1, 2)}, {}, {1}), w_zero(1, {g1(Z, 1)}, {}, {1}), w_zero(1, {g1(S, 1)}, {}, {1})}});
    rules.push_back(
        {"hadamard_basis_ancilla",
         "X-type gates leave a Hadamard-prepared |+> unchanged",
         {w_plus(2, {g2(CX, 1, 2)}, {}, {2}), w_plus(1, {g1(X, 1)}, {}, {1})}});
    return rules;
}

}  // namespace

int find_unsound_witness(const RewriteRule &rule) {
    for (size_t i = 0; i < rule.witnesses.size(); i++) {
        const RuleWitness &wit = rule.witnesses[i];
        if (wit.num_qubits > 3) {
            return static_cast<int>(i);
        }
        Circuit lhs("lhs", wit.num_qubits);
        Circuit rhs("rhs", wit.num_qubits);
        for (size_t q : wit.zero_qubits) {
            lhs.roles[q - 1] = QubitRole::kAncillaZero;
        }
        for (size_t q : wit.plus_qubits) {
            lhs.roles[q - 1] = QubitRole::kAncillaZero;
            lhs.h(q);
            rhs.h(q);
        }
        lhs.gates.insert(lhs.gates.end(), wit.lhs.begin(), wit.lhs.end());
        rhs.gates.insert(rhs.gates.end(), wit.rhs.begin(), wit.rhs.end());
        rhs.roles = lhs.roles;
        try {
            lhs.validate();
            rhs.validate();
        } catch (const std::invalid_argument &) {
            return static_cast<int>(i);
        }
        bool restricted = !wit.zero_qubits.empty() || !wit.plus_qubits.empty();
        auto scope = restricted ? EquivalenceScope::kAncillaRestricted : EquivalenceScope::kFull;
        if (!circuits_equivalent(lhs, rhs, scope, true)) {
            return static_cast<int>(i);
        }
    }
    return -1;
}

const std::vector<RewriteRule> &rewrite_rules() {
    static const std::vector<RewriteRule> rules = [] {
        std::vector<RewriteRule> built = build_rules();
        for (const auto &rule : built) {
            int bad = find_unsound_witness(rule);
            if (bad >= 0) {
                throw std::logic_error(
                    "rewrite rule '" + rule.name + "' witness " + std::to_string(bad + 1) + " is not an identity");
            }
        }
        return built;
    }();
    return rules;
}

const RewriteRule &rewrite_rule(const std::string &name) {
    for (const auto &rule : rewrite_rules()) {
        if (rule.name == name) {
            return rule;
        }
    }
    throw std::out_of_range("no rewrite rule named '" + name + "'");
}

}  // namespace qecc
