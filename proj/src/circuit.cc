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

#include "qecc/circuit.h"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace qecc {

namespace {

constexpr std::array<std::string_view, kNumGateKinds> kGateNames = {"H", "S", "X", "Y", "Z", "CX", "CY", "CZ"};

}  // namespace

std::string_view gate_name(GateKind kind) {
    return kGateNames[static_cast<size_t>(kind)];
}

GateKind parse_gate_kind(std::string_view name) {
    for (size_t i = 0; i < kNumGateKinds; i++) {
        if (kGateNames[i] == name) {
            return static_cast<GateKind>(i);
        }
    }
    throw std::invalid_argument("unknown gate kind '" + std::string(name) + "'");
}

std::string Gate::str() const {
    std::string s(gate_name(kind));
    s += "(" + std::to_string(q0);
    if (is_two_qubit(kind)) {
        s += "," + std::to_string(q1);
    }
    return s + ")";
}

std::string_view role_name(QubitRole role) {
    switch (role) {
        case QubitRole::kAncillaZero:
            return "ancilla_zero";
        case QubitRole::kLogicalInput:
            return "logical_input";
        case QubitRole::kData:
            return "data";
    }
    return "data";
}

QubitRole parse_role(std::string_view name) {
    if (name == "ancilla_zero") {
        return QubitRole::kAncillaZero;
    }
    if (name == "logical_input") {
        return QubitRole::kLogicalInput;
    }
    if (name == "data") {
        return QubitRole::kData;
    }
    throw std::invalid_argument("unknown qubit role '" + std::string(name) + "'");
}

size_t GateCounts::total() const {
    size_t t = 0;
    for (size_t c : by_kind) {
        t += c;
    }
    return t;
}

size_t GateCounts::two_qubit() const {
    return (*this)[GateKind::CX] + (*this)[GateKind::CY] + (*this)[GateKind::CZ];
}

std::map<std::string, size_t> GateCounts::to_map() const {
    std::map<std::string, size_t> m;
    for (size_t i = 0; i < kNumGateKinds; i++) {
        if (by_kind[i]) {
            m[std::string(kGateNames[i])] = by_kind[i];
        }
    }
    return m;
}

std::string GateCounts::str() const {
    std::string s = "{";
    bool first = true;
    for (size_t i = 0; i < kNumGateKinds; i++) {
        if (by_kind[i]) {
            if (!first) {
                s += ", ";
            }
            s += std::string(kGateNames[i]) + ":" + std::to_string(by_kind[i]);
            first = false;
        }
    }
    return s + "}";
}

GateCounts make_counts(std::initializer_list<std::pair<GateKind, size_t>> entries) {
    GateCounts c;
    for (auto [kind, count] : entries) {
        c.by_kind[static_cast<size_t>(kind)] = count;
    }
    return c;
}

Circuit &Circuit::append(const Gate &g) {
    gates.push_back(g);
    return *this;
}

void Circuit::validate() const {
    if (roles.size() != n) {
        throw std::invalid_argument(
            "circuit '" + name + "' has " + std::to_string(roles.size()) + " roles for " + std::to_string(n) +
            " qubits");
    }
    for (size_t i = 0; i < gates.size(); i++) {
        const Gate &g = gates[i];
        auto bad = [&](const std::string &why) {
            throw std::invalid_argument("gate " + std::to_string(i + 1) + " " + g.str() + ": " + why);
        };
        if (g.q0 < 1 || g.q0 > n) {
            bad("qubit index out of range 1.." + std::to_string(n));
        }
        if (is_two_qubit(g.kind)) {
            if (g.q1 < 1 || g.q1 > n) {
                bad("qubit index out of range 1.." + std::to_string(n));
            }
            if (g.q0 == g.q1) {
                bad("control equals target");
            }
        }
    }
    for (size_t q : measured) {
        if (q < 1 || q > n) {
            throw std::invalid_argument("measured qubit " + std::to_string(q) + " out of range");
        }
    }
    if (frame && frame->n != n) {
        throw std::invalid_argument("Pauli frame size does not match qubit count");
    }
}

std::vector<size_t> Circuit::qubits_with_role(QubitRole role) const {
    std::vector<size_t> out;
    for (size_t q = 1; q <= n; q++) {
        if (roles[q - 1] == role) {
            out.push_back(q);
        }
    }
    return out;
}

GateCounts gate_counts(const Circuit &c) {
    GateCounts counts;
    for (const Gate &g : c.gates) {
        counts.by_kind[static_cast<size_t>(g.kind)]++;
    }
    return counts;
}

std::string to_qasm(const Circuit &c) {
    std::ostringstream out;
    out << "OPENQASM 2.0;\n";
    out << "include \"qelib1.inc\";\n";
    if (!c.name.empty()) {
        out << "// " << c.name << "\n";
    }
    out << "qreg q[" << c.n << "];\n";
    if (!c.measured.empty()) {
        out << "creg c[" << c.measured.size() << "];\n";
    }
    for (const Gate &g : c.gates) {
        std::string name(gate_name(g.kind));
        for (char &ch : name) {
            ch = static_cast<char>(std::tolower(ch));
        }
        out << name << " q[" << g.q0 - 1 << "]";
        if (is_two_qubit(g.kind)) {
            out << ",q[" << g.q1 - 1 << "]";
        }
        out << ";\n";
    }
    if (c.has_nontrivial_frame()) {
        out << "// pauli frame\n";
        for (size_t j = 0; j < c.n; j++) {
            char l = c.frame->letter(j);
            if (l != 'I') {
                out << static_cast<char>(std::tolower(l)) << " q[" << j << "];\n";
            }
        }
    }
    for (size_t i = 0; i < c.measured.size(); i++) {
        out << "measure q[" << c.measured[i] - 1 << "] -> c[" << i << "];\n";
    }
    return out.str();
}

std::string to_json(const Circuit &c) {
    nlohmann::ordered_json j;
    j["name"] = c.name;
    j["n"] = c.n;
    auto roles = nlohmann::ordered_json::array();
    for (QubitRole r : c.roles) {
        roles.push_back(std::string(role_name(r)));
    }
    j["roles"] = roles;
    auto gates = nlohmann::ordered_json::array();
    for (const Gate &g : c.gates) {
        nlohmann::ordered_json jg;
        jg["kind"] = std::string(gate_name(g.kind));
        if (is_two_qubit(g.kind)) {
            jg["q"] = {g.q0, g.q1};
        } else {
            jg["q"] = {g.q0};
        }
        gates.push_back(jg);
    }
    j["gates"] = gates;
    j["notes"] = c.notes;
    if (!c.measured.empty()) {
        j["measure"] = c.measured;
    }
    if (c.frame) {
        j["frame"] = c.frame->str();
    }
    return j.dump(2) + "\n";
}

Circuit from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw std::invalid_argument(std::string("circuit JSON does not parse: ") + e.what());
    }
    auto need = [&](const char *key) -> const nlohmann::json & {
        if (!j.is_object() || !j.contains(key)) {
            throw std::invalid_argument(std::string("circuit JSON is missing field '") + key + "'");
        }
        return j[key];
    };
    Circuit c;
    try {
        c.name = need("name").get<std::string>();
        c.n = need("n").get<size_t>();
        for (const auto &r : need("roles")) {
            c.roles.push_back(parse_role(r.get<std::string>()));
        }
        const auto &gates = need("gates");
        if (!gates.is_array()) {
            throw std::invalid_argument("field 'gates' must be an array");
        }
        for (size_t i = 0; i < gates.size(); i++) {
            const auto &jg = gates[i];
            if (!jg.contains("kind") || !jg.contains("q")) {
                throw std::invalid_argument("gate " + std::to_string(i + 1) + " needs 'kind' and 'q'");
            }
            Gate g;
            try {
                g.kind = parse_gate_kind(jg["kind"].get<std::string>());
            } catch (const std::invalid_argument &e) {
                throw std::invalid_argument("gate " + std::to_string(i + 1) + ": " + e.what());
            }
            const auto &q = jg["q"];
            size_t arity = is_two_qubit(g.kind) ? 2 : 1;
            if (!q.is_array() || q.size() != arity) {
                throw std::invalid_argument(
                    "gate " + std::to_string(i + 1) + " (" + std::string(gate_name(g.kind)) + ") needs " +
                    std::to_string(arity) + " qubit indices");
            }
            g.q0 = q[0].get<size_t>();
            if (arity == 2) {
                g.q1 = q[1].get<size_t>();
            }
            c.gates.push_back(g);
        }
        if (j.contains("notes")) {
            c.notes = j["notes"].get<std::vector<std::string>>();
        }
        if (j.contains("measure")) {
            c.measured = j["measure"].get<std::vector<size_t>>();
        }
        if (j.contains("frame")) {
            c.frame = PauliString::parse(j["frame"].get<std::string>());
        }
    } catch (const nlohmann::json::exception &e) {
        throw std::invalid_argument(std::string("circuit JSON has a field of the wrong type: ") + e.what());
    }
    c.validate();
    return c;
}

}  // namespace qecc
