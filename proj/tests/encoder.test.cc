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

#include "gtest/gtest.h"
#include "qecc/code_library.h"
#include "qecc/simulator.h"

using namespace qecc;
using K = GateKind;

namespace {

struct Code {
    StandardForm s;
    LogicalOperators l;
};

Code load(const char *name) {
    Code c{standard_form(resolve_code(name).check_matrix()), {}};
    c.l = logical_operators(c.s);
    return c;
}

BitVector bits_of(uint64_t value, size_t k) {
    BitVector b(k);
    for (size_t i = 0; i < k; i++) {
        b.set(i, (value >> (k - 1 - i)) & 1);
    }
    return b;
}

}  // namespace

TEST(encoder, eight_qubit_counts) {
    Code c = load("eight_qubit");
    EXPECT_EQ(
        gate_counts(synthesize_encoder(c.s, c.l)), make_counts({{K::H, 4}, {K::S, 1}, {K::CX, 8}, {K::CY, 7}, {K::CZ, 5}}));
    EXPECT_EQ(
        gate_counts(synthesize_encoder(c.s, c.l, {EncoderGateSet::kCnotCz})),
        make_counts({{K::H, 4}, {K::Z, 1}, {K::CX, 15}, {K::CZ, 12}}));
}

TEST(encoder, steane_counts_for_both_gate_sets) {
    Code c = load("steane");
    for (EncoderGateSet g : {EncoderGateSet::kMixed, EncoderGateSet::kCnotCz}) {
        EXPECT_EQ(gate_counts(synthesize_encoder(c.s, c.l, {g})), make_counts({{K::H, 3}, {K::CX, 11}}));
    }
}

TEST(encoder, thirteen_qubit_counts) {
    Code c = load("thirteen_qubit");
    EXPECT_EQ(
        gate_counts(synthesize_encoder(c.s, c.l)),
        make_counts({{K::H, 5}, {K::S, 1}, {K::CX, 13}, {K::CY, 13}, {K::CZ, 11}}));
    EXPECT_EQ(
        gate_counts(synthesize_encoder(c.s, c.l, {EncoderGateSet::kCnotCz})),
        make_counts({{K::H, 5}, {K::Z, 1}, {K::CX, 26}, {K::CZ, 24}}));
}

TEST(encoder, roles_and_layout) {
    Code c = load("eight_qubit");
    Circuit enc = synthesize_encoder(c.s, c.l);
    EXPECT_EQ(enc.qubits_with_role(QubitRole::kAncillaZero), (std::vector<size_t>{1, 2, 3, 4, 5}));
    EXPECT_EQ(enc.qubits_with_role(QubitRole::kLogicalInput), (std::vector<size_t>{6, 7, 8}));
    EXPECT_FALSE(enc.notes.empty());
}

TEST(encoder, strip_removes_only_trivial_gates) {
    Code c = load("eight_qubit");
    EncoderOptions raw;
    raw.strip = false;
    Circuit full = synthesize_encoder(c.s, c.l, raw);
    Circuit stripped = strip_trivial_gates(full);
    EXPECT_GT(full.gates.size(), stripped.gates.size());
    EXPECT_EQ(stripped.gates, synthesize_encoder(c.s, c.l).gates);
    EXPECT_TRUE(circuits_equivalent(full, stripped, EquivalenceScope::kAncillaRestricted));
}

// Every encoder equals the projector construction on every logical input.
TEST(encoder, matches_projector_encoding_property) {
    for (const char *name : {"eight_qubit", "steane", "thirteen_qubit"}) {
        Code c = load(name);
        for (EncoderGateSet g : {EncoderGateSet::kMixed, EncoderGateSet::kCnotCz}) {
            Circuit enc = synthesize_encoder(c.s, c.l, {g});
            for (uint64_t v = 0; v < (uint64_t{1} << c.s.k()); v++) {
                BitVector bits = bits_of(v, c.s.k());
                State out = run(enc, encoder_input(enc, bits));
                EXPECT_TRUE(equal_up_to_global_phase(out, projector_encode(c.s, c.l, bits)))
                    << name << " " << bits.str();
                for (const PauliString &gen : c.s.generators()) {
                    EXPECT_TRUE(check_stabilized(out, gen));
                }
            }
        }
    }
}

TEST(encoder, syndrome_circuit_counts) {
    using G = std::pair<const char *, GateCounts>;
    for (const G &g : {
             G{"eight_qubit", make_counts({{K::H, 10}, {K::CX, 8}, {K::CY, 8}, {K::CZ, 16}})},
             G{"steane", make_counts({{K::H, 12}, {K::CX, 12}, {K::CZ, 12}})},
             G{"thirteen_qubit", make_counts({{K::H, 12}, {K::CX, 14}, {K::CY, 14}, {K::CZ, 24}})},
         }) {
        Code c = load(g.first);
        Circuit syn = synthesize_syndrome_circuit(c.s);
        EXPECT_EQ(gate_counts(syn), g.second) << g.first;
        EXPECT_EQ(syn.n, c.s.n() + c.s.base.num_generators());
        EXPECT_EQ(syn.measured.size(), c.s.base.num_generators());
    }
}
