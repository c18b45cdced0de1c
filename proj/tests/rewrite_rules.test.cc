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

#include "gtest/gtest.h"

using namespace qecc;

TEST(rewrite_rules, all_registered_rules_are_sound) {
    const auto &rules = rewrite_rules();
    EXPECT_GE(rules.size(), 13u);
    for (const RewriteRule &r : rules) {
        EXPECT_FALSE(r.witnesses.empty()) << r.name;
        EXPECT_EQ(find_unsound_witness(r), -1) << r.name;
        for (const RuleWitness &w : r.witnesses) {
            EXPECT_LE(w.num_qubits, 3u) << r.name;
        }
    }
}

TEST(rewrite_rules, lookup_by_name) {
    EXPECT_EQ(rewrite_rule("cnot_distribution").name, "cnot_distribution");
    EXPECT_THROW(rewrite_rule("rule_8"), std::out_of_range);
}

TEST(rewrite_rules, unsound_witness_is_detected) {
    RewriteRule bogus{"bogus", "CX equals CZ", {}};
    RuleWitness w;
    w.num_qubits = 2;
    w.lhs = {Gate::controlled(GateKind::CX, 1, 2)};
    w.rhs = {Gate::controlled(GateKind::CZ, 1, 2)};
    bogus.witnesses.push_back(w);
    EXPECT_EQ(find_unsound_witness(bogus), 0);
}

TEST(rewrite_rules, state_promises_matter) {
    // Dropping a CX is sound only with its control promised to be |0>.
    RuleWitness w;
    w.num_qubits = 2;
    w.lhs = {Gate::controlled(GateKind::CX, 1, 2)};
    w.rhs = {};
    RewriteRule unpromised{"drop", "", {w}};
    EXPECT_EQ(find_unsound_witness(unpromised), 0);
    w.zero_qubits = {1};
    RewriteRule promised{"drop", "", {w}};
    EXPECT_EQ(find_unsound_witness(promised), -1);
    w.zero_qubits = {};
    w.plus_qubits = {2};
    RewriteRule plus_target{"drop", "", {w}};
    EXPECT_EQ(find_unsound_witness(plus_target), -1);
}
