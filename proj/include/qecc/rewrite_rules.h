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

#ifndef QECC_REWRITE_RULES_H
#define QECC_REWRITE_RULES_H

#include <string>
#include <vector>

#include "qecc/circuit.h"

namespace qecc {

/// One instance of a rule on a window of at most three qubits.
struct RuleWitness {
    size_t num_qubits = 2;
    std::vector<Gate> lhs;
    std::vector<Gate> rhs;
    /// Window qubits promised to be |0> where the rule applies.
    std::vector<size_t> zero_qubits;
    /// Window qubits promised to be |+> where the rule applies.
    std::vector<size_t> plus_qubits;
};

/// A circuit identity used by the optimizer, keyed by what it does.
struct RewriteRule {
    std::string name;
    std::string description;
    std::vector<RuleWitness> witnesses;
};

/// Compares lhs and rhs of every witness by simulating all basis inputs of the
/// window, up to global phase. Inputs are restricted to the promised |0>/|+>
/// states for state-dependent witnesses. Returns the first failing witness
/// index, or -1 when the rule is sound.
int find_unsound_witness(const RewriteRule &rule);

/// The optimizer's rules. Each is checked with find_unsound_witness on first
/// use; an unsound rule throws std::logic_error.
const std::vector<RewriteRule> &rewrite_rules();

/// Looks a rule up by name; throws std::out_of_range when absent.
const RewriteRule &rewrite_rule(const std::string &name);

}  // namespace qecc

#endif
