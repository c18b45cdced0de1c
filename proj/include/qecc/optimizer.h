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

#ifndef QECC_OPTIMIZER_H
#define QECC_OPTIMIZER_H

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qecc/circuit.h"

namespace qecc {

enum class OptimizationLevel {
    /// Rewrite rules only: normalization, elision, cancellation and local moves.
    kRules,
    /// Rules, then CNOT-block resynthesis and checkpointed global resynthesis.
    kFull,
};

struct OptimizerConfig {
    OptimizationLevel level = OptimizationLevel::kFull;
    /// Ask for a circuit over {H, CX} only; Pauli gates go to the frame.
    bool cnot_h_target = true;
    /// Node budget for each CNOT-block resynthesis.
    size_t search_budget = 2'000'000;
    /// Moves tried by the randomized equal-cost phase of the local search.
    size_t sideways_iterations = 20'000;
    uint64_t seed = 1;
    /// Beam width of the checkpointed global resynthesis; 0 disables it.
    size_t checkpoint_beam_width = 200;
};

/// Reads a pipeline config: {"level", "search_budget", "sideways_iterations",
/// "seed", "checkpoint_beam_width", "target_gates"}; absent keys keep defaults.
OptimizerConfig parse_optimizer_config(const std::string &json_text);
std::string to_json(const OptimizerConfig &config);

struct BlockReport {
    size_t start = 0;
    size_t gates_before = 0;
    size_t gates_after = 0;
};

struct OptimizationReport {
    GateCounts before;
    GateCounts after;
    /// Rewrite-rule name to number of applications.
    std::map<std::string, size_t> rules_fired;
    std::vector<BlockReport> blocks;
    /// Counts after each pipeline stage, in order.
    std::vector<std::pair<std::string, GateCounts>> stages;
    /// Whether the result uses only the requested gate kinds.
    bool target_reached = true;
    bool verified = false;

    std::string to_json() const;
};

/// Normalizes towards {H, CX} (CY split, S pairs merged, Paulis moved to the
/// frame, CZ turned into CX next to a Hadamard where possible), then runs a
/// local search of commutation and CNOT-distribution moves, each followed by
/// zero/plus-state elision and cancellation. The greedy phase takes the first
/// strict improvement; the sideways phase, seeded by `config.seed`, also walks
/// equal-cost neighbours and keeps the best circuit seen.
Circuit apply_rules(const Circuit &c, const OptimizerConfig &config, OptimizationReport *report = nullptr);

struct CnotBlock {
    size_t start = 0;
    std::vector<Gate> gates;
};

struct CnotBlocks {
    /// The input with single-qubit gates moved as early as they commute.
    Circuit arranged;
    /// Maximal contiguous CX runs of `arranged`.
    std::vector<CnotBlock> blocks;
};

CnotBlocks extract_cnot_blocks(const Circuit &c);

/// Rebuilds an {H, CX} circuit from its linear structure: each Hadamard
/// introduces a fresh variable, and the wire contents at every Hadamard and at
/// the end must be reproduced. A beam search works backwards from the final
/// wires. Returns the input unchanged when it is not {H, CX} or no shorter
/// circuit is found.
Circuit checkpoint_resynthesis(const Circuit &c, size_t beam_width);

/// apply_rules, then (level kFull) block and checkpoint resynthesis. The result
/// is checked against the input on every input with ancillas at |0>, up to
/// global phase; a mismatch throws std::logic_error. The two-qubit gate count
/// never exceeds the input's: if the requested form costs more, the input is
/// returned and target_reached is false.
std::pair<Circuit, OptimizationReport> optimize(const Circuit &c, const OptimizerConfig &config = {});

}  // namespace qecc

#endif
