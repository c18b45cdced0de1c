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

#include "qecc/optimizer.h"

#include <algorithm>
#include <array>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include "json.hpp"
#include "qecc/dataflow.h"
#include "qecc/linear_synth.h"
#include "qecc/rewrite_rules.h"
#include "qecc/simulator.h"

namespace qecc {

namespace {

using Gates = std::vector<Gate>;

enum RuleId : size_t {
    kCzFromCx,
    kCzSwap,
    kHadamardCzAbsorb,
    kCzCnotExchange,
    kCyDecomposition,
    kPhaseMerge,
    kPauliPropagation,
    kSelfInverse,
    kCommutation,
    kDistribution,
    kZeroControl,
    kPhaseZero,
    kHadamardBasis,
    kNumRuleIds,
};

constexpr std::array<const char *, kNumRuleIds> kRuleNames = {
    "cz_from_cx_conjugation",
    "cz_control_target_swap",
    "hadamard_cz_absorb",
    "cz_cnot_exchange",
    "cy_decomposition",
    "phase_merge",
    "pauli_propagation",
    "self_inverse_cancellation",
    "gate_commutation_move",
    "cnot_distribution",
    "cnot_zero_control_elision",
    "phase_zero_elision",
    "hadamard_basis_ancilla",
};

/// Rule applications, cheap to copy inside the search loops.
struct Tally {
    std::array<size_t, kNumRuleIds> fired{};

    void add(RuleId id, size_t count = 1) {
        fired[id] += count;
    }
    Tally &operator+=(const Tally &other) {
        for (size_t i = 0; i < kNumRuleIds; i++) {
            fired[i] += other.fired[i];
        }
        return *this;
    }
    void export_to(std::map<std::string, size_t> &out) const {
        for (size_t i = 0; i < kNumRuleIds; i++) {
            if (fired[i]) {
                out[kRuleNames[i]] += fired[i];
            }
        }
    }
};

bool is_diagonal(GateKind k) {
    return k == GateKind::Z || k == GateKind::S || k == GateKind::CZ;
}

bool share_qubit(const Gate &a, const Gate &b) {
    return a.touches(b.q0) || (is_two_qubit(b.kind) && a.touches(b.q1));
}

bool gates_commute(const Gate &a, const Gate &b) {
    if (!share_qubit(a, b)) {
        return true;
    }
    if (is_diagonal(a.kind) && is_diagonal(b.kind)) {
        return true;
    }
    if (a.kind == GateKind::CX && b.kind == GateKind::CX) {
        return a.q0 != b.q1 && b.q0 != a.q1;
    }
    if (a.kind == GateKind::CX && is_diagonal(b.kind)) {
        return !b.touches(a.q1);
    }
    if (b.kind == GateKind::CX && is_diagonal(a.kind)) {
        return !a.touches(b.q1);
    }
    return false;
}

Gate canonical(Gate g) {
    if (g.kind == GateKind::CZ && g.q0 > g.q1) {
        std::swap(g.q0, g.q1);
    }
    return g;
}

size_t two_qubit_cost(const Gates &gates) {
    size_t c = 0;
    for (const Gate &g : gates) {
        c += is_two_qubit(g.kind);
    }
    return c;
}

/// Orders candidate circuits: fewer two-qubit gates, then fewer gates.
bool cheaper(const Gates &a, const Gates &b) {
    size_t ca = two_qubit_cost(a), cb = two_qubit_cost(b);
    if (ca != cb) {
        return ca < cb;
    }
    return a.size() < b.size();
}

void desugar_cy(Gates &gates, Tally &tally) {
    Gates out;
    for (const Gate &g : gates) {
        if (g.kind == GateKind::CY) {
            out.push_back(canonical(Gate::controlled(GateKind::CZ, g.q0, g.q1)));
            out.push_back(Gate::controlled(GateKind::CX, g.q0, g.q1));
            out.push_back(Gate::single(GateKind::S, g.q0));
            tally.add(kCyDecomposition);
        } else {
            out.push_back(canonical(g));
        }
    }
    gates = std::move(out);
}

void merge_phases(Gates &gates, Tally &tally) {
    for (size_t i = 0; i < gates.size(); i++) {
        if (gates[i].kind != GateKind::S) {
            continue;
        }
        for (size_t j = i + 1; j < gates.size(); j++) {
            if (gates[j] == gates[i]) {
                gates[i].kind = GateKind::Z;
                gates.erase(gates.begin() + static_cast<ptrdiff_t>(j));
                tally.add(kPhaseMerge);
                tally.add(kCommutation, j - i - 1);
                break;
            }
            if (!gates_commute(gates[j], gates[i])) {
                break;
            }
        }
    }
}

/// Moves Pauli bits (1-based arrays) from before `g` to after it. Signs are
/// dropped; they only change the global phase.
void conjugate(const Gate &g, std::vector<uint8_t> &x, std::vector<uint8_t> &z) {
    size_t a = g.q0, b = g.q1;
    switch (g.kind) {
        case GateKind::H:
            std::swap(x[a], z[a]);
            break;
        case GateKind::S:
            z[a] ^= x[a];
            break;
        case GateKind::CX:
            x[b] ^= x[a];
            z[a] ^= z[b];
            break;
        case GateKind::CZ:
            z[b] ^= x[a];
            z[a] ^= x[b];
            break;
        case GateKind::CY: {
            uint8_t flip = x[b] ^ z[b];
            x[b] ^= x[a];
            z[b] ^= x[a];
            z[a] ^= flip;
            break;
        }
        default:
            break;
    }
}

/// Removes Pauli gates, pushing them to the end and folding them into `frame`.
void extract_paulis(Gates &gates, size_t n, std::optional<PauliString> &frame, Tally &tally) {
    std::vector<uint8_t> x(n + 1, 0), z(n + 1, 0);
    Gates out;
    size_t moved = 0;
    for (const Gate &g : gates) {
        if (is_pauli(g.kind)) {
            x[g.q0] ^= g.kind != GateKind::Z;
            z[g.q0] ^= g.kind != GateKind::X;
            moved++;
        } else {
            conjugate(g, x, z);
            out.push_back(g);
        }
    }
    if (moved == 0) {
        return;
    }
    tally.add(kPauliPropagation, moved);
    PauliString p(n);
    for (size_t q = 1; q <= n; q++) {
        p.x.set(q - 1, x[q]);
        p.z.set(q - 1, z[q]);
    }
    if (frame) {
        PauliString combined = *frame * p;
        combined.phase_exp = 0;
        frame = combined;
    } else {
        frame = p;
    }
    gates = std::move(out);
}

/// Turns every CZ into a CX. A CZ first travels left, through commuting gates
/// and through a CX on its own pair (which leaves a Z behind), looking for a
/// Hadamard on one of its qubits to absorb; failing that it tries the right;
/// failing that it becomes H.CX.H.
void cz_to_cx(Gates &c, Tally &tally) {
    while (true) {
        size_t i = 0;
        while (i < c.size() && c[i].kind != GateKind::CZ) {
            i++;
        }
        if (i == c.size()) {
            return;
        }
        Gate g = c[i];
        size_t j = i;
        while (j > 0) {
            const Gate p = c[j - 1];
            if (gates_commute(p, g)) {
                std::swap(c[j - 1], c[j]);
                tally.add(kCommutation);
                j--;
                continue;
            }
            if (p.kind == GateKind::CX && g.touches(p.q0) && g.touches(p.q1)) {
                c[j - 1] = g;
                c[j] = Gate::single(GateKind::Z, p.q0);
                c.insert(c.begin() + static_cast<ptrdiff_t>(j) + 1, p);
                tally.add(kCzCnotExchange);
                j--;
                continue;
            }
            break;
        }
        if (j > 0 && c[j - 1].kind == GateKind::H && g.touches(c[j - 1].q0)) {
            size_t q = c[j - 1].q0;
            size_t o = g.q0 == q ? g.q1 : g.q0;
            if (g.q0 == q) {
                tally.add(kCzSwap);
            }
            c[j - 1] = Gate::controlled(GateKind::CX, o, q);
            c[j] = Gate::single(GateKind::H, q);
            tally.add(kHadamardCzAbsorb);
            continue;
        }
        size_t k = j;
        while (k + 1 < c.size() && gates_commute(c[k + 1], g)) {
            k++;
        }
        if (k + 1 < c.size() && c[k + 1].kind == GateKind::H && g.touches(c[k + 1].q0)) {
            size_t q = c[k + 1].q0;
            size_t o = g.q0 == q ? g.q1 : g.q0;
            if (g.q0 == q) {
                tally.add(kCzSwap);
            }
            c.erase(c.begin() + static_cast<ptrdiff_t>(k) + 1);
            c.erase(c.begin() + static_cast<ptrdiff_t>(j));
            c.insert(c.begin() + static_cast<ptrdiff_t>(k), Gate::single(GateKind::H, q));
            c.insert(c.begin() + static_cast<ptrdiff_t>(k) + 1, Gate::controlled(GateKind::CX, o, q));
            tally.add(kCommutation, k - j);
            tally.add(kHadamardCzAbsorb);
            continue;
        }
        c[j] = Gate::single(GateKind::H, g.q1);
        c.insert(c.begin() + static_cast<ptrdiff_t>(j) + 1, Gate::controlled(GateKind::CX, g.q0, g.q1));
        c.insert(c.begin() + static_cast<ptrdiff_t>(j) + 2, Gate::single(GateKind::H, g.q1));
        tally.add(kCzFromCx);
    }
}

/// Drops gates that act trivially on proven |0> or |+> qubits.
bool elide(Gates &gates, const std::vector<QubitRole> &roles, Tally &tally) {
    BasisTracker tracker(roles, true);
    Gates out;
    out.reserve(gates.size());
    bool changed = false;
    for (const Gate &g : gates) {
        if (tracker.is_trivial(g)) {
            changed = true;
            if ((g.kind == GateKind::CX || g.kind == GateKind::CY) && tracker.is_zero(g.q0)) {
                tally.add(kZeroControl);
            } else if (g.kind == GateKind::CX || g.kind == GateKind::X) {
                tally.add(kHadamardBasis);
            } else {
                tally.add(kPhaseZero);
            }
            continue;
        }
        tracker.step(g);
        out.push_back(g);
    }
    gates = std::move(out);
    return changed;
}

/// Cancels equal involutions that can be commuted next to each other.
bool cancel(Gates &c, Tally &tally) {
    bool any = false;
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < c.size() && !changed; i++) {
            if (!is_involution(c[i].kind)) {
                continue;
            }
            size_t j = i + 1;
            while (j < c.size() && c[j] != c[i] && gates_commute(c[j], c[i])) {
                j++;
            }
            if (j < c.size() && c[j] == c[i]) {
                tally.add(kCommutation, j - i - 1);
                tally.add(kSelfInverse);
                c.erase(c.begin() + static_cast<ptrdiff_t>(j));
                c.erase(c.begin() + static_cast<ptrdiff_t>(i));
                changed = any = true;
            }
        }
    }
    return any;
}

void simplify(Gates &c, const std::vector<QubitRole> &roles, Tally &tally) {
    bool changed = true;
    while (changed) {
        changed = elide(c, roles, tally);
        changed = cancel(c, tally) || changed;
    }
}

struct Move {
    Gates gates;
    Tally tally;
};

/// Successive placements of the CX at index i as it walks left (or right)
/// through commuting gates and across CXs sharing a wire via distribution.
std::vector<Move> walk(const Gates &start, size_t i, bool leftwards) {
    std::vector<Move> out;
    Gates c = start;
    Tally tally;
    Gate g = c[i];
    size_t j = i;
    while (true) {
        if (leftwards) {
            if (j == 0) {
                break;
            }
            Gate p = c[j - 1];
            if (gates_commute(p, g)) {
                std::swap(c[j - 1], c[j]);
                tally.add(kCommutation);
            } else if (p.kind == GateKind::CX && g.kind == GateKind::CX) {
                size_t a = p.q0, b = p.q1, x = g.q0, y = g.q1;
                if (b == x && a != y) {
                    // [CX(a,b), CX(b,y)] = [CX(b,y), CX(a,y), CX(a,b)]
                    c[j - 1] = g;
                    c[j] = Gate::controlled(GateKind::CX, a, y);
                    c.insert(c.begin() + static_cast<ptrdiff_t>(j) + 1, p);
                } else if (y == a && x != b) {
                    // [CX(a,b), CX(x,a)] = [CX(x,a), CX(a,b), CX(x,b)]
                    c[j - 1] = g;
                    c[j] = p;
                    c.insert(c.begin() + static_cast<ptrdiff_t>(j) + 1, Gate::controlled(GateKind::CX, x, b));
                } else {
                    break;
                }
                tally.add(kDistribution);
            } else {
                break;
            }
            j--;
        } else {
            if (j + 1 >= c.size()) {
                break;
            }
            Gate p = c[j + 1];
            if (gates_commute(p, g)) {
                std::swap(c[j + 1], c[j]);
                tally.add(kCommutation);
                j++;
            } else if (p.kind == GateKind::CX && g.kind == GateKind::CX) {
                size_t x = g.q0, y = g.q1, a = p.q0, b = p.q1;
                if (y == a && x != b) {
                    // [CX(x,a), CX(a,b)] = [CX(a,b), CX(x,b), CX(x,a)]
                    c[j] = p;
                    c[j + 1] = Gate::controlled(GateKind::CX, x, b);
                    c.insert(c.begin() + static_cast<ptrdiff_t>(j) + 2, g);
                    j += 2;
                } else if (x == b && a != y) {
                    // [CX(b,y), CX(a,b)] = [CX(a,b), CX(b,y), CX(a,y)]
                    c[j] = p;
                    c[j + 1] = g;
                    c.insert(c.begin() + static_cast<ptrdiff_t>(j) + 2, Gate::controlled(GateKind::CX, a, y));
                    j += 1;
                } else {
                    break;
                }
                tally.add(kDistribution);
            } else {
                break;
            }
        }
        out.push_back({c, tally});
    }
    return out;
}

/// First-improvement descent over CX walks.
void greedy_descent(Gates &c, const std::vector<QubitRole> &roles, Tally &tally) {
    simplify(c, roles, tally);
    bool improved = true;
    while (improved) {
        improved = false;
        size_t best = two_qubit_cost(c);
        for (size_t i = 0; i < c.size() && !improved; i++) {
            if (c[i].kind != GateKind::CX) {
                continue;
            }
            for (bool left : {true, false}) {
                for (Move &m : walk(c, i, left)) {
                    Tally t = m.tally;
                    simplify(m.gates, roles, t);
                    if (two_qubit_cost(m.gates) < best) {
                        c = std::move(m.gates);
                        tally += t;
                        improved = true;
                        break;
                    }
                }
                if (improved) {
                    break;
                }
            }
        }
    }
}

/// Randomized walk over equal-cost neighbours, with rare single-step uphill
/// moves; returns the cheapest circuit seen.
void sideways_search(
    Gates &c, const std::vector<QubitRole> &roles, size_t iterations, uint64_t seed, Tally &tally) {
    std::mt19937_64 rng(seed);
    auto uniform = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    Gates cur = c;
    Tally cur_tally;
    Gates best = c;
    Tally best_tally;
    for (size_t it = 0; it < iterations; it++) {
        std::vector<size_t> cx;
        for (size_t i = 0; i < cur.size(); i++) {
            if (cur[i].kind == GateKind::CX) {
                cx.push_back(i);
            }
        }
        if (cx.empty()) {
            break;
        }
        size_t i = cx[rng() % cx.size()];
        bool left = rng() % 2 == 0;
        std::vector<Move> moves = walk(cur, i, left);
        if (moves.empty()) {
            continue;
        }
        Move &m = moves[rng() % moves.size()];
        Tally t = m.tally;
        simplify(m.gates, roles, t);
        size_t cost = two_qubit_cost(m.gates), cur_cost = two_qubit_cost(cur);
        if (cost <= cur_cost || (cost == cur_cost + 1 && uniform() < 0.02)) {
            cur = std::move(m.gates);
            cur_tally += t;
            if (cheaper(cur, best)) {
                best = cur;
                best_tally = cur_tally;
            }
        }
    }
    c = std::move(best);
    tally += best_tally;
}

bool in_target_form(const Gates &gates) {
    for (const Gate &g : gates) {
        if (g.kind != GateKind::H && g.kind != GateKind::CX) {
            return false;
        }
    }
    return true;
}

Circuit with_gates(const Circuit &base, Gates gates) {
    Circuit c = base;
    c.gates = std::move(gates);
    return c;
}

}  // namespace

OptimizerConfig parse_optimizer_config(const std::string &json_text) {
    OptimizerConfig config;
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error &e) {
        throw std::invalid_argument(std::string("pipeline config does not parse: ") + e.what());
    }
    try {
        if (j.contains("level")) {
            std::string level = j["level"].get<std::string>();
            if (level == "rules") {
                config.level = OptimizationLevel::kRules;
            } else if (level == "full") {
                config.level = OptimizationLevel::kFull;
            } else {
                throw std::invalid_argument("unknown optimization level '" + level + "'");
            }
        }
        if (j.contains("target_gates")) {
            std::string target = j["target_gates"].get<std::string>();
            if (target == "cnot-h") {
                config.cnot_h_target = true;
            } else if (target == "any") {
                config.cnot_h_target = false;
            } else {
                throw std::invalid_argument("unknown target gate set '" + target + "'");
            }
        }
        if (j.contains("search_budget")) {
            config.search_budget = j["search_budget"].get<size_t>();
        }
        if (j.contains("sideways_iterations")) {
            config.sideways_iterations = j["sideways_iterations"].get<size_t>();
        }
        if (j.contains("seed")) {
            config.seed = j["seed"].get<uint64_t>();
        }
        if (j.contains("checkpoint_beam_width")) {
            config.checkpoint_beam_width = j["checkpoint_beam_width"].get<size_t>();
        }
    } catch (const nlohmann::json::exception &e) {
        throw std::invalid_argument(std::string("pipeline config has a field of the wrong type: ") + e.what());
    }
    return config;
}

std::string to_json(const OptimizerConfig &config) {
    nlohmann::ordered_json j;
    j["level"] = config.level == OptimizationLevel::kRules ? "rules" : "full";
    j["target_gates"] = config.cnot_h_target ? "cnot-h" : "any";
    j["search_budget"] = config.search_budget;
    j["sideways_iterations"] = config.sideways_iterations;
    j["seed"] = config.seed;
    j["checkpoint_beam_width"] = config.checkpoint_beam_width;
    return j.dump(2) + "\n";
}

std::string OptimizationReport::to_json() const {
    nlohmann::ordered_json j;
    j["counts_before"] = before.to_map();
    j["counts_after"] = after.to_map();
    j["two_qubit_before"] = before.two_qubit();
    j["two_qubit_after"] = after.two_qubit();
    j["rules_fired"] = rules_fired;
    auto blocks_json = nlohmann::ordered_json::array();
    for (const auto &b : blocks) {
        blocks_json.push_back({{"start", b.start}, {"gates_before", b.gates_before}, {"gates_after", b.gates_after}});
    }
    j["blocks_resynthesized"] = blocks_json;
    auto stages_json = nlohmann::ordered_json::array();
    for (const auto &[name, counts] : stages) {
        stages_json.push_back({{"stage", name}, {"counts", counts.to_map()}});
    }
    j["stages"] = stages_json;
    j["target_reached"] = target_reached;
    j["verified"] = verified;
    return j.dump(2) + "\n";
}

Circuit apply_rules(const Circuit &c, const OptimizerConfig &config, OptimizationReport *report) {
    c.validate();
    Tally tally;
    Gates gates = c.gates;
    Circuit out = c;
    auto record = [&](const char *stage) {
        if (report) {
            report->stages.emplace_back(stage, gate_counts(with_gates(c, gates)));
        }
    };
    if (config.cnot_h_target) {
        desugar_cy(gates, tally);
        merge_phases(gates, tally);
        extract_paulis(gates, c.n, out.frame, tally);
        cz_to_cx(gates, tally);
        extract_paulis(gates, c.n, out.frame, tally);
        record("normalize");
    }
    greedy_descent(gates, c.roles, tally);
    record("greedy_rules");
    if (config.sideways_iterations) {
        sideways_search(gates, c.roles, config.sideways_iterations, config.seed, tally);
        greedy_descent(gates, c.roles, tally);
        record("sideways_rules");
    }
    if (report) {
        tally.export_to(report->rules_fired);
    }
    out.gates = std::move(gates);
    return out;
}

CnotBlocks extract_cnot_blocks(const Circuit &c) {
    CnotBlocks result;
    result.arranged = c;
    Gates &g = result.arranged.gates;
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 1; i < g.size(); i++) {
            if (!is_two_qubit(g[i].kind) && is_two_qubit(g[i - 1].kind) && gates_commute(g[i], g[i - 1])) {
                std::swap(g[i], g[i - 1]);
                changed = true;
            }
        }
    }
    for (size_t i = 0; i < g.size();) {
        if (g[i].kind != GateKind::CX) {
            i++;
            continue;
        }
        CnotBlock block;
        block.start = i;
        while (i < g.size() && g[i].kind == GateKind::CX) {
            block.gates.push_back(g[i++]);
        }
        result.blocks.push_back(std::move(block));
    }
    return result;
}

namespace {

/// One step of the backwards checkpoint search.
struct PathOp {
    uint8_t kind;  // 0 = CX, 1 = H
    uint8_t a;
    uint8_t b;
    auto operator<=>(const PathOp &) const = default;
};

uint64_t hash_state(const std::vector<uint64_t> &wires, size_t stage) {
    uint64_t h = 0x9e3779b97f4a7c15ULL ^ stage;
    for (uint64_t w : wires) {
        h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h *= 0xff51afd7ed558ccdULL;
    }
    return h;
}

}  // namespace

Circuit checkpoint_resynthesis(const Circuit &c, size_t beam_width) {
    if (beam_width == 0 || !in_target_form(c.gates) || c.n > 255) {
        return c;
    }
    size_t n = c.n;
    // Variables: one per non-ancilla wire, then one per Hadamard.
    std::vector<size_t> inputs;
    for (size_t q = 1; q <= n; q++) {
        if (c.roles[q - 1] != QubitRole::kAncillaZero) {
            inputs.push_back(q);
        }
    }
    size_t num_h = 0;
    for (const Gate &g : c.gates) {
        num_h += g.kind == GateKind::H;
    }
    size_t k = inputs.size();
    if (k + num_h > 64) {
        return c;
    }
    std::vector<uint64_t> init(n, 0);
    std::vector<uint64_t> own(n, 0);
    for (size_t i = 0; i < k; i++) {
        init[inputs[i] - 1] = uint64_t{1} << i;
        own[inputs[i] - 1] = uint64_t{1} << i;
    }
    std::vector<uint64_t> wires = init;
    std::vector<uint64_t> stage_function;
    for (const Gate &g : c.gates) {
        if (g.kind == GateKind::CX) {
            wires[g.q1 - 1] ^= wires[g.q0 - 1];
        } else {
            stage_function.push_back(wires[g.q0 - 1]);
            wires[g.q0 - 1] = uint64_t{1} << (k + stage_function.size() - 1);
        }
    }
    size_t r = stage_function.size();

    struct Node {
        std::vector<uint64_t> wires;
        size_t stage;
        std::vector<PathOp> path;
        size_t score;
    };
    // Undo every Hadamard whose variable sits alone on exactly one wire.
    auto undo = [&](Node &node) {
        while (node.stage > 0) {
            uint64_t a = uint64_t{1} << (k + node.stage - 1);
            size_t holder = n, holders = 0;
            for (size_t j = 0; j < n; j++) {
                if (node.wires[j] & a) {
                    holders++;
                    holder = j;
                }
            }
            if (holders != 1 || node.wires[holder] != a) {
                break;
            }
            node.wires[holder] = stage_function[node.stage - 1];
            node.stage--;
            node.path.push_back({1, static_cast<uint8_t>(holder), 0});
        }
    };
    auto score = [&](const Node &node) {
        size_t s = 4 * node.stage;
        for (size_t j = 0; j < n; j++) {
            s += std::popcount(node.wires[j]);
            if (own[j] && !(node.wires[j] & own[j])) {
                s += 2;
            }
        }
        return s;
    };

    size_t current_cx = c.gates.size() - num_h;
    Node start{wires, r, {}, 0};
    undo(start);
    std::vector<Node> beam = {start};
    std::unordered_set<uint64_t> seen = {hash_state(start.wires, start.stage)};
    std::optional<std::vector<PathOp>> found;
    for (size_t depth = 0; depth + 1 < current_cx && !found && !beam.empty(); depth++) {
        std::vector<Node> candidates;
        for (const Node &node : beam) {
            for (size_t ctl = 0; ctl < n && !found; ctl++) {
                if (node.wires[ctl] == 0) {
                    continue;
                }
                for (size_t tgt = 0; tgt < n; tgt++) {
                    if (tgt == ctl) {
                        continue;
                    }
                    Node child{node.wires, node.stage, node.path, 0};
                    child.wires[tgt] ^= child.wires[ctl];
                    child.path.push_back({0, static_cast<uint8_t>(ctl), static_cast<uint8_t>(tgt)});
                    undo(child);
                    if (child.stage == 0 && child.wires == init) {
                        found = child.path;
                        break;
                    }
                    if (!seen.insert(hash_state(child.wires, child.stage)).second) {
                        continue;
                    }
                    child.score = score(child);
                    candidates.push_back(std::move(child));
                }
            }
            if (found) {
                break;
            }
        }
        size_t keep = std::min(beam_width, candidates.size());
        std::partial_sort(
            candidates.begin(), candidates.begin() + static_cast<ptrdiff_t>(keep), candidates.end(),
            [](const Node &a, const Node &b) {
                if (a.score != b.score) {
                    return a.score < b.score;
                }
                return a.path < b.path;
            });
        candidates.resize(keep);
        beam = std::move(candidates);
    }
    if (!found) {
        return c;
    }
    Gates gates;
    for (auto it = found->rbegin(); it != found->rend(); ++it) {
        if (it->kind == 0) {
            gates.push_back(Gate::controlled(GateKind::CX, it->a + 1u, it->b + 1u));
        } else {
            gates.push_back(Gate::single(GateKind::H, it->a + 1u));
        }
    }
    return with_gates(c, std::move(gates));
}

std::pair<Circuit, OptimizationReport> optimize(const Circuit &c, const OptimizerConfig &config) {
    OptimizationReport report;
    report.before = gate_counts(c);
    Circuit best = apply_rules(c, config, &report);

    if (config.level == OptimizationLevel::kFull) {
        Tally tally;
        CnotBlocks blocks = extract_cnot_blocks(best);
        Gates rebuilt;
        size_t pos = 0;
        for (const CnotBlock &block : blocks.blocks) {
            rebuilt.insert(
                rebuilt.end(), blocks.arranged.gates.begin() + static_cast<ptrdiff_t>(pos),
                blocks.arranged.gates.begin() + static_cast<ptrdiff_t>(block.start));
            ResynthesisOptions options{ResynthesisStrategy::kSearch, config.search_budget};
            Gates replacement = resynthesize(block_to_matrix(c.n, block.gates), options);
            if (replacement.size() < block.gates.size()) {
                report.blocks.push_back({block.start, block.gates.size(), replacement.size()});
                rebuilt.insert(rebuilt.end(), replacement.begin(), replacement.end());
            } else {
                rebuilt.insert(rebuilt.end(), block.gates.begin(), block.gates.end());
            }
            pos = block.start + block.gates.size();
        }
        rebuilt.insert(
            rebuilt.end(), blocks.arranged.gates.begin() + static_cast<ptrdiff_t>(pos), blocks.arranged.gates.end());
        greedy_descent(rebuilt, c.roles, tally);
        if (cheaper(rebuilt, best.gates)) {
            best.gates = std::move(rebuilt);
        }
        report.stages.emplace_back("block_resynthesis", gate_counts(best));

        Circuit global = checkpoint_resynthesis(best, config.checkpoint_beam_width);
        greedy_descent(global.gates, c.roles, tally);
        if (cheaper(global.gates, best.gates)) {
            best = std::move(global);
        }
        report.stages.emplace_back("checkpoint_resynthesis", gate_counts(best));
        tally.export_to(report.rules_fired);
    }

    report.target_reached = !config.cnot_h_target || in_target_form(best.gates);
    if (two_qubit_cost(best.gates) > two_qubit_cost(c.gates)) {
        best = c;
        report.target_reached = !config.cnot_h_target || in_target_form(best.gates);
    }
    bool has_ancilla = !c.qubits_with_role(QubitRole::kAncillaZero).empty();
    auto scope = has_ancilla ? EquivalenceScope::kAncillaRestricted : EquivalenceScope::kFull;
    if (!circuits_equivalent(c, best, scope, true)) {
        throw std::logic_error("optimizer produced a circuit that is not equivalent to its input");
    }
    report.verified = true;
    report.after = gate_counts(best);
    best.notes.push_back(
        std::string("optimized (level ") + (config.level == OptimizationLevel::kRules ? "rules" : "full") +
        "): " + report.before.str() + " -> " + report.after.str());
    if (best.has_nontrivial_frame()) {
        best.notes.push_back("Pauli frame " + best.frame->str() + " is applied after the gates");
    }
    return {best, report};
}

}  // namespace qecc
