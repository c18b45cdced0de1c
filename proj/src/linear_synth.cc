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

#include "qecc/linear_synth.h"

#include <algorithm>
#include <bit>
#include <optional>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace qecc {

namespace {

/// Row-packed matrix: wire i holds a bitmask over the inputs.
using Rows = std::vector<uint64_t>;

struct RowOp {
    uint8_t control;
    uint8_t target;
};

Rows pack(const LinearMatrix &m) {
    Rows rows(m.rows(), 0);
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t c = 0; c < m.cols(); c++) {
            if (m(r, c)) {
                rows[r] |= uint64_t{1} << c;
            }
        }
    }
    return rows;
}

Rows identity_rows(size_t n) {
    Rows rows(n);
    for (size_t i = 0; i < n; i++) {
        rows[i] = uint64_t{1} << i;
    }
    return rows;
}

/// Gates whose sequential application to the identity yields the matrix that
/// `ops` reduce to the identity.
std::vector<Gate> ops_to_gates(const std::vector<RowOp> &ops) {
    std::vector<Gate> gates;
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        gates.push_back(Gate::controlled(GateKind::CX, it->control + 1, it->target + 1));
    }
    return gates;
}

std::vector<RowOp> gaussian_ops(Rows rows) {
    size_t n = rows.size();
    std::vector<RowOp> ops;
    auto add = [&](size_t target, size_t source) {
        rows[target] ^= rows[source];
        ops.push_back({static_cast<uint8_t>(source), static_cast<uint8_t>(target)});
    };
    for (size_t col = 0; col < n; col++) {
        uint64_t bit = uint64_t{1} << col;
        if (!(rows[col] & bit)) {
            size_t r = col + 1;
            while (r < n && !(rows[r] & bit)) {
                r++;
            }
            if (r == n) {
                throw std::invalid_argument("matrix is singular");
            }
            add(col, r);
        }
        for (size_t r = col + 1; r < n; r++) {
            if (rows[r] & bit) {
                add(r, col);
            }
        }
    }
    for (size_t col = n; col-- > 0;) {
        uint64_t bit = uint64_t{1} << col;
        for (size_t r = 0; r < col; r++) {
            if (rows[r] & bit) {
                add(r, col);
            }
        }
    }
    return ops;
}

/// Matrices with n*n <= 64 are keyed by a single word.
uint64_t key_of(const Rows &rows) {
    uint64_t key = 0;
    size_t n = rows.size();
    for (size_t i = 0; i < n; i++) {
        key |= rows[i] << (i * n);
    }
    return key;
}

/// Exact meet-in-the-middle search for a sequence of at most max_len row
/// operations taking `start` to the identity. Expands the smaller frontier
/// first; gives up once `budget` states are stored.
std::optional<std::vector<RowOp>> bidirectional_search(const Rows &start, size_t max_len, size_t budget) {
    size_t n = start.size();
    if (n * n > 64) {
        return std::nullopt;
    }
    Rows goal = identity_rows(n);
    if (start == goal) {
        return std::vector<RowOp>{};
    }
    // Each side maps a state to the op that reached it and its parent state.
    struct Parent {
        uint64_t parent;
        RowOp op;
    };
    std::unordered_map<uint64_t, Parent> seen[2];
    std::vector<Rows> frontier[2] = {{start}, {goal}};
    uint64_t root[2] = {key_of(start), key_of(goal)};
    seen[0][root[0]] = {root[0], {0, 0}};
    seen[1][root[1]] = {root[1], {0, 0}};
    size_t depth[2] = {0, 0};

    auto trace = [&](int side, uint64_t key) {
        std::vector<RowOp> path;
        while (key != root[side]) {
            const Parent &p = seen[side].at(key);
            path.push_back(p.op);
            key = p.parent;
        }
        return path;  // From `key` back towards the root.
    };

    while (depth[0] + depth[1] < max_len) {
        int side = frontier[0].size() <= frontier[1].size() ? 0 : 1;
        std::vector<Rows> next;
        for (const Rows &state : frontier[side]) {
            uint64_t parent_key = key_of(state);
            for (size_t c = 0; c < n; c++) {
                for (size_t t = 0; t < n; t++) {
                    if (c == t) {
                        continue;
                    }
                    Rows child = state;
                    child[t] ^= child[c];
                    uint64_t key = key_of(child);
                    if (seen[side].count(key)) {
                        continue;
                    }
                    RowOp op{static_cast<uint8_t>(c), static_cast<uint8_t>(t)};
                    seen[side][key] = {parent_key, op};
                    if (seen[1 - side].count(key)) {
                        // Ops from start to the meeting state, then from there to the goal.
                        std::vector<RowOp> from_start = trace(0, key);
                        std::reverse(from_start.begin(), from_start.end());
                        std::vector<RowOp> to_goal = trace(1, key);
                        from_start.insert(from_start.end(), to_goal.begin(), to_goal.end());
                        return from_start;
                    }
                    next.push_back(std::move(child));
                }
            }
            if (seen[0].size() + seen[1].size() > budget) {
                return std::nullopt;
            }
        }
        frontier[side] = std::move(next);
        depth[side]++;
        if (frontier[side].empty()) {
            return std::nullopt;
        }
    }
    return std::nullopt;
}

/// Beam search reducing `start` to the identity, ranking states by total
/// popcount. Ties break on the op sequence, which keeps results deterministic.
std::optional<std::vector<RowOp>> beam_search(const Rows &start, size_t width, size_t max_len) {
    size_t n = start.size();
    Rows goal = identity_rows(n);
    struct Node {
        Rows rows;
        std::vector<RowOp> ops;
        size_t score;
    };
    auto score = [](const Rows &rows) {
        size_t s = 0;
        for (uint64_t r : rows) {
            s += std::popcount(r);
        }
        return s;
    };
    auto less = [](const Node &a, const Node &b) {
        if (a.score != b.score) {
            return a.score < b.score;
        }
        return std::lexicographical_compare(
            a.ops.begin(), a.ops.end(), b.ops.begin(), b.ops.end(), [](RowOp x, RowOp y) {
                return std::pair(x.control, x.target) < std::pair(y.control, y.target);
            });
    };
    std::vector<Node> beam = {{start, {}, score(start)}};
    std::set<Rows> seen = {start};
    for (size_t depth = 0; depth < max_len && !beam.empty(); depth++) {
        std::vector<Node> candidates;
        for (const Node &node : beam) {
            for (size_t c = 0; c < n; c++) {
                for (size_t t = 0; t < n; t++) {
                    if (c == t) {
                        continue;
                    }
                    Rows child = node.rows;
                    child[t] ^= child[c];
                    if (!seen.insert(child).second) {
                        continue;
                    }
                    std::vector<RowOp> ops = node.ops;
                    ops.push_back({static_cast<uint8_t>(c), static_cast<uint8_t>(t)});
                    if (child == goal) {
                        return ops;
                    }
                    size_t s = score(child);
                    candidates.push_back({std::move(child), std::move(ops), s});
                }
            }
        }
        size_t keep = std::min(width, candidates.size());
        std::partial_sort(candidates.begin(), candidates.begin() + keep, candidates.end(), less);
        candidates.resize(keep);
        beam = std::move(candidates);
    }
    return std::nullopt;
}

}  // namespace

LinearMatrix block_to_matrix(size_t n, const std::vector<Gate> &block) {
    LinearMatrix m = LinearMatrix::identity(n);
    for (const Gate &g : block) {
        if (g.kind != GateKind::CX) {
            throw std::invalid_argument("block_to_matrix accepts only CX gates, got " + g.str());
        }
        if (g.q0 < 1 || g.q0 > n || g.q1 < 1 || g.q1 > n || g.q0 == g.q1) {
            throw std::invalid_argument("bad CX " + g.str() + " for " + std::to_string(n) + " wires");
        }
        m.add_row(g.q1 - 1, g.q0 - 1);
    }
    return m;
}

std::vector<Gate> resynthesize(const LinearMatrix &m, const ResynthesisOptions &options) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("resynthesis needs a square matrix");
    }
    if (m.rows() > 64) {
        throw std::invalid_argument("resynthesis supports at most 64 wires");
    }
    if (m.rank() != m.rows()) {
        throw std::invalid_argument("matrix is singular");
    }
    Rows rows = pack(m);
    std::vector<RowOp> best = gaussian_ops(rows);
    if (options.strategy == ResynthesisStrategy::kSearch && !best.empty()) {
        size_t exact_budget = options.search_budget / 2;
        if (auto ops = bidirectional_search(rows, best.size() - 1, exact_budget)) {
            best = *ops;
        } else {
            size_t n = rows.size();
            size_t width = std::max<size_t>(1, (options.search_budget / 2) / std::max<size_t>(1, n * (n - 1) * best.size()));
            if (auto ops = beam_search(rows, width, best.size() - 1); ops && ops->size() < best.size()) {
                best = *ops;
            }
        }
    }
    return ops_to_gates(best);
}

}  // namespace qecc
