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

#include "qecc/symplectic.h"

#include <optional>
#include <stdexcept>

namespace qecc {

PauliString CheckMatrix::generator(size_t i) const {
    PauliString p = PauliString::from_symplectic_row(rows.row(i));
    p.phase_exp = signs[i];
    return p;
}

std::vector<PauliString> CheckMatrix::generators() const {
    std::vector<PauliString> out;
    for (size_t i = 0; i < num_generators(); i++) {
        out.push_back(generator(i));
    }
    return out;
}

CheckMatrix build_check_matrix(const std::vector<PauliString> &generators) {
    if (generators.empty()) {
        throw std::invalid_argument("a stabilizer code needs at least one generator");
    }
    CheckMatrix h;
    h.n = generators[0].n;
    if (generators.size() > h.n) {
        throw std::invalid_argument(
            std::to_string(generators.size()) + " generators on " + std::to_string(h.n) + " qubits is too many");
    }
    h.k = h.n - generators.size();
    h.rows = BitMatrix(0, 2 * h.n);
    for (size_t i = 0; i < generators.size(); i++) {
        const auto &g = generators[i];
        if (g.n != h.n) {
            throw std::invalid_argument(
                "generator " + std::to_string(i + 1) + " has " + std::to_string(g.n) + " qubits, expected " +
                std::to_string(h.n));
        }
        if (g.phase_exp & 1) {
            throw std::invalid_argument(
                "generator " + std::to_string(i + 1) + " has an imaginary phase and is not Hermitian");
        }
        h.rows.append_row(g.to_symplectic_row());
        h.signs.push_back(g.phase_exp);
    }
    for (size_t i = 0; i < generators.size(); i++) {
        for (size_t j = i + 1; j < generators.size(); j++) {
            if (!commutes(generators[i], generators[j])) {
                throw std::invalid_argument(
                    "generators " + std::to_string(i + 1) + " (" + generators[i].str() + ") and " +
                    std::to_string(j + 1) + " (" + generators[j].str() + ") anticommute");
            }
        }
    }
    size_t rank = h.rows.rank();
    if (rank != generators.size()) {
        throw std::invalid_argument(
            "generators are linearly dependent: rank " + std::to_string(rank) + " < " +
            std::to_string(generators.size()));
    }
    return h;
}

CheckMatrix css_check_matrix(const BitMatrix &h1, const BitMatrix &h2) {
    size_t n = h1.rows() ? h1.cols() : h2.cols();
    if ((h1.rows() && h1.cols() != n) || (h2.rows() && h2.cols() != n)) {
        throw std::invalid_argument("CSS parity-check matrices must have the same column count");
    }
    for (size_t j = 0; j < h2.rows(); j++) {
        for (size_t i = 0; i < h1.rows(); i++) {
            if (h2.row(j).dot(h1.row(i))) {
                throw std::invalid_argument(
                    "CSS orthogonality violated: row " + std::to_string(i + 1) + " of H1 and row " +
                    std::to_string(j + 1) + " of H2 overlap oddly");
            }
        }
    }
    std::vector<PauliString> gens;
    for (size_t i = 0; i < h1.rows(); i++) {
        PauliString p(n);
        p.x = h1.row(i);
        gens.push_back(p);
    }
    for (size_t j = 0; j < h2.rows(); j++) {
        PauliString p(n);
        p.z = h2.row(j);
        gens.push_back(p);
    }
    return build_check_matrix(gens);
}

namespace {

/// Working row during reduction: bits plus the input generators it is made of.
struct ReductionRow {
    BitVector bits;
    std::vector<size_t> recipe;
};

void swap_qubits(std::vector<ReductionRow> &rows, std::vector<size_t> &perm, size_t n, size_t a, size_t b) {
    for (auto &row : rows) {
        row.bits.swap_bits(a, b);
        row.bits.swap_bits(a + n, b + n);
    }
    std::swap(perm[a], perm[b]);
}

void add_into(ReductionRow &target, const ReductionRow &source) {
    target.bits ^= source.bits;
    target.recipe.insert(target.recipe.end(), source.recipe.begin(), source.recipe.end());
}

/// Gauss-Jordan over one half of the check matrix. Pivots are searched in
/// columns [col_begin, n) of the half starting at `offset`, in rows
/// [row_begin, row_end). Missing pivots are repaired by swapping in the nearest
/// qubit column to the right. Elimination is confined to [elim_begin, row_end).
size_t reduce_band(
    std::vector<ReductionRow> &rows,
    std::vector<size_t> &perm,
    size_t n,
    size_t offset,
    size_t col_begin,
    size_t row_begin,
    size_t elim_begin) {
    size_t row_end = rows.size();
    size_t pivot_row = row_begin;
    for (size_t col = col_begin; col < n && pivot_row < row_end; col++) {
        std::optional<std::pair<size_t, size_t>> found;
        for (size_t c2 = col; c2 < n && !found; c2++) {
            for (size_t i = pivot_row; i < row_end; i++) {
                if (rows[i].bits[offset + c2]) {
                    found = {i, c2};
                    break;
                }
            }
        }
        if (!found) {
            break;
        }
        auto [i, c2] = *found;
        if (c2 != col) {
            swap_qubits(rows, perm, n, col, c2);
        }
        std::swap(rows[pivot_row], rows[i]);
        for (size_t t = elim_begin; t < row_end; t++) {
            if (t != pivot_row && rows[t].bits[offset + col]) {
                add_into(rows[t], rows[pivot_row]);
            }
        }
        pivot_row++;
    }
    return pivot_row - row_begin;
}

PauliString permute_qubits(const PauliString &p, const std::vector<size_t> &perm) {
    PauliString q(p.n);
    q.phase_exp = p.phase_exp;
    for (size_t j = 0; j < p.n; j++) {
        q.x.set(j, p.x[perm[j] - 1]);
        q.z.set(j, p.z[perm[j] - 1]);
    }
    return q;
}

}  // namespace

std::vector<size_t> StandardForm::negative_rows() const {
    std::vector<size_t> out;
    for (size_t i = 0; i < regenerated.size(); i++) {
        if (regenerated[i].phase_exp == 2) {
            out.push_back(i);
        }
    }
    return out;
}

bool StandardForm::has_sign_conflict() const {
    for (size_t i = 0; i < regenerated.size(); i++) {
        if (regenerated[i].phase_exp != base.signs[i]) {
            return true;
        }
    }
    return false;
}

StandardForm standard_form(const CheckMatrix &h, SignPolicy policy) {
    size_t n = h.n;
    size_t m = h.num_generators();
    std::vector<ReductionRow> rows;
    for (size_t i = 0; i < m; i++) {
        rows.push_back({h.rows.row(i), {i}});
    }
    std::vector<size_t> perm(n);
    for (size_t j = 0; j < n; j++) {
        perm[j] = j + 1;
    }

    size_t r = reduce_band(rows, perm, n, 0, 0, 0, 0);
    reduce_band(rows, perm, n, n, r, r, r);

    StandardForm s;
    s.r = r;
    s.qubit_perm = perm;
    s.policy = policy;
    s.base.n = n;
    s.base.k = h.k;
    s.base.rows = BitMatrix(0, 2 * n);
    std::vector<PauliString> originals = h.generators();
    for (auto &g : originals) {
        g = permute_qubits(g, perm);
    }
    for (const auto &row : rows) {
        s.base.rows.append_row(row.bits);
        s.row_recipe.push_back(row.recipe);
        PauliString acc(n);
        for (size_t g : row.recipe) {
            acc = acc * originals[g];
        }
        if (acc.to_symplectic_row() != row.bits) {
            throw std::logic_error("standard form recipe does not reproduce its row");
        }
        s.regenerated.push_back(acc);
        s.base.signs.push_back(policy == SignPolicy::kStrict ? acc.phase_exp : 0);
    }
    return s;
}

StandardBlocks extract_blocks(const StandardForm &s) {
    size_t n = s.n(), k = s.k(), r = s.r;
    size_t mr = n - k - r;
    const BitMatrix &h = s.base.rows;
    StandardBlocks b;
    b.a1 = h.block(0, r, r, mr);
    b.a2 = h.block(0, n - k, r, k);
    b.b = h.block(0, n, r, r);
    b.c1 = h.block(0, n + r, r, mr);
    b.c2 = h.block(0, n + n - k, r, k);
    b.d = h.block(r, n, mr, r);
    b.e = h.block(r, n + n - k, mr, k);
    return b;
}

LogicalOperators logical_operators(const StandardForm &s) {
    size_t n = s.n(), k = s.k(), r = s.r;
    StandardBlocks b = extract_blocks(s);
    BitMatrix et = b.e.transpose();
    BitMatrix v1 = et * b.c1.transpose() + b.c2.transpose();
    BitMatrix a2t = b.a2.transpose();
    LogicalOperators l;
    for (size_t i = 0; i < k; i++) {
        PauliString xb(n);
        for (size_t j = 0; j < n - k - r; j++) {
            xb.x.set(r + j, et(i, j));
        }
        xb.x.set(n - k + i);
        for (size_t j = 0; j < r; j++) {
            xb.z.set(j, v1(i, j));
        }
        l.xbar.push_back(xb);

        PauliString zb(n);
        for (size_t j = 0; j < r; j++) {
            zb.z.set(j, a2t(i, j));
        }
        zb.z.set(n - k + i);
        l.zbar.push_back(zb);
    }
    return l;
}

PauliString sign_correction(const StandardForm &s, const LogicalOperators &l) {
    size_t n = s.n();
    // Unknown u = (px | pz); the symplectic product with a Pauli (x | z) is px.z + pz.x.
    std::vector<BitVector> eqs;
    std::vector<bool> rhs;
    auto add_constraint = [&](const PauliString &p, bool value) {
        BitVector e(2 * n);
        for (size_t j = 0; j < n; j++) {
            e.set(j, p.z[j]);
            e.set(n + j, p.x[j]);
        }
        eqs.push_back(e);
        rhs.push_back(value);
    };
    for (size_t i = 0; i < s.regenerated.size(); i++) {
        add_constraint(s.regenerated[i], s.regenerated[i].phase_exp != s.base.signs[i]);
    }
    for (const auto &p : l.xbar) {
        add_constraint(p, false);
    }
    for (const auto &p : l.zbar) {
        add_constraint(p, false);
    }
    std::vector<size_t> pivot_cols;
    size_t row = 0;
    for (size_t c = 0; c < 2 * n && row < eqs.size(); c++) {
        size_t p = row;
        while (p < eqs.size() && !eqs[p][c]) {
            p++;
        }
        if (p == eqs.size()) {
            continue;
        }
        std::swap(eqs[row], eqs[p]);
        std::swap(rhs[row], rhs[p]);
        for (size_t t = 0; t < eqs.size(); t++) {
            if (t != row && eqs[t][c]) {
                eqs[t] ^= eqs[row];
                rhs[t] = rhs[t] ^ rhs[row];
            }
        }
        pivot_cols.push_back(c);
        row++;
    }
    for (size_t t = row; t < eqs.size(); t++) {
        if (rhs[t]) {
            throw std::logic_error("sign correction system is inconsistent");
        }
    }
    PauliString out(n);
    for (size_t i = 0; i < pivot_cols.size(); i++) {
        if (rhs[i]) {
            size_t c = pivot_cols[i];
            if (c < n) {
                out.x.set(c);
            } else {
                out.z.set(c - n);
            }
        }
    }
    return out;
}

PauliString to_standard_order(const StandardForm &s, const PauliString &p) {
    return permute_qubits(p, s.qubit_perm);
}

PauliString to_input_order(const StandardForm &s, const PauliString &p) {
    PauliString q(p.n);
    q.phase_exp = p.phase_exp;
    for (size_t j = 0; j < p.n; j++) {
        q.x.set(s.qubit_perm[j] - 1, p.x[j]);
        q.z.set(s.qubit_perm[j] - 1, p.z[j]);
    }
    return q;
}

}  // namespace qecc
