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

#ifndef QECC_BIT_MATRIX_H
#define QECC_BIT_MATRIX_H

#include <string>
#include <vector>

#include "qecc/bits.h"

namespace qecc {

/// Dense matrix over GF(2) stored as packed rows.
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(size_t rows, size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {
    }

    static BitMatrix identity(size_t n);
    /// One '0'/'1' string per row; all strings must have the same length.
    static BitMatrix from_strings(const std::vector<std::string> &rows);

    size_t rows() const {
        return rows_.size();
    }
    size_t cols() const {
        return cols_;
    }
    bool operator()(size_t r, size_t c) const {
        return rows_[r][c];
    }
    void set(size_t r, size_t c, bool value = true) {
        rows_[r].set(c, value);
    }
    const BitVector &row(size_t r) const {
        return rows_[r];
    }
    BitVector &row(size_t r) {
        return rows_[r];
    }
    void append_row(const BitVector &row);

    /// Row t += row s.
    void add_row(size_t target, size_t source) {
        rows_[target] ^= rows_[source];
    }
    void swap_rows(size_t a, size_t b) {
        std::swap(rows_[a], rows_[b]);
    }

    BitMatrix transpose() const;
    BitMatrix block(size_t r0, size_t c0, size_t nrows, size_t ncols) const;
    BitMatrix operator*(const BitMatrix &rhs) const;
    BitMatrix operator+(const BitMatrix &rhs) const;
    size_t rank() const;
    bool is_identity() const;

    bool operator==(const BitMatrix &other) const = default;
    auto operator<=>(const BitMatrix &other) const = default;

    /// Rows as '0'/'1' strings.
    std::vector<std::string> to_strings() const;
    std::string str() const;

   private:
    size_t cols_ = 0;
    std::vector<BitVector> rows_;
};

}  // namespace qecc

#endif
