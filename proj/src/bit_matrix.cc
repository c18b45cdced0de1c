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

#include "qecc/bit_matrix.h"

#include <stdexcept>

namespace qecc {

BitMatrix BitMatrix::identity(size_t n) {
    BitMatrix m(n, n);
    for (size_t i = 0; i < n; i++) {
        m.set(i, i);
    }
    return m;
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string> &rows) {
    BitMatrix m(0, rows.empty() ? 0 : rows[0].size());
    for (const auto &r : rows) {
        if (r.size() != m.cols_) {
            throw std::invalid_argument("ragged bit matrix rows");
        }
        m.append_row(BitVector::from_string(r));
    }
    return m;
}

void BitMatrix::append_row(const BitVector &row) {
    if (rows_.empty() && cols_ == 0) {
        cols_ = row.size();
    }
    if (row.size() != cols_) {
        throw std::invalid_argument("row length does not match column count");
    }
    rows_.push_back(row);
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(cols_, rows());
    for (size_t r = 0; r < rows(); r++) {
        for (size_t c = 0; c < cols_; c++) {
            if ((*this)(r, c)) {
                t.set(c, r);
            }
        }
    }
    return t;
}

BitMatrix BitMatrix::block(size_t r0, size_t c0, size_t nrows, size_t ncols) const {
    BitMatrix b(nrows, ncols);
    for (size_t r = 0; r < nrows; r++) {
        b.rows_[r] = rows_[r0 + r].slice(c0, ncols);
    }
    return b;
}

BitMatrix BitMatrix::operator*(const BitMatrix &rhs) const {
    if (cols_ != rhs.rows()) {
        throw std::invalid_argument("bit matrix product dimension mismatch");
    }
    BitMatrix p(rows(), rhs.cols());
    for (size_t r = 0; r < rows(); r++) {
        for (size_t k = 0; k < cols_; k++) {
            if ((*this)(r, k)) {
                p.rows_[r] ^= rhs.rows_[k];
            }
        }
    }
    return p;
}

BitMatrix BitMatrix::operator+(const BitMatrix &rhs) const {
    if (rows() != rhs.rows() || cols_ != rhs.cols_) {
        throw std::invalid_argument("bit matrix sum dimension mismatch");
    }
    BitMatrix s = *this;
    for (size_t r = 0; r < rows(); r++) {
        s.rows_[r] ^= rhs.rows_[r];
    }
    return s;
}

size_t BitMatrix::rank() const {
    BitMatrix m = *this;
    size_t rank = 0;
    for (size_t c = 0; c < cols_ && rank < rows(); c++) {
        size_t pivot = rank;
        while (pivot < rows() && !m(pivot, c)) {
            pivot++;
        }
        if (pivot == rows()) {
            continue;
        }
        m.swap_rows(rank, pivot);
        for (size_t r = 0; r < rows(); r++) {
            if (r != rank && m(r, c)) {
                m.add_row(r, rank);
            }
        }
        rank++;
    }
    return rank;
}

bool BitMatrix::is_identity() const {
    return rows() == cols_ && *this == identity(cols_);
}

std::vector<std::string> BitMatrix::to_strings() const {
    std::vector<std::string> out;
    for (const auto &r : rows_) {
        out.push_back(r.str());
    }
    return out;
}

std::string BitMatrix::str() const {
    std::string s;
    for (const auto &r : rows_) {
        s += r.str();
        s += '\n';
    }
    return s;
}

}  // namespace qecc
