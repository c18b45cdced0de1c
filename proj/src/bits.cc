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

#include "qecc/bits.h"

#include <stdexcept>

namespace qecc {

BitVector BitVector::from_string(std::string_view text) {
    BitVector v(text.size());
    for (size_t i = 0; i < text.size(); i++) {
        if (text[i] == '1') {
            v.set(i);
        } else if (text[i] != '0') {
            throw std::invalid_argument("bit string has a character other than 0/1 at position " + std::to_string(i));
        }
    }
    return v;
}

BitVector &BitVector::operator^=(const BitVector &other) {
    if (other.num_bits_ != num_bits_) {
        throw std::invalid_argument("bit vector length mismatch");
    }
    for (size_t w = 0; w < words_.size(); w++) {
        words_[w] ^= other.words_[w];
    }
    return *this;
}

BitVector BitVector::operator^(const BitVector &other) const {
    BitVector r = *this;
    r ^= other;
    return r;
}

BitVector BitVector::operator&(const BitVector &other) const {
    if (other.num_bits_ != num_bits_) {
        throw std::invalid_argument("bit vector length mismatch");
    }
    BitVector r = *this;
    for (size_t w = 0; w < words_.size(); w++) {
        r.words_[w] &= other.words_[w];
    }
    return r;
}

size_t BitVector::popcount() const {
    size_t total = 0;
    for (uint64_t w : words_) {
        total += std::popcount(w);
    }
    return total;
}

bool BitVector::any() const {
    for (uint64_t w : words_) {
        if (w) {
            return true;
        }
    }
    return false;
}

bool BitVector::dot(const BitVector &other) const {
    if (other.num_bits_ != num_bits_) {
        throw std::invalid_argument("bit vector length mismatch");
    }
    uint64_t acc = 0;
    for (size_t w = 0; w < words_.size(); w++) {
        acc ^= words_[w] & other.words_[w];
    }
    return std::popcount(acc) & 1;
}

BitVector BitVector::slice(size_t start, size_t len) const {
    BitVector r(len);
    for (size_t i = 0; i < len; i++) {
        if ((*this)[start + i]) {
            r.set(i);
        }
    }
    return r;
}

void BitVector::swap_bits(size_t a, size_t b) {
    bool va = (*this)[a];
    bool vb = (*this)[b];
    set(a, vb);
    set(b, va);
}

std::string BitVector::str() const {
    std::string s(num_bits_, '0');
    for (size_t i = 0; i < num_bits_; i++) {
        if ((*this)[i]) {
            s[i] = '1';
        }
    }
    return s;
}

}  // namespace qecc
