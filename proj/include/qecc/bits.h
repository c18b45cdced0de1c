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

#ifndef QECC_BITS_H
#define QECC_BITS_H

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qecc {

/// Fixed-length bit sequence packed into 64-bit words.
///
/// Bits past `size()` in the last word are kept zero so that word-level
/// comparisons and popcounts need no masking.
class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(size_t num_bits) : num_bits_(num_bits), words_((num_bits + 63) / 64, 0) {
    }

    /// Parses a string of '0'/'1' characters; index 0 is the first character.
    static BitVector from_string(std::string_view text);

    size_t size() const {
        return num_bits_;
    }
    size_t num_words() const {
        return words_.size();
    }
    uint64_t word(size_t w) const {
        return words_[w];
    }
    uint64_t &word(size_t w) {
        return words_[w];
    }

    bool operator[](size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }
    void set(size_t i, bool value = true) {
        uint64_t m = uint64_t{1} << (i & 63);
        if (value) {
            words_[i >> 6] |= m;
        } else {
            words_[i >> 6] &= ~m;
        }
    }
    void flip(size_t i) {
        words_[i >> 6] ^= uint64_t{1} << (i & 63);
    }

    BitVector &operator^=(const BitVector &other);
    BitVector operator^(const BitVector &other) const;
    BitVector operator&(const BitVector &other) const;

    size_t popcount() const;
    bool any() const;
    bool none() const {
        return !any();
    }
    /// Parity of the bitwise AND with `other`.
    bool dot(const BitVector &other) const;

    /// Bits [start, start+len) as a new vector.
    BitVector slice(size_t start, size_t len) const;
    void swap_bits(size_t a, size_t b);

    bool operator==(const BitVector &other) const = default;
    auto operator<=>(const BitVector &other) const = default;

    std::string str() const;

   private:
    size_t num_bits_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace qecc

#endif
