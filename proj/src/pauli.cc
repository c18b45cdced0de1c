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

#include "qecc/pauli.h"

#include <stdexcept>

namespace qecc {

namespace {

void require_same_size(const PauliString &p, const PauliString &q) {
    if (p.n != q.n) {
        throw std::invalid_argument(
            "Pauli string size mismatch: " + std::to_string(p.n) + " vs " + std::to_string(q.n) + " qubits");
    }
}

}  // namespace

PauliString PauliString::parse(std::string_view text) {
    size_t pos = 0;
    uint8_t phase = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        phase = text[pos] == '-' ? 2 : 0;
        pos++;
    }
    if (pos < text.size() && text[pos] == 'i') {
        phase = (phase + 1) & 3;
        pos++;
    }
    if (pos == text.size()) {
        throw std::invalid_argument("Pauli string has no letters: '" + std::string(text) + "'");
    }
    PauliString p(text.size() - pos);
    p.phase_exp = phase;
    for (size_t j = 0; j < p.n; j++) {
        char c = text[pos + j];
        if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
            throw std::invalid_argument(
                "bad Pauli character '" + std::string(1, c) + "' at position " + std::to_string(pos + j + 1) +
                " in '" + std::string(text) + "'");
        }
        p.set_letter(j, c);
    }
    return p;
}

PauliString PauliString::single(size_t n, size_t q, char letter) {
    if (q < 1 || q > n) {
        throw std::out_of_range("qubit " + std::to_string(q) + " outside 1.." + std::to_string(n));
    }
    PauliString p(n);
    p.set_letter(q - 1, letter);
    return p;
}

PauliString PauliString::from_symplectic_row(const BitVector &row) {
    if (row.size() % 2) {
        throw std::invalid_argument("symplectic row must have even length");
    }
    size_t n = row.size() / 2;
    PauliString p(n);
    p.x = row.slice(0, n);
    p.z = row.slice(n, n);
    return p;
}

void PauliString::set_letter(size_t j, char letter) {
    switch (letter) {
        case 'I':
            x.set(j, false);
            z.set(j, false);
            break;
        case 'X':
            x.set(j, true);
            z.set(j, false);
            break;
        case 'Y':
            x.set(j, true);
            z.set(j, true);
            break;
        case 'Z':
            x.set(j, false);
            z.set(j, true);
            break;
        default:
            throw std::invalid_argument("bad Pauli letter '" + std::string(1, letter) + "'");
    }
}

size_t PauliString::weight() const {
    size_t w = 0;
    for (size_t k = 0; k < x.num_words(); k++) {
        w += std::popcount(x.word(k) | z.word(k));
    }
    return w;
}

BitVector PauliString::to_symplectic_row() const {
    BitVector row(2 * n);
    for (size_t j = 0; j < n; j++) {
        row.set(j, x[j]);
        row.set(n + j, z[j]);
    }
    return row;
}

std::string PauliString::str() const {
    static const char *prefixes[] = {"", "i", "-", "-i"};
    std::string s = prefixes[phase_exp & 3];
    for (size_t j = 0; j < n; j++) {
        s += letter(j);
    }
    return s;
}

PauliString PauliString::operator*(const PauliString &rhs) const {
    require_same_size(*this, rhs);
    // Per qubit, (i^{ab} X^a Z^b)(i^{cd} X^c Z^d) = i^{ab + cd + 2bc - ef} (i^{ef} X^e Z^f)
    // with e = a^c, f = b^d.
    PauliString r(n);
    int64_t ph = phase_exp + rhs.phase_exp;
    for (size_t k = 0; k < x.num_words(); k++) {
        uint64_t a = x.word(k), b = z.word(k), c = rhs.x.word(k), d = rhs.z.word(k);
        uint64_t e = a ^ c, f = b ^ d;
        ph += std::popcount(a & b) + std::popcount(c & d) + 2 * std::popcount(b & c);
        ph -= std::popcount(e & f);
        r.x.word(k) = e;
        r.z.word(k) = f;
    }
    r.phase_exp = static_cast<uint8_t>(((ph % 4) + 4) % 4);
    return r;
}

bool commutes(const PauliString &p, const PauliString &q) {
    require_same_size(p, q);
    uint64_t acc = 0;
    for (size_t k = 0; k < p.x.num_words(); k++) {
        acc ^= (p.x.word(k) & q.z.word(k)) ^ (p.z.word(k) & q.x.word(k));
    }
    return (std::popcount(acc) & 1) == 0;
}

PauliString multiply(const PauliString &p, const PauliString &q) {
    return p * q;
}

}  // namespace qecc
