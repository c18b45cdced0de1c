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

#include "qecc/syndrome.h"

#include "json.hpp"

namespace qecc {

BitVector syndrome_of(const PauliString &error, const StandardForm &s) {
    if (error.n != s.n()) {
        throw std::invalid_argument(
            "error has " + std::to_string(error.n) + " qubits but the code has " + std::to_string(s.n()));
    }
    size_t m = s.base.num_generators();
    BitVector out(m);
    for (size_t i = 0; i < m; i++) {
        out.set(i, !commutes(error, s.base.generator(i)));
    }
    return out;
}

uint64_t syndrome_value(const BitVector &syndrome) {
    uint64_t v = 0;
    for (size_t i = 0; i < syndrome.size(); i++) {
        v = (v << 1) | static_cast<uint64_t>(syndrome[i]);
    }
    return v;
}

SyndromeCollisionError::SyndromeCollisionError(const PauliString &a, const PauliString &b, const BitVector &syndrome)
    : std::runtime_error(
          "errors " + a.str() + " and " + b.str() + " share syndrome " + syndrome.str() +
          "; the code cannot correct every single-qubit error"),
      first(a),
      second(b) {
}

SyndromeTable build_syndrome_table(const StandardForm &s) {
    SyndromeTable t;
    t.n = s.n();
    for (size_t q = 1; q <= t.n; q++) {
        for (char letter : {'X', 'Z', 'Y'}) {
            PauliString e = PauliString::single(t.n, q, letter);
            t.entries.push_back({e, syndrome_of(e, s)});
        }
    }
    PauliString id(t.n);
    t.entries.push_back({id, syndrome_of(id, s)});
    for (const auto &entry : t.entries) {
        auto [it, inserted] = t.by_syndrome.emplace(entry.syndrome, entry.error);
        if (!inserted) {
            throw SyndromeCollisionError(it->second, entry.error, entry.syndrome);
        }
    }
    return t;
}

std::optional<PauliString> decode(const BitVector &syndrome, const SyndromeTable &table) {
    auto it = table.by_syndrome.find(syndrome);
    if (it == table.by_syndrome.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::string SyndromeTable::to_text() const {
    size_t m = entries.empty() ? 0 : entries[0].syndrome.size();
    std::string out;
    std::string header(2 * n, ' ');
    header += "|";
    for (size_t i = 0; i < m; i++) {
        std::string col = "M" + std::to_string(i + 1);
        header += " " + col;
    }
    header += " | Decimal value\n";
    out += header;
    for (const auto &e : entries) {
        std::string line;
        for (size_t j = 0; j < n; j++) {
            line += e.error.letter(j);
            line += ' ';
        }
        line += "|";
        for (size_t i = 0; i < m; i++) {
            std::string col = "M" + std::to_string(i + 1);
            line += std::string(col.size(), ' ');
            line += e.syndrome[i] ? '1' : '0';
        }
        line += " | " + std::to_string(syndrome_value(e.syndrome)) + "\n";
        out += line;
    }
    return out;
}

std::string SyndromeTable::to_json() const {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto &e : entries) {
        nlohmann::ordered_json row;
        row["error"] = e.error.str();
        row["syndrome"] = e.syndrome.str();
        row["decimal"] = syndrome_value(e.syndrome);
        j.push_back(row);
    }
    return j.dump(2) + "\n";
}

}  // namespace qecc
