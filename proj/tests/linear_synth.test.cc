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

#include <random>

#include "gtest/gtest.h"

using namespace qecc;

namespace {

std::vector<Gate> cx_list(std::initializer_list<std::pair<size_t, size_t>> pairs) {
    std::vector<Gate> out;
    for (auto [c, t] : pairs) {
        out.push_back(Gate::controlled(GateKind::CX, c, t));
    }
    return out;
}

const std::vector<std::string> kT = {
    "10000000", "01000000", "00100101", "00011011", "11001111", "11000100", "10000010", "01000001",
};

}  // namespace

TEST(linear_synth, single_cnot_adds_control_row_to_target) {
    BitMatrix m = block_to_matrix(3, cx_list({{1, 3}}));
    EXPECT_EQ(m.to_strings(), (std::vector<std::string>{"100", "010", "101"}));
}

TEST(linear_synth, distribution_identity) {
    // CX(1,3) equals CX(1,2) CX(2,3) CX(1,2) CX(2,3).
    EXPECT_EQ(block_to_matrix(3, cx_list({{1, 3}})), block_to_matrix(3, cx_list({{1, 2}, {2, 3}, {1, 2}, {2, 3}})));
}

TEST(linear_synth, shaded_block_gives_t) {
    std::vector<Gate> block =
        cx_list({{1, 7}, {6, 5}, {6, 3}, {1, 6}, {8, 3}, {7, 5}, {2, 8}, {8, 5}, {2, 6}, {5, 4}, {6, 4}});
    EXPECT_EQ(block_to_matrix(8, block).to_strings(), kT);
}

TEST(linear_synth, gaussian_on_t) {
    BitMatrix t = BitMatrix::from_strings(kT);
    std::vector<Gate> g = resynthesize(t, {ResynthesisStrategy::kGaussian});
    EXPECT_EQ(g.size(), 14u);
    EXPECT_EQ(block_to_matrix(8, g), t);
    EXPECT_EQ(resynthesize(t, {ResynthesisStrategy::kGaussian}), g);
}

TEST(linear_synth, search_on_t) {
    BitMatrix t = BitMatrix::from_strings(kT);
    std::vector<Gate> s = resynthesize(t, {ResynthesisStrategy::kSearch});
    EXPECT_LE(s.size(), 10u);
    EXPECT_EQ(block_to_matrix(8, s), t);
}

TEST(linear_synth, identity_needs_no_gates) {
    EXPECT_TRUE(resynthesize(BitMatrix::identity(5)).empty());
    EXPECT_TRUE(resynthesize(BitMatrix::identity(5), {ResynthesisStrategy::kSearch}).empty());
}

TEST(linear_synth, errors) {
    EXPECT_THROW(resynthesize(BitMatrix::from_strings({"11", "11"})), std::invalid_argument);
    EXPECT_THROW(block_to_matrix(2, {Gate::single(GateKind::H, 1)}), std::invalid_argument);
    EXPECT_THROW(block_to_matrix(2, cx_list({{1, 3}})), std::invalid_argument);
}

TEST(linear_synth, search_finds_optimal_short_circuits) {
    // A swap needs exactly three CNOTs.
    BitMatrix swap = BitMatrix::from_strings({"01", "10"});
    EXPECT_EQ(resynthesize(swap, {ResynthesisStrategy::kSearch}).size(), 3u);
}

// Both strategies round-trip and search never loses to Gaussian elimination.
TEST(linear_synth, roundtrip_property) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 500; trial++) {
        size_t n = 2 + rng() % 7;
        std::vector<Gate> block;
        size_t len = rng() % 24;
        for (size_t i = 0; i < len; i++) {
            size_t a = 1 + rng() % n, b = 1 + rng() % (n - 1);
            b += b >= a;
            block.push_back(Gate::controlled(GateKind::CX, a, b));
        }
        BitMatrix m = block_to_matrix(n, block);
        std::vector<Gate> g = resynthesize(m, {ResynthesisStrategy::kGaussian});
        std::vector<Gate> s = resynthesize(m, {ResynthesisStrategy::kSearch, 20000});
        EXPECT_EQ(block_to_matrix(n, g), m);
        EXPECT_EQ(block_to_matrix(n, s), m);
        EXPECT_LE(s.size(), g.size());
    }
}
