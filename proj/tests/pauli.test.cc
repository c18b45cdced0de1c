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

#include <random>

#include "gtest/gtest.h"
#include "qecc/simulator.h"

using namespace qecc;

TEST(pauli, parse_and_print) {
    EXPECT_EQ(PauliString::parse("XZIY").str(), "XZIY");
    EXPECT_EQ(PauliString::parse("+XZIY").str(), "XZIY");
    EXPECT_EQ(PauliString::parse("-iZZ").str(), "-iZZ");
    EXPECT_EQ(PauliString::parse("iX").phase_exp, 1);
    EXPECT_EQ(PauliString::parse("-X").phase_exp, 2);
    EXPECT_EQ(PauliString::parse("IXYZ").weight(), 3u);
}

TEST(pauli, parse_rejects_bad_letters) {
    EXPECT_THROW(PauliString::parse("XQZ"), std::invalid_argument);
    EXPECT_THROW(PauliString::parse(""), std::invalid_argument);
    EXPECT_THROW(PauliString::parse("-"), std::invalid_argument);
    try {
        PauliString::parse("XXA");
        FAIL();
    } catch (const std::invalid_argument &e) {
        EXPECT_NE(std::string(e.what()).find('3'), std::string::npos) << e.what();
    }
}

TEST(pauli, single_qubit_products) {
    auto p = [](const char *s) { return PauliString::parse(s); };
    EXPECT_EQ((p("X") * p("Z")).str(), "-iY");
    EXPECT_EQ((p("Z") * p("X")).str(), "iY");
    EXPECT_EQ((p("Y") * p("Y")).str(), "I");
    EXPECT_EQ((p("X") * p("Y")).str(), "iZ");
    EXPECT_EQ((p("Y") * p("Z")).str(), "iX");
    EXPECT_EQ((p("-iXZ") * p("iZX")).str(), "YY");
}

TEST(pauli, commutation) {
    EXPECT_TRUE(commutes(PauliString::parse("XX"), PauliString::parse("ZZ")));
    EXPECT_FALSE(commutes(PauliString::parse("XI"), PauliString::parse("ZI")));
    EXPECT_TRUE(commutes(PauliString::parse("XXXXXXXX"), PauliString::parse("IXIXYZYZ")));
    EXPECT_FALSE(commutes(PauliString::parse("XYZ"), PauliString::parse("ZZX")));
}

TEST(pauli, symplectic_row_round_trip) {
    PauliString p = PauliString::parse("XZIY");
    EXPECT_EQ(p.to_symplectic_row().str(), "10010101");
    EXPECT_EQ(PauliString::from_symplectic_row(p.to_symplectic_row()).str(), "XZIY");
    EXPECT_EQ(PauliString::single(4, 3, 'Y').str(), "IIYI");
}

TEST(pauli, size_mismatch_throws) {
    EXPECT_THROW(PauliString::parse("XX") * PauliString::parse("XXX"), std::invalid_argument);
}

// The product computed symbolically matches the product of the operators.
TEST(pauli, product_matches_statevector_property) {
    std::mt19937_64 rng(7);
    const char letters[] = "IXYZ";
    for (int trial = 0; trial < 200; trial++) {
        PauliString a(4), b(4);
        for (size_t q = 0; q < 4; q++) {
            a.set_letter(q, letters[rng() % 4]);
            b.set_letter(q, letters[rng() % 4]);
        }
        a.phase_exp = rng() % 4;
        b.phase_exp = rng() % 4;
        State v = State::basis(4, rng() % 16);
        State sequential = v;
        sequential.apply(b);
        sequential.apply(a);
        State combined = v;
        combined.apply(a * b);
        EXPECT_LT((sequential.amplitudes() - combined.amplitudes()).cwiseAbs().maxCoeff(), kTolerance)
            << a.str() << " * " << b.str();
        EXPECT_EQ(commutes(a, b), (a * b).phase_exp == (b * a).phase_exp);
    }
}
