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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "qecc/code_library.h"
#include "qecc/encoder.h"
#include "qecc/linear_synth.h"
#include "qecc/optimizer.h"
#include "qecc/rewrite_rules.h"
#include "qecc/simulator.h"
#include "qecc/syndrome.h"

using namespace qecc;

namespace {

const std::string kData = QECC_TEST_DATA_DIR;

nlohmann::json read_json(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    return nlohmann::json::parse(in);
}

std::string read_text(const std::string &path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Code {
    CodeDefinition def;
    StandardForm s;
    LogicalOperators l;
};

Code load(const std::string &name) {
    Code c;
    c.def = resolve_code(kData + "/codes/" + name + ".stab");
    c.s = standard_form(c.def.check_matrix());
    c.l = logical_operators(c.s);
    return c;
}

BitVector bits_of(uint64_t value, size_t k) {
    BitVector b(k);
    for (size_t i = 0; i < k; i++) {
        b.set(i, (value >> (k - 1 - i)) & 1);
    }
    return b;
}

/// Amplitude vector from signed kets sharing one magnitude.
State signed_kets(size_t n, const std::vector<std::string> &kets, double magnitude) {
    State v(n);
    v.amplitudes().setZero();
    for (const std::string &ket : kets) {
        uint64_t index = 0;
        for (char c : ket.substr(1)) {
            index = (index << 1) | static_cast<uint64_t>(c == '1');
        }
        v.amplitudes()(static_cast<Eigen::Index>(index)) = ket[0] == '-' ? -magnitude : magnitude;
    }
    return v;
}

bool states_equal(const State &a, const State &b) {
    return (a.amplitudes() - b.amplitudes()).cwiseAbs().maxCoeff() < kTolerance;
}

std::vector<Gate> cx_list(const nlohmann::json &pairs) {
    std::vector<Gate> out;
    for (const auto &p : pairs) {
        out.push_back(Gate::controlled(GateKind::CX, p[0].get<size_t>(), p[1].get<size_t>()));
    }
    return out;
}

struct Outcome {
    bool pass = true;
    std::string detail;
    void check(bool ok, const std::string &what) {
        if (!ok) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

bool standard_form_matches() {
    Code c = load("eight_qubit");
    nlohmann::json ref = read_json(kData + "/fixtures/eight_qubit_reference.json");
    auto t0 = std::chrono::steady_clock::now();
    StandardForm s = standard_form(c.def.check_matrix());
    double micros = std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - t0).count();
    Outcome o;
    std::vector<std::string> rows = s.base.rows.to_strings();
    for (size_t i = 0; i < rows.size(); i++) {
        std::string expected = ref["standard_form"][i].get<std::string>();
        expected.erase(expected.find('|'), 1);
        o.check(rows[i] == expected, "row " + std::to_string(i + 1) + " is " + rows[i]);
    }
    o.check(s.r == ref["rank"].get<size_t>(), "rank");
    o.check(s.qubit_perm == ref["qubit_perm"].get<std::vector<size_t>>(), "qubit permutation");
    o.check(micros < 1000.0, "took " + std::to_string(micros) + " us");
    std::cout << "    standard form in " << micros << " us\n";
    if (!o.pass) {
        std::cout << "    " << o.detail << "\n";
    }
    return o.pass;
}

bool logical_operators_match() {
    Code c = load("eight_qubit");
    nlohmann::json ref = read_json(kData + "/fixtures/eight_qubit_reference.json");
    Outcome o;
    for (size_t i = 0; i < 3; i++) {
        std::string x = c.l.xbar[i].str(), z = c.l.zbar[i].str();
        o.check(x == ref["logical_x"][i].get<std::string>(), "X" + std::to_string(i + 1) + " = " + x);
        o.check(z == ref["logical_z"][i].get<std::string>(), "Z" + std::to_string(i + 1) + " = " + z);
    }
    if (!o.pass) {
        std::cout << "    " << o.detail << "\n";
    }
    return o.pass;
}

bool encoder_counts_match() {
    Code eight = load("eight_qubit"), steane = load("steane"), thirteen = load("thirteen_qubit");
    EncoderOptions mixed{EncoderGateSet::kMixed};
    EncoderOptions cnot_cz{EncoderGateSet::kCnotCz};
    using K = GateKind;
    struct Row {
        std::string label;
        GateCounts actual, expected;
    };
    std::vector<Row> rows = {
        {"8-qubit mixed", gate_counts(synthesize_encoder(eight.s, eight.l, mixed)),
         make_counts({{K::H, 4}, {K::S, 1}, {K::CX, 8}, {K::CY, 7}, {K::CZ, 5}})},
        {"8-qubit cnot_cz", gate_counts(synthesize_encoder(eight.s, eight.l, cnot_cz)),
         make_counts({{K::H, 4}, {K::Z, 1}, {K::CX, 15}, {K::CZ, 12}})},
        {"Steane", gate_counts(synthesize_encoder(steane.s, steane.l, mixed)), make_counts({{K::H, 3}, {K::CX, 11}})},
        {"13-qubit cnot_cz", gate_counts(synthesize_encoder(thirteen.s, thirteen.l, cnot_cz)),
         make_counts({{K::H, 5}, {K::Z, 1}, {K::CX, 26}, {K::CZ, 24}})},
        {"8-qubit syndrome", gate_counts(synthesize_syndrome_circuit(eight.s)),
         make_counts({{K::H, 10}, {K::CX, 8}, {K::CY, 8}, {K::CZ, 16}})},
    };
    bool pass = true;
    for (const Row &r : rows) {
        std::cout << "    " << r.label << ": " << r.actual.str() << "\n";
        if (r.actual != r.expected) {
            std::cout << "    expected " << r.expected.str() << "\n";
            pass = false;
        }
    }
    return pass;
}

bool appendix_state_matches() {
    Code c = load("eight_qubit");
    nlohmann::json ref = read_json(kData + "/fixtures/eight_qubit_reference.json");
    Circuit enc = synthesize_encoder(c.s, c.l);
    Outcome o;
    State out = run(enc, encoder_input(enc, BitVector(3)));
    State expected = signed_kets(8, ref["encoded_000"].get<std::vector<std::string>>(), 0.25);
    o.check(states_equal(out, expected), "encoder output differs from the printed state");
    o.check(states_equal(projector_encode(c.s, c.l, BitVector(3)), expected), "projector state differs");

    // Through the first stabilizer: the prefix ending before the second Hadamard.
    Circuit prefix = enc;
    prefix.gates.clear();
    prefix.frame.reset();
    size_t hadamards = 0;
    for (const Gate &g : enc.gates) {
        if (g.kind == GateKind::H && ++hadamards == 2) {
            break;
        }
        prefix.gates.push_back(g);
    }
    State partial = run(prefix, encoder_input(enc, BitVector(3)));
    State partial_expected = signed_kets(
        8, ref["partial_state"]["1/sqrt2"].get<std::vector<std::string>>(), 1.0 / std::sqrt(2.0));
    o.check(states_equal(partial, partial_expected), "state after the first stabilizer differs");
    if (!o.pass) {
        std::cout << "    " << o.detail << "\n";
    }
    return o.pass;
}

bool encoded_states_stabilized() {
    bool pass = true;
    for (const char *name : {"eight_qubit", "steane", "thirteen_qubit"}) {
        Code c = load(name);
        Circuit enc = synthesize_encoder(c.s, c.l);
        size_t k = c.s.k(), states = 0, checks = 0;
        std::vector<PauliString> gens = c.s.generators();
        for (uint64_t v = 0; v < (uint64_t{1} << k); v++) {
            BitVector bits = bits_of(v, k);
            State out = run(enc, encoder_input(enc, bits));
            for (const PauliString &g : gens) {
                checks++;
                if (!check_stabilized(out, g)) {
                    pass = false;
                    std::cout << "    " << name << " state " << bits.str() << " not fixed by " << g.str() << "\n";
                }
            }
            if (!equal_up_to_global_phase(out, projector_encode(c.s, c.l, bits))) {
                pass = false;
                std::cout << "    " << name << " state " << bits.str() << " differs from projector encoding\n";
            }
            states++;
        }
        std::cout << "    " << name << ": " << states << " states, " << checks << " generator checks\n";
    }
    return pass;
}

bool syndrome_table_matches() {
    Code c = load("eight_qubit");
    nlohmann::json ref = read_json(kData + "/fixtures/eight_qubit_reference.json");
    SyndromeTable table = build_syndrome_table(c.s);
    Outcome o;
    o.check(table.entries.size() == ref["syndrome_table"].size(), "row count");
    for (size_t i = 0; i < table.entries.size() && i < ref["syndrome_table"].size(); i++) {
        const SyndromeEntry &e = table.entries[i];
        const auto &row = ref["syndrome_table"][i];
        o.check(e.error.str() == row[0].get<std::string>(), "row " + std::to_string(i + 1) + " error");
        o.check(e.syndrome.str() == row[1].get<std::string>(), "row " + std::to_string(i + 1) + " bits");
        o.check(syndrome_value(e.syndrome) == row[2].get<uint64_t>(), "row " + std::to_string(i + 1) + " value");
    }
    Circuit enc = synthesize_encoder(c.s, c.l);
    size_t agree = 0;
    for (const SyndromeEntry &e : table.entries) {
        if (e.error.is_identity_up_to_phase()) {
            continue;
        }
        State encoded = run(enc, encoder_input(enc, BitVector(3)));
        agree += measure_syndrome(encoded, e.error, c.s) == syndrome_of(e.error, c.s);
    }
    std::cout << "    measured syndrome agrees on " << agree << "/24 errors\n";
    o.check(agree == 24, "measured syndromes");
    if (!o.pass) {
        std::cout << "    " << o.detail << "\n";
    }
    return o.pass;
}

bool roundtrip_corrects() {
    bool pass = true;
    for (const char *name : {"eight_qubit", "steane"}) {
        Code c = load(name);
        Circuit enc = synthesize_encoder(c.s, c.l);
        SyndromeTable table = build_syndrome_table(c.s);
        size_t ok = 0, total = 0;
        for (uint64_t v = 0; v < (uint64_t{1} << c.s.k()); v++) {
            for (const SyndromeEntry &e : table.entries) {
                if (e.error.is_identity_up_to_phase()) {
                    continue;
                }
                total++;
                ok += roundtrip_correct(c.s, enc, table, bits_of(v, c.s.k()), e.error);
            }
        }
        std::cout << "    " << name << ": " << ok << "/" << total << " corrected\n";
        pass = pass && ok == total;
    }
    return pass;
}

bool cnot_resynthesis() {
    nlohmann::json ref = read_json(kData + "/fixtures/cnot_block.json");
    BitMatrix t = BitMatrix::from_strings(ref["matrix"].get<std::vector<std::string>>());
    Outcome o;
    o.check(block_to_matrix(8, cx_list(ref["block"])) == t, "11-op block does not give T");
    o.check(block_to_matrix(8, cx_list(ref["short_witness"])) == t, "10-op witness does not give T");
    std::vector<Gate> gaussian = resynthesize(t, {ResynthesisStrategy::kGaussian});
    std::vector<Gate> search = resynthesize(t, {ResynthesisStrategy::kSearch});
    std::cout << "    gaussian " << gaussian.size() << " CX, search " << search.size() << " CX\n";
    o.check(gaussian.size() == ref["gaussian_length"].get<size_t>(), "gaussian length");
    o.check(block_to_matrix(8, gaussian) == t, "gaussian result differs from T");
    o.check(search.size() <= 10, "search length");
    o.check(block_to_matrix(8, search) == t, "search result differs from T");
    if (!o.pass) {
        std::cout << "    " << o.detail << "\n";
    }
    return o.pass;
}

bool optimizer_targets() {
    struct Target {
        const char *code;
        EncoderGateSet gate_set;
        size_t h;
        size_t cx;
    };
    std::vector<Target> targets = {
        {"eight_qubit", EncoderGateSet::kMixed, 4, 18},
        {"steane", EncoderGateSet::kMixed, 3, 10},
        {"thirteen_qubit", EncoderGateSet::kCnotCz, 5, 41},
    };
    bool pass = true;
    for (const Target &t : targets) {
        Code c = load(t.code);
        Circuit enc = synthesize_encoder(c.s, c.l, {t.gate_set});
        OptimizerConfig config = parse_optimizer_config(read_text(kData + "/pipelines/" + t.code + ".json"));
        auto [opt, report] = optimize(enc, config);
        GateCounts counts = report.after;
        bool only_h_cx = counts.total() == counts[GateKind::H] + counts[GateKind::CX];
        bool ok = report.verified && report.target_reached && only_h_cx && counts[GateKind::H] == t.h &&
                  counts[GateKind::CX] <= t.cx && circuits_equivalent(enc, opt, EquivalenceScope::kAncillaRestricted);
        std::cout << "    " << t.code << ": " << report.before.str() << " -> " << counts.str() << " (target H:" << t.h
                  << ", CX<=" << t.cx << ")\n";
        Circuit witness = from_json(read_text(kData + "/fixtures/" + t.code + "_optimized.json"));
        bool witness_ok = witness.gates == opt.gates &&
                          circuits_equivalent(enc, witness, EquivalenceScope::kAncillaRestricted);
        if (!witness_ok) {
            std::cout << "    stored witness for " << t.code << " does not match this run\n";
        }
        ok = ok && witness_ok;
        pass = pass && ok;
    }

    Code eight = load("eight_qubit");
    Circuit enc = synthesize_encoder(eight.s, eight.l);
    auto [rules_only, report] = optimize(enc, parse_optimizer_config(read_text(kData + "/pipelines/rules_only.json")));
    std::cout << "    eight_qubit rules only: " << report.after.str() << " (target CX<=19)\n";
    pass = pass && report.verified && report.after[GateKind::CX] <= 19 && report.after[GateKind::H] == 4;
    return pass;
}

bool property_suites() {
    Outcome o;
    try {
        const auto &rules = rewrite_rules();
        std::cout << "    " << rules.size() << " rewrite rules sound\n";
    } catch (const std::logic_error &e) {
        o.check(false, e.what());
    }

    std::mt19937_64 rng(2026);
    size_t roundtrips = 0;
    for (size_t trial = 0; trial < 500; trial++) {
        size_t n = 1 + rng() % 8;
        std::vector<Gate> block;
        size_t len = rng() % 20;
        for (size_t i = 0; i < len && n > 1; i++) {
            size_t a = 1 + rng() % n, b = 1 + rng() % (n - 1);
            b += b >= a;
            block.push_back(Gate::controlled(GateKind::CX, a, b));
        }
        BitMatrix m = block_to_matrix(n, block);
        std::vector<Gate> g = resynthesize(m, {ResynthesisStrategy::kGaussian});
        std::vector<Gate> s = resynthesize(m, {ResynthesisStrategy::kSearch, 20000});
        roundtrips += block_to_matrix(n, g) == m && block_to_matrix(n, s) == m && s.size() <= g.size();
    }
    o.check(roundtrips == 500, "resynthesis round trip " + std::to_string(roundtrips) + "/500");

    Code c = load("eight_qubit");
    size_t linear = 0;
    const char letters[] = "IXYZ";
    for (size_t trial = 0; trial < 200; trial++) {
        PauliString a(8), b(8);
        for (size_t q = 0; q < 8; q++) {
            a.set_letter(q, letters[rng() % 4]);
            b.set_letter(q, letters[rng() % 4]);
        }
        linear += syndrome_of(a * b, c.s) == (syndrome_of(a, c.s) ^ syndrome_of(b, c.s));
    }
    o.check(linear == 200, "syndrome linearity " + std::to_string(linear) + "/200");

    size_t normed = 0;
    const GateKind kinds[] = {GateKind::H, GateKind::S, GateKind::X, GateKind::Y,
                              GateKind::Z, GateKind::CX, GateKind::CY, GateKind::CZ};
    for (size_t trial = 0; trial < 100; trial++) {
        Circuit circ("random", 6);
        for (size_t i = 0; i < 50; i++) {
            GateKind k = kinds[rng() % 8];
            size_t a = 1 + rng() % 6, b = 1 + rng() % 5;
            b += b >= a;
            circ.append(is_two_qubit(k) ? Gate::controlled(k, a, b) : Gate::single(k, a));
        }
        State v = run(circ, State::basis(6, rng() % 64));
        normed += std::abs(v.norm() - 1.0) < kTolerance;
    }
    o.check(normed == 100, "norm preservation " + std::to_string(normed) + "/100");
    std::cout << "    resynthesis " << roundtrips << "/500, syndrome linearity " << linear << "/200, norm " << normed
              << "/100\n";
    if (!o.pass) {
        std::cout << "    " << o.detail << "\n";
    }
    return o.pass;
}

}  // namespace

int main() {
    std::vector<std::pair<std::string, std::function<bool()>>> criteria = {
        {"standard form of the 8-qubit code", standard_form_matches},
        {"logical operators of the 8-qubit code", logical_operators_match},
        {"encoder and syndrome circuit gate counts", encoder_counts_match},
        {"encoded |000> state of the 8-qubit code", appendix_state_matches},
        {"every encoded basis state is stabilized", encoded_states_stabilized},
        {"8-qubit syndrome table and measured syndromes", syndrome_table_matches},
        {"single-qubit error round trip", roundtrip_corrects},
        {"CNOT block resynthesis", cnot_resynthesis},
        {"optimizer end-state targets", optimizer_targets},
        {"property suites", property_suites},
    };
    size_t failed = 0;
    for (size_t i = 0; i < criteria.size(); i++) {
        bool ok = false;
        auto t0 = std::chrono::steady_clock::now();
        try {
            ok = criteria[i].second();
        } catch (const std::exception &e) {
            std::cout << "    exception: " << e.what() << "\n";
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << (ok ? "PASS" : "FAIL") << " " << (i + 1) << ". " << criteria[i].first << " (" << secs << " s)\n";
        failed += !ok;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
    return failed ? 1 : 0;
}
