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

// Command-line front end: synthesize, optimize, tabulate, verify, simulate, export.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "qecc/code_library.h"
#include "qecc/encoder.h"
#include "qecc/optimizer.h"
#include "qecc/simulator.h"
#include "qecc/syndrome.h"

using namespace qecc;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

/// Input the user can fix: bad files, bad flags, bad values.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open " + path);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string &path, const std::string &text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw InputError("cannot write " + path);
    }
    out << text;
}

Circuit load_circuit(const std::string &path) {
    try {
        return from_json(read_file(path));
    } catch (const std::invalid_argument &e) {
        throw InputError(path + ": " + e.what());
    }
}

struct LoadedCode {
    CodeDefinition def;
    StandardForm s;
    LogicalOperators l;
};

LoadedCode load_code(const std::string &name_or_path, SignPolicy policy = SignPolicy::kBinary) {
    LoadedCode c;
    try {
        c.def = resolve_code(name_or_path);
        c.s = standard_form(c.def.check_matrix(), policy);
    } catch (const std::invalid_argument &e) {
        throw InputError(e.what());
    }
    c.l = logical_operators(c.s);
    return c;
}

BitVector parse_bits(const std::string &text, size_t k) {
    if (text.empty()) {
        return BitVector(k);
    }
    BitVector b;
    try {
        b = BitVector::from_string(text);
    } catch (const std::invalid_argument &e) {
        throw InputError(std::string("--logical: ") + e.what());
    }
    if (b.size() != k) {
        throw InputError("--logical needs " + std::to_string(k) + " bits, got " + std::to_string(b.size()));
    }
    return b;
}

/// "Y@3" -> Y on qubit 3 (1-based) in input qubit order.
PauliString parse_error(const std::string &text, size_t n) {
    size_t at = text.find('@');
    if (at != 1 || text.size() < 3 || std::string("XYZ").find(text[0]) == std::string::npos) {
        throw InputError("--error expects P@q with P in X, Y, Z, got '" + text + "'");
    }
    size_t q = 0;
    try {
        q = std::stoul(text.substr(2));
    } catch (const std::exception &) {
        throw InputError("--error has a bad qubit index in '" + text + "'");
    }
    if (q < 1 || q > n) {
        throw InputError("--error qubit " + std::to_string(q) + " outside 1.." + std::to_string(n));
    }
    return PauliString::single(n, q, text[0]);
}

std::string amplitudes_json(const State &v) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (uint64_t i = 0; i < static_cast<uint64_t>(v.amplitudes().size()); i++) {
        auto a = v[i];
        if (std::abs(a) < kTolerance) {
            continue;
        }
        std::string label;
        for (size_t q = v.num_qubits(); q-- > 0;) {
            label += (i >> q) & 1 ? '1' : '0';
        }
        j.push_back({{"basis", label}, {"re", a.real()}, {"im", a.imag()}});
    }
    return j.dump(2) + "\n";
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Stabilizer code encoder synthesis, optimization and simulation"};
    app.require_subcommand(1);

    std::string code_arg, circuit_path, output, report_path, config_path, gates = "mixed", level, target;
    std::string format = "table", error_arg, logical, qasm_input;
    bool no_strip = false, strict = false;
    size_t search_budget = 0;

    auto *synth = app.add_subcommand("synth", "Synthesize an encoder circuit for a code");
    synth->add_option("code", code_arg, "Code name under data/codes or a .stab path")->required();
    synth->add_option("--gates", gates, "Gate set")->check(CLI::IsMember({"mixed", "cnot-cz"}));
    synth->add_flag("--no-strip", no_strip, "Keep gates that act on |0>");
    synth->add_flag("--strict-signs", strict, "Refuse codes whose reduced generators carry -1 signs");
    synth->add_option("-o,--output", output, "Circuit JSON output (default stdout)");

    auto *opt = app.add_subcommand("optimize", "Optimize a circuit");
    opt->add_option("circuit", circuit_path, "Circuit JSON")->required();
    opt->add_option("--config", config_path, "Pipeline config JSON");
    opt->add_option("--level", level, "Optimization level")->check(CLI::IsMember({"rules", "full"}));
    opt->add_option("--search-budget", search_budget, "Node budget for CNOT-block resynthesis");
    opt->add_option("--target-gates", target, "Target gate set")->check(CLI::IsMember({"cnot-h", "any"}));
    opt->add_option("-o,--output", output, "Optimized circuit JSON (default stdout)");
    opt->add_option("--report", report_path, "Report JSON output");

    auto *syn = app.add_subcommand("syndromes", "Print the single-qubit error syndrome table");
    syn->add_option("code", code_arg, "Code name or .stab path")->required();
    syn->add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json"}));
    syn->add_option("-o,--output", output, "Output file (default stdout)");

    auto *ver = app.add_subcommand("verify", "Check that a circuit encodes a code");
    ver->add_option("code", code_arg, "Code name or .stab path")->required();
    ver->add_option("circuit", circuit_path, "Circuit JSON")->required();

    auto *sim = app.add_subcommand("simulate", "Encode, inject an error and decode");
    sim->add_option("code", code_arg, "Code name or .stab path")->required();
    sim->add_option("--error", error_arg, "Single-qubit error P@q, qubits in input order");
    sim->add_option("--logical", logical, "Logical input bits, e.g. 101");
    sim->add_option("--amplitudes", output, "Write the encoded state amplitudes as JSON");

    auto *qasm = app.add_subcommand("export-qasm", "Convert circuit JSON to OpenQASM 2.0");
    qasm->add_option("circuit", qasm_input, "Circuit JSON")->required();
    qasm->add_option("-o,--output", output, "QASM output (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*synth) {
            LoadedCode c = load_code(code_arg, strict ? SignPolicy::kStrict : SignPolicy::kBinary);
            EncoderOptions options;
            options.gate_set = gates == "cnot-cz" ? EncoderGateSet::kCnotCz : EncoderGateSet::kMixed;
            options.strip = !no_strip;
            options.name = c.def.name + "_encoder";
            Circuit enc = synthesize_encoder(c.s, c.l, options);
            write_output(output, to_json(enc));
            std::cerr << gate_counts(enc).str() << "\n";
            return 0;
        }
        if (*opt) {
            Circuit c = load_circuit(circuit_path);
            OptimizerConfig config;
            if (!config_path.empty()) {
                try {
                    config = parse_optimizer_config(read_file(config_path));
                } catch (const std::invalid_argument &e) {
                    throw InputError(config_path + ": " + e.what());
                }
            }
            if (!level.empty()) {
                config.level = level == "rules" ? OptimizationLevel::kRules : OptimizationLevel::kFull;
            }
            if (search_budget) {
                config.search_budget = search_budget;
            }
            if (!target.empty()) {
                config.cnot_h_target = target == "cnot-h";
            }
            auto [out, report] = optimize(c, config);
            write_output(output, to_json(out));
            if (!report_path.empty()) {
                write_output(report_path, report.to_json());
            }
            std::cerr << report.before.str() << " -> " << report.after.str() << "\n";
            return 0;
        }
        if (*syn) {
            LoadedCode c = load_code(code_arg);
            SyndromeTable t = build_syndrome_table(c.s);
            write_output(output, format == "json" ? t.to_json() : t.to_text());
            return 0;
        }
        if (*ver) {
            LoadedCode c = load_code(code_arg);
            Circuit enc = load_circuit(circuit_path);
            if (enc.n != c.s.n()) {
                throw InputError("circuit has " + std::to_string(enc.n) + " qubits, code has " + std::to_string(c.s.n()));
            }
            size_t k = c.s.k(), bad = 0;
            for (uint64_t v = 0; v < (uint64_t{1} << k); v++) {
                BitVector bits(k);
                for (size_t i = 0; i < k; i++) {
                    bits.set(i, (v >> (k - 1 - i)) & 1);
                }
                State out = run(enc, encoder_input(enc, bits));
                if (!equal_up_to_global_phase(out, projector_encode(c.s, c.l, bits))) {
                    std::cout << "logical " << bits.str() << ": encoded state differs from the code's\n";
                    bad++;
                }
            }
            std::cout << ((uint64_t{1} << k) - bad) << "/" << (uint64_t{1} << k) << " logical basis states encode correctly\n";
            return bad ? kExitFailure : 0;
        }
        if (*sim) {
            LoadedCode c = load_code(code_arg);
            Circuit enc = synthesize_encoder(c.s, c.l);
            BitVector bits = parse_bits(logical, c.s.k());
            State encoded = run(enc, encoder_input(enc, bits));
            if (!output.empty()) {
                write_output(output, amplitudes_json(encoded));
            }
            if (error_arg.empty()) {
                std::cout << "encoded logical " << bits.str() << " on " << c.s.n() << " qubits\n";
                return 0;
            }
            PauliString error = to_standard_order(c.s, parse_error(error_arg, c.s.n()));
            SyndromeTable t = build_syndrome_table(c.s);
            BitVector syndrome = measure_syndrome(encoded, error, c.s);
            auto fix = decode(syndrome, t);
            bool ok = roundtrip_correct(c.s, enc, t, bits, error);
            std::cout << "syndrome " << syndrome.str() << " (" << syndrome_value(syndrome) << ")\n";
            std::cout << "correction " << (fix ? to_input_order(c.s, *fix).str() : "none") << "\n";
            std::cout << (ok ? "recovered" : "not recovered") << "\n";
            return ok ? 0 : kExitFailure;
        }
        if (*qasm) {
            write_output(output, to_qasm(load_circuit(qasm_input)));
            return 0;
        }
    } catch (const InputError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const SignDiagnosticError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return 0;
}
