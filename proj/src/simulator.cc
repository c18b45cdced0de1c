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

#include "qecc/simulator.h"

#include "qecc/encoder.h"

namespace qecc {

State run(const Circuit &c, std::string_view basis_label) {
    return run(c, State::basis(basis_label));
}

State projector_encode(const StandardForm &s, const LogicalOperators &l, const BitVector &bits) {
    size_t n = s.n();
    if (bits.size() != s.k()) {
        throw std::invalid_argument("expected " + std::to_string(s.k()) + " logical bits");
    }
    std::vector<PauliString> gens = s.generators();
    // Expand the product of (I + M_i) over all subsets; each term maps |0...0>
    // to a single basis ket.
    State v(n);
    v.amplitudes().setZero();
    size_t m = gens.size();
    for (uint64_t subset = 0; subset < (uint64_t{1} << m); subset++) {
        PauliString p(n);
        for (size_t i = 0; i < m; i++) {
            if (subset & (uint64_t{1} << i)) {
                p = p * gens[i];
            }
        }
        State term(n);
        term.apply(p);
        v.amplitudes() += term.amplitudes();
    }
    for (size_t i = 0; i < bits.size(); i++) {
        if (bits[i]) {
            v.apply(l.xbar[i]);
        }
    }
    double norm = v.norm();
    if (norm < 1e-9) {
        throw std::domain_error("projector annihilates |0...0>; generator signs are inconsistent with it");
    }
    v.amplitudes() /= norm;
    return v;
}

bool check_stabilized(const State &v, const PauliString &g) {
    State w = v;
    w.apply(g);
    return (w.amplitudes() - v.amplitudes()).cwiseAbs().maxCoeff() <= kTolerance;
}

namespace {

/// Finds the phase mapping b onto a from their first significant amplitude.
std::optional<std::complex<double>> phase_between(const State &a, const State &b) {
    const auto &aa = a.amplitudes();
    const auto &bb = b.amplitudes();
    for (Eigen::Index k = 0; k < bb.size(); k++) {
        if (std::abs(bb(k)) > 1e-6) {
            if (std::abs(aa(k)) < 1e-9) {
                return std::nullopt;
            }
            return aa(k) / bb(k);
        }
    }
    return std::complex<double>(1, 0);
}

bool close(const State &a, const State &b, std::complex<double> phase) {
    if (std::abs(std::abs(phase) - 1) > 1e-9) {
        return false;
    }
    return (a.amplitudes() - phase * b.amplitudes()).cwiseAbs().maxCoeff() <= kTolerance;
}

}  // namespace

bool equal_up_to_global_phase(const State &a, const State &b) {
    if (a.num_qubits() != b.num_qubits()) {
        return false;
    }
    auto phase = phase_between(a, b);
    return phase && close(a, b, *phase);
}

bool circuits_equivalent(const Circuit &a, const Circuit &b, EquivalenceScope scope, bool up_to_global_phase) {
    if (a.n != b.n) {
        return false;
    }
    std::vector<uint64_t> inputs;
    if (scope == EquivalenceScope::kFull) {
        for (uint64_t k = 0; k < (uint64_t{1} << a.n); k++) {
            inputs.push_back(k);
        }
    } else {
        std::vector<size_t> free_qubits;
        for (size_t q = 1; q <= a.n; q++) {
            if (a.roles[q - 1] != QubitRole::kAncillaZero) {
                free_qubits.push_back(q);
            }
        }
        for (uint64_t v = 0; v < (uint64_t{1} << free_qubits.size()); v++) {
            uint64_t index = 0;
            for (size_t i = 0; i < free_qubits.size(); i++) {
                if (v & (uint64_t{1} << (free_qubits.size() - 1 - i))) {
                    index |= uint64_t{1} << (a.n - free_qubits[i]);
                }
            }
            inputs.push_back(index);
        }
    }
    std::optional<std::complex<double>> phase;
    if (!up_to_global_phase) {
        phase = std::complex<double>(1, 0);
    }
    for (uint64_t index : inputs) {
        State ra = run(a, State::basis(a.n, index));
        State rb = run(b, State::basis(b.n, index));
        if (!phase) {
            phase = phase_between(ra, rb);
            if (!phase) {
                return false;
            }
        }
        if (!close(ra, rb, *phase)) {
            return false;
        }
    }
    return true;
}

BitVector measure_syndrome(const State &encoded, const PauliString &error, const StandardForm &s) {
    size_t n = s.n();
    if (encoded.num_qubits() != n) {
        throw std::invalid_argument("encoded state size does not match the code");
    }
    State data = encoded;
    data.apply(error);
    Circuit sc = synthesize_syndrome_circuit(s);
    size_t m = sc.n - n;
    State::Amplitudes amps = State::Amplitudes::Zero(Eigen::Index{1} << sc.n);
    for (Eigen::Index k = 0; k < data.amplitudes().size(); k++) {
        amps(k << m) = data.amplitudes()(k);
    }
    State out = run(sc, State(sc.n, std::move(amps)));
    BitVector syndrome(m);
    for (size_t i = 0; i < m; i++) {
        uint64_t mask = out.mask(n + i + 1);
        double p1 = 0;
        for (Eigen::Index k = 0; k < out.amplitudes().size(); k++) {
            if (static_cast<uint64_t>(k) & mask) {
                p1 += std::norm(out.amplitudes()(k));
            }
        }
        if (p1 > kTolerance && p1 < 1 - kTolerance) {
            throw std::runtime_error(
                "ancilla " + std::to_string(i + 1) + " is not in a basis state (P(1) = " + std::to_string(p1) +
                "); the input is not a codeword");
        }
        syndrome.set(i, p1 >= 0.5);
    }
    return syndrome;
}

State encoder_input(const Circuit &encoder, const BitVector &bits) {
    std::string label(encoder.n, '0');
    size_t next = 0;
    for (size_t q = 1; q <= encoder.n; q++) {
        if (encoder.roles[q - 1] == QubitRole::kLogicalInput) {
            if (next >= bits.size()) {
                throw std::invalid_argument("not enough logical bits for the encoder");
            }
            label[q - 1] = bits[next++] ? '1' : '0';
        }
    }
    if (next != bits.size()) {
        throw std::invalid_argument("too many logical bits for the encoder");
    }
    return State::basis(label);
}

bool roundtrip_correct(
    const StandardForm &s,
    const Circuit &encoder,
    const SyndromeTable &table,
    const BitVector &bits,
    const PauliString &error) {
    State clean = run(encoder, encoder_input(encoder, bits));
    BitVector syndrome = measure_syndrome(clean, error, s);
    auto correction = decode(syndrome, table);
    if (!correction) {
        return false;
    }
    State noisy = clean;
    noisy.apply(error);
    noisy.apply(*correction);
    return equal_up_to_global_phase(noisy, clean);
}

}  // namespace qecc
