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

#ifndef QECC_STATEVECTOR_H
#define QECC_STATEVECTOR_H

#include <Eigen/Core>
#include <bit>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qecc/circuit.h"
#include "qecc/pauli.h"

namespace qecc {

/// Dense n-qubit state. Qubit 1 is the most significant bit of the basis index,
/// so basis label "10001110" is index 0b10001110.
template <typename Real>
class StateVector {
   public:
    using Scalar = std::complex<Real>;
    using Amplitudes = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

    explicit StateVector(size_t n) : n_(n), amps_(Amplitudes::Zero(Eigen::Index{1} << n)) {
        if (n > 30) {
            throw std::invalid_argument("statevector limited to 30 qubits");
        }
        amps_(0) = Scalar(1);
    }
    StateVector(size_t n, Amplitudes amps) : n_(n), amps_(std::move(amps)) {
        if (amps_.size() != (Eigen::Index{1} << n)) {
            throw std::invalid_argument("amplitude count does not match qubit count");
        }
    }

    static StateVector basis(size_t n, uint64_t index) {
        StateVector v(n);
        v.amps_(0) = Scalar(0);
        v.amps_(static_cast<Eigen::Index>(index)) = Scalar(1);
        return v;
    }
    /// Basis state from a label like "0101"; the first character is qubit 1.
    static StateVector basis(std::string_view label) {
        uint64_t index = 0;
        for (char c : label) {
            if (c != '0' && c != '1') {
                throw std::invalid_argument("basis label must contain only 0 and 1");
            }
            index = (index << 1) | static_cast<uint64_t>(c == '1');
        }
        return basis(label.size(), index);
    }

    size_t num_qubits() const {
        return n_;
    }
    const Amplitudes &amplitudes() const {
        return amps_;
    }
    Amplitudes &amplitudes() {
        return amps_;
    }
    Scalar operator[](uint64_t index) const {
        return amps_(static_cast<Eigen::Index>(index));
    }
    Real norm() const {
        return amps_.norm();
    }

    /// Index mask of 1-based qubit q.
    uint64_t mask(size_t q) const {
        if (q < 1 || q > n_) {
            throw std::out_of_range("qubit " + std::to_string(q) + " outside 1.." + std::to_string(n_));
        }
        return uint64_t{1} << (n_ - q);
    }

    void apply(const Gate &g) {
        const Scalar i_unit(0, 1);
        const uint64_t dim = uint64_t{1} << n_;
        const uint64_t m0 = mask(g.q0);
        if (is_two_qubit(g.kind)) {
            const uint64_t mt = mask(g.q1);
            for (uint64_t k = 0; k < dim; k++) {
                if (!(k & m0) || (k & mt)) {
                    continue;
                }
                Scalar &a = amps_(static_cast<Eigen::Index>(k));
                Scalar &b = amps_(static_cast<Eigen::Index>(k | mt));
                switch (g.kind) {
                    case GateKind::CX:
                        std::swap(a, b);
                        break;
                    case GateKind::CY: {
                        Scalar a0 = a;
                        a = -i_unit * b;
                        b = i_unit * a0;
                        break;
                    }
                    case GateKind::CZ:
                        b = -b;
                        break;
                    default:
                        break;
                }
            }
            return;
        }
        const Real s = Real(1) / std::sqrt(Real(2));
        for (uint64_t k = 0; k < dim; k++) {
            if (k & m0) {
                continue;
            }
            Scalar &a = amps_(static_cast<Eigen::Index>(k));
            Scalar &b = amps_(static_cast<Eigen::Index>(k | m0));
            switch (g.kind) {
                case GateKind::H: {
                    Scalar a0 = a;
                    a = s * (a0 + b);
                    b = s * (a0 - b);
                    break;
                }
                case GateKind::S:
                    b *= i_unit;
                    break;
                case GateKind::X:
                    std::swap(a, b);
                    break;
                case GateKind::Y: {
                    Scalar a0 = a;
                    a = -i_unit * b;
                    b = i_unit * a0;
                    break;
                }
                case GateKind::Z:
                    b = -b;
                    break;
                default:
                    break;
            }
        }
    }

    /// Applies the operator i^phase * (x) letters, Y being the Hermitian i*X*Z.
    void apply(const PauliString &p) {
        if (p.n != n_) {
            throw std::invalid_argument("Pauli size does not match the state");
        }
        uint64_t xm = 0, zm = 0;
        for (size_t j = 0; j < n_; j++) {
            if (p.x[j]) {
                xm |= mask(j + 1);
            }
            if (p.z[j]) {
                zm |= mask(j + 1);
            }
        }
        static const Scalar kPowers[4] = {Scalar(1, 0), Scalar(0, 1), Scalar(-1, 0), Scalar(0, -1)};
        const Scalar base = kPowers[(p.phase_exp + std::popcount(xm & zm)) & 3];
        Amplitudes out(amps_.size());
        for (uint64_t k = 0; k < static_cast<uint64_t>(amps_.size()); k++) {
            Scalar v = base * amps_(static_cast<Eigen::Index>(k));
            if (std::popcount(zm & k) & 1) {
                v = -v;
            }
            out(static_cast<Eigen::Index>(k ^ xm)) = v;
        }
        amps_.swap(out);
    }

    /// Amplitudes as "label: re+im i" lines for nonzero entries.
    std::string str(Real threshold = Real(1e-12)) const {
        std::string s;
        for (Eigen::Index k = 0; k < amps_.size(); k++) {
            if (std::abs(amps_(k)) > threshold) {
                s += label(static_cast<uint64_t>(k)) + ": " + std::to_string(amps_(k).real()) + " " +
                     std::to_string(amps_(k).imag()) + "i\n";
            }
        }
        return s;
    }

    std::string label(uint64_t index) const {
        std::string s(n_, '0');
        for (size_t q = 1; q <= n_; q++) {
            if (index & mask(q)) {
                s[q - 1] = '1';
            }
        }
        return s;
    }

   private:
    size_t n_;
    Amplitudes amps_;
};

}  // namespace qecc

#endif
