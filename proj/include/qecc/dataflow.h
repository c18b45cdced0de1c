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

#ifndef QECC_DATAFLOW_H
#define QECC_DATAFLOW_H

#include <vector>

#include "qecc/circuit.h"

namespace qecc {

/// Forward dataflow over a circuit that proves qubits to be in |0> or |+>.
///
/// Starts with every ancilla_zero qubit in |0>. Gates reported as trivial by
/// `is_trivial` act as the identity on the tracked state and may be dropped;
/// every other gate must be fed to `step`.
class BasisTracker {
   public:
    explicit BasisTracker(const Circuit &c, bool track_plus = true);
    BasisTracker(const std::vector<QubitRole> &roles, bool track_plus = true);

    bool is_zero(size_t q) const {
        return state_[q] == kZero;
    }
    bool is_plus(size_t q) const {
        return state_[q] == kPlus;
    }

    /// True when the gate provably does nothing here: Z, S or CZ touching a |0>
    /// qubit, X on |+>, CX or CY whose control is |0>, CX whose target is |+>.
    bool is_trivial(const Gate &g) const;
    void step(const Gate &g);

   private:
    enum State : uint8_t { kUnknown, kZero, kPlus };
    bool track_plus_;
    std::vector<State> state_;
};

}  // namespace qecc

#endif
