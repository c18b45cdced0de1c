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

#include "qecc/dataflow.h"

namespace qecc {

BasisTracker::BasisTracker(const Circuit &c, bool track_plus) : BasisTracker(c.roles, track_plus) {
}

BasisTracker::BasisTracker(const std::vector<QubitRole> &roles, bool track_plus)
    : track_plus_(track_plus), state_(roles.size() + 1, kUnknown) {
    for (size_t q = 1; q <= roles.size(); q++) {
        if (roles[q - 1] == QubitRole::kAncillaZero) {
            state_[q] = kZero;
        }
    }
}

bool BasisTracker::is_trivial(const Gate &g) const {
    switch (g.kind) {
        case GateKind::Z:
        case GateKind::S:
            return is_zero(g.q0);
        case GateKind::X:
            return track_plus_ && is_plus(g.q0);
        case GateKind::CZ:
            return is_zero(g.q0) || is_zero(g.q1);
        case GateKind::CY:
            return is_zero(g.q0);
        case GateKind::CX:
            return is_zero(g.q0) || (track_plus_ && is_plus(g.q1));
        default:
            return false;
    }
}

void BasisTracker::step(const Gate &g) {
    if (g.kind == GateKind::H) {
        State &s = state_[g.q0];
        if (track_plus_ && s == kZero) {
            s = kPlus;
        } else if (track_plus_ && s == kPlus) {
            s = kZero;
        } else {
            s = kUnknown;
        }
        return;
    }
    state_[g.q0] = kUnknown;
    if (is_two_qubit(g.kind)) {
        state_[g.q1] = kUnknown;
    }
}

}  // namespace qecc
