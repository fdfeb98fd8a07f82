// Copyright 2026 The QWCP Authors
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

#ifndef QWCP_ORACLE_H
#define QWCP_ORACLE_H

#include <vector>

#include "qwcp/gates.h"
#include "qwcp/statevec.h"

namespace qwcp {

struct ControlQubit {
    int qubit = 0;  // data index
    bool value = true;
    friend bool operator==(const ControlQubit &, const ControlQubit &) = default;
};

/// Controlled unitary on data qubits; targets[0] is the most significant.
struct OracleGate {
    std::vector<ControlQubit> controls;
    std::vector<int> targets;
    Matrix unitary;
    friend bool operator==(const OracleGate &a, const OracleGate &b) {
        return a.controls == b.controls && a.targets == b.targets && same_matrix(a.unitary, b.unitary);
    }
};

using GateList = std::vector<OracleGate>;

/// Applies the gates in order to a state over data qubits only, as if all
/// qubits sat in one node.
StateVector oracle_apply(const StateVector &data_state, const GateList &gates);

struct Comparison {
    double walker_purity = 1;
    double fidelity = 0;
    bool pass = false;
};

/// Traces the walkers out of protocol_output and scores the data state
/// against the oracle's pure state, <phi|rho|phi>.
Comparison compare(const StateVector &protocol_output, const StateVector &oracle_output);

}  // namespace qwcp

#endif
