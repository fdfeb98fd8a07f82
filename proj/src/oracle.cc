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

#include "qwcp/oracle.h"

#include <set>

#include "qwcp/errors.h"

namespace qwcp {

namespace {

void check_gate(const RegisterLayout &layout, const OracleGate &gate) {
    std::set<int> used;
    for (const auto &c : gate.controls) {
        layout.check_data_index(c.qubit);
        if (!used.insert(c.qubit).second) {
            throw PreconditionError("oracle gate uses a qubit twice");
        }
    }
    if (gate.targets.empty()) {
        throw PreconditionError("oracle gate has no targets");
    }
    for (int t : gate.targets) {
        layout.check_data_index(t);
        if (!used.insert(t).second) {
            throw PreconditionError("oracle gate uses a qubit twice");
        }
    }
    if (gate.unitary.rows() != (Eigen::Index{1} << gate.targets.size())) {
        throw PreconditionError("oracle gate unitary has the wrong dimension");
    }
    require_unitary(gate.unitary, "oracle gate");
}

}  // namespace

StateVector oracle_apply(const StateVector &data_state, const GateList &gates) {
    const auto &layout = data_state.layout();
    if (layout.walkers() != 0) {
        throw PreconditionError("oracle runs on data-only states");
    }
    const int n = layout.num_data();
    auto bit = [n](int q) { return uint64_t{1} << (n - 1 - q); };
    StateVector state = data_state;
    for (const auto &gate : gates) {
        check_gate(layout, gate);
        const size_t m = gate.targets.size();
        std::vector<Amplitude> next(state.size(), Amplitude(0));
        for (uint64_t i = 0; i < state.size(); ++i) {
            const Amplitude a = state[i];
            if (a == Amplitude(0)) {
                continue;
            }
            bool fire = true;
            for (const auto &c : gate.controls) {
                fire = fire && (((i & bit(c.qubit)) != 0) == c.value);
            }
            if (!fire) {
                next[i] += a;
                continue;
            }
            uint64_t col = 0;
            uint64_t cleared = i;
            for (size_t t = 0; t < m; ++t) {
                const uint64_t b = bit(gate.targets[t]);
                col = (col << 1) | ((i & b) ? 1 : 0);
                cleared &= ~b;
            }
            for (uint64_t row = 0; row < (uint64_t{1} << m); ++row) {
                uint64_t j = cleared;
                for (size_t t = 0; t < m; ++t) {
                    if ((row >> (m - 1 - t)) & 1) {
                        j |= bit(gate.targets[t]);
                    }
                }
                next[j] += gate.unitary(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) * a;
            }
        }
        for (uint64_t i = 0; i < state.size(); ++i) {
            state[i] = next[i];
        }
    }
    return state;
}

Comparison compare(const StateVector &protocol_output, const StateVector &oracle_output) {
    const auto &layout = protocol_output.layout();
    if (layout.data_order() != oracle_output.layout().data_order() || oracle_output.layout().walkers() != 0) {
        throw PreconditionError("oracle state does not match the protocol's data qubits");
    }
    Comparison out;
    if (layout.walkers() > 0 && layout.num_data() > 0) {
        out.walker_purity = purity_across_cut(protocol_output, layout.all_walker_qubits());
    }
    if (layout.num_data() == 0) {
        out.fidelity = 1;
    } else {
        Matrix rho = reduced_density_matrix(protocol_output, layout.data_qubits());
        Eigen::VectorXcd phi(rho.rows());
        for (Eigen::Index i = 0; i < phi.size(); ++i) {
            phi[i] = oracle_output[static_cast<uint64_t>(i)];
        }
        out.fidelity = std::min(1.0, (phi.adjoint() * rho * phi)(0, 0).real());
    }
    out.pass = out.fidelity >= 1 - kFidelityTolerance && out.walker_purity >= 1 - kFidelityTolerance;
    return out;
}

}  // namespace qwcp
