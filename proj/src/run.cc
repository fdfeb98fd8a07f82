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

#include <algorithm>
#include <cmath>
#include <random>

#include "qwcp/errors.h"
#include "qwcp/protocols.h"

namespace qwcp {

bool within_closed_neighborhood(
    const NetworkGraph &g, const std::vector<VertexId> &prev, const std::vector<VertexId> &next) {
    for (VertexId v : next) {
        bool ok = std::any_of(prev.begin(), prev.end(), [&](VertexId u) { return u == v || g.adjacent(u, v); });
        if (!ok) {
            return false;
        }
    }
    return true;
}

namespace {

std::vector<std::vector<VertexId>> supports_of(const StateVector &state) {
    std::vector<std::vector<VertexId>> out;
    for (int j = 0; j < state.layout().walkers(); ++j) {
        out.push_back(walker_vertex_support(state, j, kSupportTolerance));
    }
    return out;
}

void check_resting(const StateVector &state, const WalkerSeparation &e) {
    const auto &layout = state.layout();
    const auto &g = layout.graph();
    const uint64_t rest_a = layout.walker_bits(e.walker, e.a, 0);
    const uint64_t rest_b = layout.walker_bits(e.walker, e.b, 0);
    const uint64_t mask = layout.walker_mask(e.walker);
    double stray = 0;
    auto amps = state.amplitudes();
    for (uint64_t i = 0; i < amps.size(); ++i) {
        const uint64_t bits = i & mask;
        if (bits != rest_a && bits != rest_b) {
            stray += std::norm(amps[i]);
        }
    }
    if (stray > kSupportTolerance) {
        throw PreconditionError(
            "walker " + std::to_string(e.walker) + " is not resting at '" + g.label(e.a) + "' or '" + g.label(e.b) +
            "' on the self-loop (stray weight " + std::to_string(stray) + ")");
    }
}

}  // namespace

RunResult run_schedule(StateVector state, const Schedule &schedule, const RunOptions &options) {
    const auto &layout = state.layout();
    validate_schedule(layout, schedule);
    RunTrace trace;
    const bool walks = layout.walkers() > 0;
    auto drift = [&](const StateVector &s) {
        trace.max_norm_drift = std::max(trace.max_norm_drift, std::abs(s.norm() - 1));
    };
    if (walks) {
        trace.supports.push_back(supports_of(state));
    }
    for (size_t t = 0; t < schedule.timesteps.size(); ++t) {
        const auto &step = schedule.timesteps[t];
        for (const auto &op : step.ops) {
            apply_operator(state, op);
        }
        if (walks) {
            auto mid = supports_of(state);
            if (mid != trace.supports.back()) {
                trace.locality_ok = false;
                trace.violations.push_back("timestep " + std::to_string(t) + ": a coin operator moved a walker");
            }
        }
        apply_operator(state, step.shift);
        drift(state);
        if (walks) {
            auto next = supports_of(state);
            const auto &prev = trace.supports.back();
            for (int j = 0; j < layout.walkers(); ++j) {
                if (!within_closed_neighborhood(layout.graph(), prev[j], next[j])) {
                    trace.locality_ok = false;
                    trace.violations.push_back(
                        "timestep " + std::to_string(t) + ": walker " + std::to_string(j) +
                        " left its closed neighborhood");
                }
            }
            trace.supports.push_back(std::move(next));
        }
        ++trace.steps;
    }

    std::vector<RunBranch> branches;
    branches.push_back({std::move(state), {}, {}, 1.0});
    if (schedule.measurement) {
        std::mt19937_64 rng(options.seed);
        const Matrix z = named_gate("Z");
        for (const auto &entry : schedule.measurement->entries) {
            std::vector<RunBranch> next;
            for (auto &branch : branches) {
                check_resting(branch.state, entry);
                std::vector<int> qubits;
                std::vector<Basis> bases;
                for (int bit = 0; bit < layout.vertex_bits(); ++bit) {
                    const int shift = layout.vertex_bits() - 1 - bit;
                    const bool differ = ((entry.a >> shift) & 1) != ((entry.b >> shift) & 1);
                    qubits.push_back(layout.vertex_qubit(entry.walker, bit));
                    bases.push_back(differ ? Basis::X : Basis::Z);
                }
                for (int bit = 0; bit < layout.coin_bits(); ++bit) {
                    qubits.push_back(layout.coin_qubit(entry.walker, bit));
                    bases.push_back(Basis::Z);
                }
                for (auto &outcome : measure(branch.state, qubits, bases, options.mode, rng)) {
                    int parity = 0;
                    for (size_t i = 0; i < bases.size(); ++i) {
                        if (bases[i] == Basis::X) {
                            parity ^= outcome.record.outcomes[i];
                        }
                    }
                    if (parity) {
                        apply_data_unitary(outcome.state, {entry.correction_qubit}, z);
                    }
                    drift(outcome.state);
                    RunBranch child{std::move(outcome.state), branch.measurements, branch.messages,
                                    branch.probability * outcome.record.probability};
                    child.messages.push_back({entry.walker, entry.notify, outcome.record.outcomes, parity == 1});
                    child.measurements.push_back(std::move(outcome.record));
                    next.push_back(std::move(child));
                }
            }
            branches = std::move(next);
        }
    }
    return {std::move(branches), std::move(trace)};
}

}  // namespace qwcp
