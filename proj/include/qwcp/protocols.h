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

#ifndef QWCP_PROTOCOLS_H
#define QWCP_PROTOCOLS_H

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qwcp/layout.h"
#include "qwcp/oracle.h"
#include "qwcp/schedule.h"
#include "qwcp/statevec.h"

namespace qwcp {

/// Unitary on data qubits that all live at one node (targets[0] most
/// significant).
struct NodeGate {
    std::vector<int> targets;
    Matrix unitary;
    friend bool operator==(const NodeGate &a, const NodeGate &b) {
        return a.targets == b.targets && same_matrix(a.unitary, b.unitary);
    }
};

/// Controlled gate: controls (with required values) gate `gate`.
struct GateRequest {
    std::vector<ControlQubit> controls;
    NodeGate gate;
    friend bool operator==(const GateRequest &, const GateRequest &) = default;
};

enum class Separation { Reverse, Measure, None };

struct Arrival {
    VertexId node = 0;
    int walker = 0;
    int timestep = 0;
};

struct GateEvent {
    VertexId node = 0;
    int timestep = 0;
};

/// A protocol lowered to a walker schedule plus its reference gate list.
struct CompiledProtocol {
    std::string name;
    RegisterLayout layout;
    std::vector<WalkerPlacement> initial_walkers;
    Schedule forward;   // propagation and gates
    Schedule routing;   // forward without the data gates
    Schedule schedule;  // forward followed by separation
    GateList oracle;
    std::vector<Arrival> arrivals;  // first arrival of the control at each node
    std::vector<GateEvent> gate_events;
    int propagation_steps = 0;
};

using GraphPtr = std::shared_ptr<const NetworkGraph>;

/// Remote controlled gate from the control's node A to the target's node B
/// along `path`. Optional hop gates act at intermediate nodes under the
/// same control.
CompiledProtocol schedule_remote_cu(
    GraphPtr graph, const GateRequest &request, const PathSpec &path, Separation separation,
    const std::vector<NodeGate> &hop_gates = {});

/// Controls spread over nodes of the path (the first at its start). The
/// walker picks up each node's controls as it passes.
CompiledProtocol schedule_multi_control(
    GraphPtr graph, const GateRequest &request, const PathSpec &path, Separation separation = Separation::Reverse);

/// One control at A fanned out to one walker per path; gates[j] fires at
/// the end of paths[j].
CompiledProtocol schedule_multipath(
    GraphPtr graph, const std::vector<ControlQubit> &controls, const std::vector<PathSpec> &paths,
    const std::vector<NodeGate> &gates);

/// Control propagated down a tree; gates fire where listed.
CompiledProtocol schedule_tree(
    GraphPtr graph, const std::vector<ControlQubit> &controls, const TreeSpec &tree,
    const std::vector<NodeGate> &gates);

struct GhzBranch {
    PathSpec path;
    std::vector<int> qubits;  // data qubits on path nodes; at least one at the start
    friend bool operator==(const GhzBranch &, const GhzBranch &) = default;
};

/// GHZ state over each branch's qubits, branches in parallel.
CompiledProtocol schedule_ghz_path(GraphPtr graph, const std::vector<GhzBranch> &branches);

/// One walker per link; each listed (a, b) pair of data qubits on a link
/// ends in a Bell pair.
CompiledProtocol schedule_linklevel(GraphPtr graph, const std::vector<std::pair<int, int>> &pairs);

/// Inverse of the routing schedule.
Schedule separate_reverse(const Schedule &routing);

/// Measurement separation of `walker` resting at (a, 0) or (b, 0).
MeasureAndCorrectOp separate_measure(
    const RegisterLayout &layout, int walker, VertexId a, VertexId b, int correction_qubit);

/// Controlled version of u: identity except where the leading control
/// qubits read `pattern`.
Matrix controlled_matrix(const std::vector<bool> &pattern, const Matrix &u);

struct RunOptions {
    MeasureMode::Kind mode = MeasureMode::Kind::Sample;
    uint64_t seed = 0;
};

struct ClassicalMessage {
    int walker = 0;
    VertexId to = 0;
    std::vector<int> outcomes;
    bool corrected = false;
};

struct RunBranch {
    StateVector state;
    std::vector<MeasurementRecord> measurements;
    std::vector<ClassicalMessage> messages;
    double probability = 1;
};

struct RunTrace {
    /// supports[t][j]: walker j's vertex support at the start of timestep t;
    /// the last entry is the state after the final timestep.
    std::vector<std::vector<std::vector<VertexId>>> supports;
    int steps = 0;
    bool locality_ok = true;
    std::vector<std::string> violations;
    double max_norm_drift = 0;
};

struct RunResult {
    std::vector<RunBranch> branches;
    RunTrace trace;
};

RunResult run_schedule(StateVector state, const Schedule &schedule, const RunOptions &options = {});

/// Closed neighborhood test used by the trace: every vertex of `next` is in
/// `prev` or adjacent to one.
bool within_closed_neighborhood(
    const NetworkGraph &g, const std::vector<VertexId> &prev, const std::vector<VertexId> &next);

}  // namespace qwcp

#endif
