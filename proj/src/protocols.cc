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

#include "qwcp/protocols.h"

#include <algorithm>
#include <map>
#include <set>

#include "qwcp/errors.h"
#include "qwcp/walkops.h"

namespace qwcp {

Matrix controlled_matrix(const std::vector<bool> &pattern, const Matrix &u) {
    const Eigen::Index block = u.rows();
    const Eigen::Index dim = block << pattern.size();
    Eigen::Index offset = 0;
    for (bool b : pattern) {
        offset = (offset << 1) | (b ? 1 : 0);
    }
    Matrix out = Matrix::Identity(dim, dim);
    out.block(offset * block, offset * block, block, block) = u;
    return out;
}

Schedule separate_reverse(const Schedule &routing) {
    return invert_schedule(routing);
}

MeasureAndCorrectOp separate_measure(
    const RegisterLayout &layout, int walker, VertexId a, VertexId b, int correction_qubit) {
    MeasureAndCorrectOp op{{WalkerSeparation{walker, a, b, correction_qubit, b}}};
    validate_operator(layout, op);
    return op;
}

namespace {

/// Collects per-timestep operators and shifted walkers, keeping the data
/// gates out of the routing copy.
class Builder {
   public:
    Builder(GraphPtr graph, int walkers) : layout_(std::move(graph), walkers) {
        if (layout_.total_bits() > kMaxTotalBits) {
            throw PreconditionError(
                "protocol needs " + std::to_string(layout_.total_bits()) + " bits (" + std::to_string(walkers) +
                " walkers); the simulator cap is " + std::to_string(kMaxTotalBits));
        }
    }

    const RegisterLayout &layout() const {
        return layout_;
    }
    const NetworkGraph &graph() const {
        return layout_.graph();
    }

    void route(int t, OperatorSpec op) {
        grow(t);
        full_[t].push_back(op);
        routing_[t].push_back(std::move(op));
    }
    void gate(int t, OperatorSpec op) {
        grow(t);
        full_[t].push_back(std::move(op));
    }
    void move(int t, int walker) {
        grow(t);
        shifts_[t].insert(walker);
    }
    void arrive(VertexId v, int walker, int t) {
        arrivals_.push_back({v, walker, t});
    }
    void fire(VertexId v, int t) {
        events_.push_back({v, t});
    }
    void oracle(OracleGate g) {
        oracle_.push_back(std::move(g));
    }

    CompiledProtocol finish(std::string name, std::vector<WalkerPlacement> init, Separation separation,
                            std::optional<MeasureAndCorrectOp> measurement = std::nullopt) const {
        Schedule forward = build(full_);
        Schedule routing = build(routing_);
        Schedule schedule = forward;
        if (separation == Separation::Reverse) {
            schedule.append(separate_reverse(routing));
        } else if (separation == Separation::Measure) {
            schedule.measurement = measurement;
        }
        validate_schedule(layout_, schedule);
        int flips = 0;
        for (const auto &step : forward.timesteps) {
            flips += step.shift.kind == ShiftKind::FlipFlop ? 1 : 0;
        }
        return CompiledProtocol{
            std::move(name), layout_, std::move(init), std::move(forward), std::move(routing), std::move(schedule),
            oracle_, arrivals_, events_, flips};
    }

   private:
    RegisterLayout layout_;
    std::vector<std::vector<OperatorSpec>> full_;
    std::vector<std::vector<OperatorSpec>> routing_;
    std::vector<std::set<int>> shifts_;
    std::vector<Arrival> arrivals_;
    std::vector<GateEvent> events_;
    GateList oracle_;

    void grow(int t) {
        const auto n = static_cast<size_t>(t) + 1;
        if (full_.size() < n) {
            full_.resize(n);
            routing_.resize(n);
            shifts_.resize(n);
        }
    }

    Schedule build(const std::vector<std::vector<OperatorSpec>> &ops) const {
        Schedule out;
        for (size_t t = 0; t < ops.size(); ++t) {
            Timestep step;
            step.ops = ops[t];
            if (!shifts_[t].empty()) {
                step.shift = std::get<ShiftOp>(make_flipflop_shift(
                    layout_, std::vector<int>(shifts_[t].begin(), shifts_[t].end())));
            }
            out.timesteps.push_back(std::move(step));
        }
        return out;
    }
};

VertexId node_of(const RegisterLayout &layout, int qubit) {
    layout.check_data_index(qubit);
    return layout.data_order()[qubit].node;
}

/// Node hosting all targets of the gate.
VertexId gate_node(const RegisterLayout &layout, const NodeGate &gate) {
    if (gate.targets.empty()) {
        throw PreconditionError("gate has no target qubits");
    }
    VertexId v = node_of(layout, gate.targets[0]);
    for (int q : gate.targets) {
        if (node_of(layout, q) != v) {
            throw PreconditionError("all targets of one gate must live at one node");
        }
    }
    if (gate.unitary.rows() != (Eigen::Index{1} << gate.targets.size())) {
        throw PreconditionError("gate unitary dimension does not match its targets");
    }
    require_unitary(gate.unitary, "gate");
    return v;
}

std::vector<int> control_qubits(const std::vector<ControlQubit> &controls) {
    std::vector<int> out;
    for (const auto &c : controls) {
        out.push_back(c.qubit);
    }
    return out;
}

std::vector<bool> control_pattern(const std::vector<ControlQubit> &controls) {
    std::vector<bool> out;
    for (const auto &c : controls) {
        out.push_back(c.value);
    }
    return out;
}

void check_disjoint(const std::vector<ControlQubit> &controls, const std::vector<NodeGate> &gates) {
    std::set<int> seen;
    for (const auto &c : controls) {
        if (!seen.insert(c.qubit).second) {
            throw PreconditionError("control qubit listed twice");
        }
    }
    for (const auto &g : gates) {
        for (int t : g.targets) {
            if (seen.count(t)) {
                throw PreconditionError("a gate target is also a control qubit");
            }
        }
    }
}

void check_hops(const NetworkGraph &g, const PathSpec &path) {
    validate_path(g, path);
    if (path.hops() < 1) {
        throw PreconditionError("path must have at least one hop");
    }
}

/// Single walker along a path. Controls sit at path nodes (some at the
/// start); each gate fires at its node under the controls seen so far.
CompiledProtocol compile_path(
    GraphPtr graph, std::string name, const std::vector<ControlQubit> &controls, const PathSpec &path,
    const std::vector<NodeGate> &gates, Separation separation) {
    Builder b(std::move(graph), 1);
    const auto &layout = b.layout();
    const auto &g = b.graph();
    check_hops(g, path);
    check_disjoint(controls, gates);

    std::map<VertexId, int> position;
    for (size_t i = 0; i < path.nodes.size(); ++i) {
        position[path.nodes[i]] = static_cast<int>(i);
    }
    const int delta = static_cast<int>(path.hops());
    std::vector<std::vector<ControlQubit>> ctrl_at(path.nodes.size());
    for (const auto &c : controls) {
        auto it = position.find(node_of(layout, c.qubit));
        if (it == position.end()) {
            throw PreconditionError(
                "control qubit at '" + g.label(node_of(layout, c.qubit)) + "' is not on the path");
        }
        ctrl_at[it->second].push_back(c);
    }
    if (ctrl_at[0].empty()) {
        throw PreconditionError("the path must start at a node holding a control qubit");
    }
    std::vector<std::vector<const NodeGate *>> gates_at(path.nodes.size());
    std::vector<std::pair<int, const NodeGate *>> ordered;
    for (const auto &gate : gates) {
        VertexId v = gate_node(layout, gate);
        auto it = position.find(v);
        if (it == position.end()) {
            throw PreconditionError("gate node '" + g.label(v) + "' is not on the path");
        }
        gates_at[it->second].push_back(&gate);
        ordered.emplace_back(it->second, &gate);
    }
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto &x, const auto &y) { return x.first < y.first; });

    for (int t = 0; t <= delta; ++t) {
        const VertexId v = path.nodes[t];
        b.arrive(v, 0, t);
        const auto &local = ctrl_at[t];
        if (t == delta) {
            b.route(t, make_coin_perm(layout, v, g.port(v, path.nodes[t - 1]), 0, 0));
            for (const auto *gate : gates_at[t]) {
                std::vector<int> targets = control_qubits(local);
                targets.insert(targets.end(), gate->targets.begin(), gate->targets.end());
                Matrix k = local.empty() ? gate->unitary : controlled_matrix(control_pattern(local), gate->unitary);
                b.gate(t, make_coin_controlled_data(layout, v, {}, targets, k, 0));
                b.fire(v, t);
            }
            break;
        }
        const Coin out = g.port(v, path.nodes[t + 1]);
        if (t > 0) {
            const Coin in = g.port(v, path.nodes[t - 1]);
            b.route(t, make_coin_perm(layout, v, in, local.empty() ? out : 0, 0));
        }
        if (!local.empty()) {
            b.route(t, make_data_controlled_coin(
                           layout, v, control_qubits(local), control_pattern(local), CoinSwap{0, out}, 0));
        }
        for (const auto *gate : gates_at[t]) {
            b.gate(t, make_coin_controlled_data(layout, v, {out}, gate->targets, gate->unitary, 0));
            b.fire(v, t);
        }
        b.move(t, 0);
    }

    for (const auto &[pos, gate] : ordered) {
        std::vector<ControlQubit> seen;
        for (int i = 0; i <= pos; ++i) {
            seen.insert(seen.end(), ctrl_at[i].begin(), ctrl_at[i].end());
        }
        b.oracle({seen, gate->targets, gate->unitary});
    }

    std::optional<MeasureAndCorrectOp> measurement;
    if (separation == Separation::Measure) {
        if (controls.size() != 1) {
            throw PreconditionError("measurement separation supports a single control qubit only");
        }
        measurement = separate_measure(layout, 0, path.front(), path.back(), controls[0].qubit);
    }
    return b.finish(std::move(name), {{path.front(), 0}}, separation, measurement);
}

}  // namespace

CompiledProtocol schedule_remote_cu(
    GraphPtr graph, const GateRequest &request, const PathSpec &path, Separation separation,
    const std::vector<NodeGate> &hop_gates) {
    RegisterLayout probe(graph, 0);
    validate_path(*graph, path);
    if (request.controls.size() != 1) {
        throw PreconditionError("remote controlled gate takes exactly one control qubit");
    }
    if (path.nodes.empty() || node_of(probe, request.controls[0].qubit) != path.front()) {
        throw PreconditionError("path must start at the control qubit's node");
    }
    if (gate_node(probe, request.gate) != path.back()) {
        throw PreconditionError("path must end at the target qubit's node");
    }
    for (const auto &hop : hop_gates) {
        VertexId v = gate_node(probe, hop);
        if (v == path.front() || v == path.back()) {
            throw PreconditionError("hop gates belong to intermediate path nodes");
        }
    }
    std::vector<NodeGate> gates = hop_gates;
    gates.push_back(request.gate);
    return compile_path(std::move(graph), "remote_cu", request.controls, path, gates, separation);
}

CompiledProtocol schedule_multi_control(
    GraphPtr graph, const GateRequest &request, const PathSpec &path, Separation separation) {
    RegisterLayout probe(graph, 0);
    validate_path(*graph, path);
    if (request.controls.empty()) {
        throw PreconditionError("multi-control gate needs at least one control qubit");
    }
    if (path.nodes.empty() || gate_node(probe, request.gate) != path.back()) {
        throw PreconditionError("path must end at the target qubit's node");
    }
    std::set<VertexId> on_path(path.nodes.begin(), path.nodes.end());
    for (const auto &c : request.controls) {
        if (!on_path.count(node_of(probe, c.qubit))) {
            throw PreconditionError(
                "path does not pass control node '" + graph->label(node_of(probe, c.qubit)) + "'");
        }
    }
    return compile_path(std::move(graph), "remote_mcu", request.controls, path, {request.gate}, separation);
}

namespace {

void check_controls_at(const RegisterLayout &layout, const std::vector<ControlQubit> &controls, VertexId a) {
    if (controls.empty()) {
        throw PreconditionError("at least one control qubit is required");
    }
    for (const auto &c : controls) {
        if (node_of(layout, c.qubit) != a) {
            throw PreconditionError("all control qubits must live at the start node '" + layout.graph().label(a) + "'");
        }
    }
}

}  // namespace

CompiledProtocol schedule_multipath(
    GraphPtr graph, const std::vector<ControlQubit> &controls, const std::vector<PathSpec> &paths,
    const std::vector<NodeGate> &gates) {
    if (paths.empty() || paths.size() != gates.size()) {
        throw PreconditionError("multipath needs one gate per path and at least one path");
    }
    const int k = static_cast<int>(paths.size());
    Builder b(graph, k);
    const auto &layout = b.layout();
    const auto &g = b.graph();
    check_disjoint(controls, gates);
    for (const auto &p : paths) {
        check_hops(g, p);
    }
    const VertexId a = paths[0].front();
    check_controls_at(layout, controls, a);
    std::vector<VertexId> first_hops;
    for (int j = 0; j < k; ++j) {
        if (paths[j].front() != a) {
            throw PreconditionError("all paths must start at the control node");
        }
        if (gate_node(layout, gates[j]) != paths[j].back()) {
            throw PreconditionError("path " + std::to_string(j) + " must end at its gate's node");
        }
        first_hops.push_back(paths[j].nodes[1]);
    }
    if (std::set<VertexId>(first_hops.begin(), first_hops.end()).size() != first_hops.size()) {
        throw PreconditionError("paths must leave the control node along distinct first hops");
    }

    const Coin out0 = g.port(a, first_hops[0]);
    b.arrive(a, 0, 0);
    b.route(0, make_data_controlled_coin(
                   layout, a, control_qubits(controls), control_pattern(controls), CoinSwap{0, out0}, 0));
    if (k > 1) {
        std::vector<int> walkers(k);
        for (int j = 0; j < k; ++j) {
            walkers[j] = j;
        }
        b.route(0, make_fanout(layout, a, out0, first_hops, walkers));
    }
    int longest = 0;
    for (int j = 0; j < k; ++j) {
        b.move(0, j);
        longest = std::max(longest, static_cast<int>(paths[j].hops()));
    }
    for (int t = 1; t <= longest; ++t) {
        for (int j = 0; j < k; ++j) {
            const auto &p = paths[j].nodes;
            const int delta = static_cast<int>(paths[j].hops());
            if (t > delta) {
                continue;
            }
            const VertexId v = p[t];
            b.arrive(v, j, t);
            const Coin in = g.port(v, p[t - 1]);
            if (t < delta) {
                b.route(t, make_coin_perm(layout, v, in, g.port(v, p[t + 1]), j));
                b.move(t, j);
            } else {
                b.route(t, make_coin_perm(layout, v, in, 0, j));
                b.gate(t, make_coin_controlled_data(layout, v, {}, gates[j].targets, gates[j].unitary, j));
                b.fire(v, t);
            }
        }
    }
    for (const auto &gate : gates) {
        b.oracle({controls, gate.targets, gate.unitary});
    }
    return b.finish("multipath", std::vector<WalkerPlacement>(k, {a, 0}), Separation::Reverse);
}

CompiledProtocol schedule_tree(
    GraphPtr graph, const std::vector<ControlQubit> &controls, const TreeSpec &tree,
    const std::vector<NodeGate> &gates) {
    const TreeInfo info = validate_tree(*graph, tree);
    if (tree.edges.empty()) {
        throw PreconditionError("tree needs at least one edge");
    }
    // Walker assignment: the carrier continues to the first successor, a
    // fresh helper takes each further successor.
    auto nodes = info.nodes();
    std::stable_sort(nodes.begin(), nodes.end(),
                     [&](VertexId x, VertexId y) { return info.depth.at(x) < info.depth.at(y); });
    std::map<VertexId, int> walker_of{{info.root, 0}};
    std::vector<WalkerPlacement> init{{info.root, 0}};
    for (VertexId v : nodes) {
        const auto &succ = info.successors(v);
        for (size_t i = 0; i < succ.size(); ++i) {
            if (i == 0) {
                walker_of[succ[i]] = walker_of.at(v);
            } else {
                walker_of[succ[i]] = static_cast<int>(init.size());
                init.push_back({v, 0});
            }
        }
    }

    Builder b(std::move(graph), static_cast<int>(init.size()));
    const auto &layout = b.layout();
    const auto &g = b.graph();
    check_disjoint(controls, gates);
    check_controls_at(layout, controls, info.root);
    std::map<VertexId, std::vector<const NodeGate *>> gates_at;
    for (const auto &gate : gates) {
        VertexId v = gate_node(layout, gate);
        if (!info.depth.count(v)) {
            throw PreconditionError("gate node '" + g.label(v) + "' is not in the tree");
        }
        gates_at[v].push_back(&gate);
    }

    for (VertexId v : nodes) {
        const int t = info.depth.at(v);
        const int w = walker_of.at(v);
        const auto &succ = info.successors(v);
        b.arrive(v, w, t);
        std::vector<int> carriers;
        for (VertexId s : succ) {
            carriers.push_back(walker_of.at(s));
        }
        if (v == info.root) {
            const Coin out = g.port(v, succ[0]);
            b.route(t, make_data_controlled_coin(
                           layout, v, control_qubits(controls), control_pattern(controls), CoinSwap{0, out}, w));
            for (const auto *gate : gates_at[v]) {
                b.gate(t, make_coin_controlled_data(layout, v, {out}, gate->targets, gate->unitary, w));
                b.fire(v, t);
            }
            if (succ.size() > 1) {
                b.route(t, make_fanout(layout, v, out, succ, carriers));
            }
        } else {
            const Coin in = g.port(v, info.parent.at(v));
            std::vector<Coin> when;
            if (succ.size() > 1) {
                when = {in};
            } else {
                const Coin out = succ.empty() ? 0 : g.port(v, succ[0]);
                b.route(t, make_coin_perm(layout, v, in, out, w));
                if (!succ.empty()) {
                    when = {out};
                }
            }
            for (const auto *gate : gates_at[v]) {
                b.gate(t, make_coin_controlled_data(layout, v, when, gate->targets, gate->unitary, w));
                b.fire(v, t);
            }
            if (succ.size() > 1) {
                b.route(t, make_fanout(layout, v, in, succ, carriers));
            }
        }
        for (int c : carriers) {
            b.move(t, c);
        }
    }
    for (const auto &gate : gates) {
        b.oracle({controls, gate.targets, gate.unitary});
    }
    return b.finish("tree", std::move(init), Separation::Reverse);
}

namespace {

Matrix ghz_prep_matrix(int m) {
    const Eigen::Index dim = Eigen::Index{1} << m;
    Matrix h = kron(named_gate("H"), Matrix::Identity(dim / 2, dim / 2));
    Matrix cx = Matrix::Zero(dim, dim);
    const Eigen::Index top = dim / 2;
    for (Eigen::Index i = 0; i < dim; ++i) {
        cx(i & top ? (i ^ (top - 1)) : i, i) = 1;
    }
    return cx * h;
}

}  // namespace

CompiledProtocol schedule_ghz_path(GraphPtr graph, const std::vector<GhzBranch> &branches) {
    if (branches.empty()) {
        throw PreconditionError("ghz_path needs at least one path");
    }
    Builder b(std::move(graph), static_cast<int>(branches.size()));
    const auto &layout = b.layout();
    const auto &g = b.graph();
    std::set<int> used;
    std::vector<WalkerPlacement> init;
    const Matrix x = named_gate("X");
    for (int j = 0; j < static_cast<int>(branches.size()); ++j) {
        const auto &br = branches[j];
        validate_path(g, br.path);
        if (br.path.nodes.empty()) {
            throw PreconditionError("ghz path is empty");
        }
        std::map<VertexId, std::vector<int>> at;
        for (int q : br.qubits) {
            if (!used.insert(q).second) {
                throw PreconditionError("ghz qubit sets of different paths overlap");
            }
            at[node_of(layout, q)].push_back(q);
        }
        std::set<VertexId> on_path(br.path.nodes.begin(), br.path.nodes.end());
        for (const auto &[v, qs] : at) {
            if (!on_path.count(v)) {
                throw PreconditionError("ghz qubit at '" + g.label(v) + "' is off its path");
            }
        }
        const auto &p = br.path.nodes;
        const VertexId a = p.front();
        if (at[a].empty()) {
            throw PreconditionError("ghz path start '" + g.label(a) + "' holds no listed qubit");
        }
        init.push_back({a, 0});
        const int delta = static_cast<int>(br.path.hops());
        const auto &qa = at[a];
        b.arrive(a, j, 0);
        b.gate(0, make_coin_controlled_data(layout, a, {}, qa, ghz_prep_matrix(static_cast<int>(qa.size())), j));
        b.fire(a, 0);
        if (delta > 0) {
            b.route(0, make_data_controlled_coin(layout, a, {qa[0]}, {true}, CoinSwap{0, g.port(a, p[1])}, j));
            b.move(0, j);
        }
        std::vector<int> order(qa.begin(), qa.end());
        for (int t = 1; t <= delta; ++t) {
            const VertexId v = p[t];
            b.arrive(v, j, t);
            const Coin in = g.port(v, p[t - 1]);
            const Coin out = t < delta ? g.port(v, p[t + 1]) : 0;
            b.route(t, make_coin_perm(layout, v, in, out, j));
            const auto &qv = at[v];
            if (!qv.empty()) {
                Matrix k = x;
                for (size_t i = 1; i < qv.size(); ++i) {
                    k = kron(k, x);
                }
                b.gate(t, make_coin_controlled_data(layout, v, {}, qv, k, j));
                b.fire(v, t);
                order.insert(order.end(), qv.begin(), qv.end());
            }
            if (t < delta) {
                b.move(t, j);
            }
        }
        b.oracle({{}, {order[0]}, named_gate("H")});
        for (size_t i = 1; i < order.size(); ++i) {
            b.oracle({{{order[0], true}}, {order[i]}, x});
        }
    }
    return b.finish("ghz_path", std::move(init), Separation::Reverse);
}

CompiledProtocol schedule_linklevel(GraphPtr graph, const std::vector<std::pair<int, int>> &pairs) {
    const auto &g0 = *graph;
    std::vector<std::pair<VertexId, VertexId>> links;
    for (VertexId u = 0; u < static_cast<VertexId>(g0.num_vertices()); ++u) {
        for (VertexId v : g0.neighbors(u)) {
            if (u < v) {
                links.emplace_back(u, v);
            }
        }
    }
    if (links.empty()) {
        throw PreconditionError("network has no links");
    }
    Builder b(std::move(graph), static_cast<int>(links.size()));
    const auto &layout = b.layout();
    const auto &g = b.graph();

    std::map<int, std::pair<int, int>> pair_of;  // walker -> (qubit at u, qubit at v)
    std::set<int> used;
    for (auto [qa, qb] : pairs) {
        VertexId na = node_of(layout, qa);
        VertexId nb = node_of(layout, qb);
        if (!g.adjacent(na, nb)) {
            throw PreconditionError(
                "pair qubits at '" + g.label(na) + "' and '" + g.label(nb) + "' are not on one link");
        }
        if (!used.insert(qa).second || !used.insert(qb).second) {
            throw PreconditionError("a data qubit appears in two pairs");
        }
        if (na > nb) {
            std::swap(qa, qb);
            std::swap(na, nb);
        }
        int w = static_cast<int>(std::find(links.begin(), links.end(), std::make_pair(na, nb)) - links.begin());
        if (!pair_of.emplace(w, std::make_pair(qa, qb)).second) {
            throw PreconditionError("at most one pair per link");
        }
    }

    std::vector<WalkerPlacement> init;
    MeasureAndCorrectOp measurement;
    const Matrix h = named_gate("H");
    const Matrix x = named_gate("X");
    for (int w = 0; w < static_cast<int>(links.size()); ++w) {
        auto [u, v] = links[w];
        init.push_back({u, 0});
        b.arrive(u, w, 0);
        b.arrive(v, w, 1);
        const Coin cuv = g.port(u, v);
        const Coin cvu = g.port(v, u);
        b.route(0, make_coin_block(layout, {{u, CoinUnitary{{0, cuv}, h}}}, w));
        if (auto it = pair_of.find(w); it != pair_of.end()) {
            auto [qa, qb] = it->second;
            b.gate(0, make_coin_controlled_data(layout, u, {cuv}, {qa}, x, w));
            b.fire(u, 0);
            b.route(1, make_coin_perm(layout, v, cvu, 0, w));
            b.gate(1, make_coin_controlled_data(layout, v, {0}, {qb}, x, w));
            b.fire(v, 1);
            measurement.entries.push_back({w, u, v, qa, v});
            b.oracle({{}, {qa}, h});
            b.oracle({{{qa, true}}, {qb}, x});
        }
        b.move(0, w);
    }
    if (measurement.entries.empty()) {
        return b.finish("linklevel", std::move(init), Separation::None);
    }
    validate_operator(layout, measurement);
    return b.finish("linklevel", std::move(init), Separation::Measure, measurement);
}

}  // namespace qwcp
