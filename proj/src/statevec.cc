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

#include "qwcp/statevec.h"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <set>

#include "kernels.h"
#include "qwcp/errors.h"
#include "qwcp/walkops.h"

namespace qwcp {

using detail::apply_group;
using detail::for_each_masked;
using detail::spread_patterns;
using detail::swap_group;

StateVector::StateVector(RegisterLayout layout) : layout_(std::move(layout)) {
    if (layout_.total_bits() > kMaxTotalBits) {
        throw PreconditionError(
            "layout needs " + std::to_string(layout_.total_bits()) + " bits; the simulator cap is " +
            std::to_string(kMaxTotalBits));
    }
    amplitudes_.assign(layout_.dimension(), Amplitude(0));
    amplitudes_[0] = 1;
}

double StateVector::norm() const {
    double sum = 0;
    for (const auto &a : amplitudes_) {
        sum += std::norm(a);
    }
    return std::sqrt(sum);
}

void StateVector::normalize() {
    double n = norm();
    if (n == 0) {
        throw PreconditionError("cannot normalize the zero vector");
    }
    for (auto &a : amplitudes_) {
        a /= n;
    }
}

namespace {

void check_placements(const RegisterLayout &layout, const std::vector<WalkerPlacement> &walkers) {
    if (static_cast<int>(walkers.size()) != layout.walkers()) {
        throw PreconditionError(
            "expected " + std::to_string(layout.walkers()) + " walker placements, got " +
            std::to_string(walkers.size()));
    }
    const auto &g = layout.graph();
    for (const auto &w : walkers) {
        g.label(w.vertex);
        if (!g.valid_coin(w.vertex, w.coin)) {
            throw PreconditionError(
                "coin " + std::to_string(w.coin) + " is not a valid port at '" + g.label(w.vertex) + "'");
        }
    }
}

uint64_t walker_offset(const RegisterLayout &layout, const std::vector<WalkerPlacement> &walkers) {
    uint64_t offset = 0;
    for (int j = 0; j < layout.walkers(); ++j) {
        offset |= layout.walker_bits(j, walkers[j].vertex, walkers[j].coin);
    }
    return offset;
}

}  // namespace

StateVector init_state(
    const RegisterLayout &layout, const std::vector<WalkerPlacement> &walkers, const std::map<int, QubitState> &data) {
    std::vector<Amplitude> product{Amplitude(1)};
    for (int i = 0; i < layout.num_data(); ++i) {
        QubitState q{Amplitude(1), Amplitude(0)};
        if (auto it = data.find(i); it != data.end()) {
            q = it->second;
        }
        double n = std::norm(q[0]) + std::norm(q[1]);
        if (std::abs(n - 1) > kNormTolerance) {
            throw PreconditionError("data qubit " + std::to_string(i) + " state is not normalized");
        }
        std::vector<Amplitude> next;
        next.reserve(product.size() * 2);
        for (const auto &p : product) {
            next.push_back(p * q[0]);
            next.push_back(p * q[1]);
        }
        product = std::move(next);
    }
    for (const auto &[i, q] : data) {
        layout.check_data_index(i);
    }
    return init_state_entangled(layout, walkers, product);
}

StateVector init_state_entangled(
    const RegisterLayout &layout, const std::vector<WalkerPlacement> &walkers, std::span<const Amplitude> data) {
    if (layout.walkers() > 0) {
        check_placements(layout, walkers);
    } else if (!walkers.empty()) {
        throw PreconditionError("data-only layout takes no walker placements");
    }
    if (data.size() != (uint64_t{1} << layout.num_data())) {
        throw PreconditionError("data state has the wrong dimension");
    }
    double n = 0;
    for (const auto &a : data) {
        n += std::norm(a);
    }
    if (std::abs(std::sqrt(n) - 1) > kNormTolerance) {
        throw PreconditionError("data state is not normalized");
    }
    StateVector state(layout);
    state[0] = 0;
    const uint64_t offset = layout.walkers() > 0 ? walker_offset(layout, walkers) : 0;
    for (uint64_t i = 0; i < data.size(); ++i) {
        state[offset | i] = data[i];
    }
    return state;
}

namespace {

void check_coin(const RegisterLayout &layout, VertexId v, Coin c) {
    const auto &g = layout.graph();
    if (!g.valid_coin(v, c)) {
        throw PreconditionError("coin " + std::to_string(c) + " is not a valid port at '" + g.label(v) + "'");
    }
}

void check_vertex(const RegisterLayout &layout, VertexId v) {
    layout.graph().label(v);
}

void check_local_data(const RegisterLayout &layout, VertexId v, const std::vector<int> &qubits, const char *role) {
    std::set<int> seen;
    for (int q : qubits) {
        layout.check_data_index(q);
        if (!seen.insert(q).second) {
            throw PreconditionError(std::string(role) + " qubit listed twice");
        }
        const auto &dq = layout.data_order()[q];
        if (dq.node != v) {
            throw PreconditionError(
                std::string(role) + " qubit " + layout.graph().label(dq.node) + "." + dq.name +
                " is not at node '" + layout.graph().label(v) + "' (locality violation)");
        }
    }
}

void check_action(const RegisterLayout &layout, VertexId v, const CoinAction &action) {
    if (const auto *swap = std::get_if<CoinSwap>(&action)) {
        check_coin(layout, v, swap->c1);
        check_coin(layout, v, swap->c2);
        return;
    }
    const auto &block = std::get<CoinUnitary>(action);
    if (block.coins.empty()) {
        throw PreconditionError("coin block lists no coin values");
    }
    std::set<Coin> seen;
    for (Coin c : block.coins) {
        check_coin(layout, v, c);
        if (!seen.insert(c).second) {
            throw PreconditionError("coin block lists coin " + std::to_string(c) + " twice");
        }
    }
    if (block.unitary.rows() != static_cast<Eigen::Index>(block.coins.size())) {
        throw PreconditionError("coin block size does not match its coin list");
    }
    require_unitary(block.unitary, "coin block at '" + layout.graph().label(v) + "'");
}

struct Validator {
    const RegisterLayout &layout;

    void operator()(const ShiftOp &op) const {
        std::set<int> seen;
        for (int w : op.walkers) {
            layout.check_walker(w);
            if (!seen.insert(w).second) {
                throw PreconditionError("shift lists walker " + std::to_string(w) + " twice");
            }
        }
    }
    void operator()(const CoinPermOp &op) const {
        layout.check_walker(op.walker);
        check_vertex(layout, op.vertex);
        check_coin(layout, op.vertex, op.c1);
        check_coin(layout, op.vertex, op.c2);
    }
    void operator()(const CoinBlockOp &op) const {
        layout.check_walker(op.walker);
        std::set<VertexId> seen;
        for (const auto &entry : op.blocks) {
            check_vertex(layout, entry.vertex);
            if (!seen.insert(entry.vertex).second) {
                throw PreconditionError("coin block assigns vertex '" + layout.graph().label(entry.vertex) + "' twice");
            }
            check_action(layout, entry.vertex, entry.block);
        }
    }
    void operator()(const DataControlledCoinOp &op) const {
        layout.check_walker(op.walker);
        check_vertex(layout, op.vertex);
        if (op.controls.empty()) {
            throw PreconditionError("data-controlled coin needs at least one control qubit");
        }
        if (op.controls.size() != op.pattern.size()) {
            throw PreconditionError("control string length does not match the number of control qubits");
        }
        check_local_data(layout, op.vertex, op.controls, "control");
        check_action(layout, op.vertex, op.action);
    }
    void operator()(const CoinControlledDataOp &op) const {
        layout.check_walker(op.walker);
        check_vertex(layout, op.vertex);
        for (Coin c : op.coin_condition) {
            check_coin(layout, op.vertex, c);
        }
        if (op.targets.empty()) {
            throw PreconditionError("coin-controlled data operator needs at least one target qubit");
        }
        check_local_data(layout, op.vertex, op.targets, "target");
        if (op.unitary.rows() != (Eigen::Index{1} << op.targets.size())) {
            throw PreconditionError("data unitary dimension does not match the number of target qubits");
        }
        require_unitary(op.unitary, "data unitary at '" + layout.graph().label(op.vertex) + "'");
        if (op.coin_action) {
            check_action(layout, op.vertex, *op.coin_action);
        }
    }
    void operator()(const WalkInteractionOp &op) const {
        layout.check_walker(op.control_walker);
        layout.check_walker(op.target_walker);
        if (op.control_walker == op.target_walker) {
            throw PreconditionError("walk interaction needs two distinct walkers");
        }
        check_vertex(layout, op.vertex);
        check_coin(layout, op.vertex, op.control_coin);
        check_action(layout, op.vertex, op.action);
    }
    void operator()(const FanoutOp &op) const {
        check_vertex(layout, op.vertex);
        check_coin(layout, op.vertex, op.incoming);
        if (op.walkers.empty() || op.walkers.size() != op.successors.size() ||
            op.ports.size() != op.successors.size()) {
            throw PreconditionError("fan-out needs one walker and one port per successor");
        }
        std::set<int> walkers(op.walkers.begin(), op.walkers.end());
        if (walkers.size() != op.walkers.size()) {
            throw PreconditionError("fan-out lists a walker twice");
        }
        for (size_t j = 0; j < op.walkers.size(); ++j) {
            layout.check_walker(op.walkers[j]);
            auto port = layout.graph().port_of(op.vertex, op.successors[j]);
            if (!port || *port != op.ports[j] || op.ports[j] == 0) {
                throw PreconditionError("fan-out successor is not a neighbor reached by the recorded port");
            }
        }
    }
    void operator()(const MeasureAndCorrectOp &op) const {
        for (const auto &e : op.entries) {
            layout.check_walker(e.walker);
            check_vertex(layout, e.a);
            check_vertex(layout, e.b);
            check_vertex(layout, e.notify);
            layout.check_data_index(e.correction_qubit);
            if (e.a == e.b) {
                throw PreconditionError("measurement separation needs two distinct vertices");
            }
        }
    }
};

void apply_coin_action(
    StateVector &state, int walker, VertexId v, const CoinAction &action, uint64_t extra_mask, uint64_t extra_value) {
    const auto &layout = state.layout();
    const uint64_t fixed_mask = layout.vertex_mask(walker) | extra_mask;
    const uint64_t fixed_value = (static_cast<uint64_t>(v) << layout.vertex_shift(walker)) | extra_value;
    const uint64_t group = layout.coin_mask(walker);
    const int cs = layout.coin_shift(walker);
    if (const auto *swap = std::get_if<CoinSwap>(&action)) {
        swap_group(
            state.amplitudes(), fixed_mask, fixed_value, group, static_cast<uint64_t>(swap->c1) << cs,
            static_cast<uint64_t>(swap->c2) << cs);
        return;
    }
    const auto &block = std::get<CoinUnitary>(action);
    std::vector<uint64_t> patterns;
    for (Coin c : block.coins) {
        patterns.push_back(static_cast<uint64_t>(c) << cs);
    }
    apply_group(state.amplitudes(), fixed_mask, fixed_value, group, patterns, block.unitary);
}

void apply_flipflop(StateVector &state, int walker) {
    const auto &layout = state.layout();
    const auto &g = layout.graph();
    const uint64_t group = layout.walker_mask(walker);
    for (VertexId v = 0; v < static_cast<VertexId>(g.num_vertices()); ++v) {
        for (Coin c = 1; c < g.coin_count(v); ++c) {
            VertexId u = g.neighbor_of_port(v, c);
            if (u < v) {
                continue;
            }
            Coin back = g.port(u, v);
            swap_group(state.amplitudes(), 0, 0, group, layout.walker_bits(walker, v, c),
                       layout.walker_bits(walker, u, back));
        }
    }
}

struct Applier {
    StateVector &state;

    void operator()(const ShiftOp &op) const {
        if (op.kind == ShiftKind::Identity) {
            return;
        }
        for (int w : op.walkers) {
            apply_flipflop(state, w);
        }
    }
    void operator()(const CoinPermOp &op) const {
        apply_coin_action(state, op.walker, op.vertex, CoinSwap{op.c1, op.c2}, 0, 0);
    }
    void operator()(const CoinBlockOp &op) const {
        for (const auto &entry : op.blocks) {
            apply_coin_action(state, op.walker, entry.vertex, entry.block, 0, 0);
        }
    }
    void operator()(const DataControlledCoinOp &op) const {
        const auto &layout = state.layout();
        uint64_t mask = 0;
        uint64_t value = 0;
        for (size_t i = 0; i < op.controls.size(); ++i) {
            uint64_t bit = layout.data_mask(op.controls[i]);
            mask |= bit;
            if (op.pattern[i]) {
                value |= bit;
            }
        }
        apply_coin_action(state, op.walker, op.vertex, op.action, mask, value);
    }
    void operator()(const CoinControlledDataOp &op) const {
        const auto &layout = state.layout();
        std::vector<uint64_t> target_masks;
        uint64_t group = 0;
        for (int t : op.targets) {
            target_masks.push_back(layout.data_mask(t));
            group |= target_masks.back();
        }
        auto patterns = spread_patterns(target_masks);
        const uint64_t vmask = layout.vertex_mask(op.walker);
        const uint64_t vvalue = static_cast<uint64_t>(op.vertex) << layout.vertex_shift(op.walker);
        if (op.coin_condition.empty()) {
            apply_group(state.amplitudes(), vmask, vvalue, group, patterns, op.unitary);
        } else {
            const uint64_t cmask = layout.coin_mask(op.walker);
            for (Coin c : op.coin_condition) {
                const uint64_t cvalue = static_cast<uint64_t>(c) << layout.coin_shift(op.walker);
                apply_group(state.amplitudes(), vmask | cmask, vvalue | cvalue, group, patterns, op.unitary);
            }
        }
        if (op.coin_action) {
            apply_coin_action(state, op.walker, op.vertex, *op.coin_action, 0, 0);
        }
    }
    void operator()(const WalkInteractionOp &op) const {
        const auto &layout = state.layout();
        const uint64_t mask = layout.walker_mask(op.control_walker);
        const uint64_t value = layout.walker_bits(op.control_walker, op.vertex, op.control_coin);
        apply_coin_action(state, op.target_walker, op.vertex, op.action, mask, value);
    }
    void operator()(const FanoutOp &op) const {
        auto sequence = expand_fanout(op);
        for (const auto &inner : sequence) {
            std::visit(*this, inner);
        }
    }
    void operator()(const MeasureAndCorrectOp &) const {
        throw PreconditionError("MeasureAndCorrect is an instrument, not a unitary; run it through run_schedule");
    }
};

}  // namespace

void validate_operator(const RegisterLayout &layout, const OperatorSpec &op) {
    std::visit(Validator{layout}, op);
}

void apply_operator(StateVector &state, const OperatorSpec &op) {
    validate_operator(state.layout(), op);
    std::visit(Applier{state}, op);
}

void apply_data_unitary(StateVector &state, const std::vector<int> &targets, const Matrix &unitary) {
    const auto &layout = state.layout();
    std::vector<uint64_t> masks;
    uint64_t group = 0;
    for (int t : targets) {
        masks.push_back(layout.data_mask(t));
        group |= masks.back();
    }
    if (unitary.rows() != (Eigen::Index{1} << targets.size())) {
        throw PreconditionError("data unitary dimension does not match the number of target qubits");
    }
    require_unitary(unitary, "data unitary");
    apply_group(state.amplitudes(), 0, 0, group, spread_patterns(masks), unitary);
}

namespace {

void apply_hadamard(StateVector &state, int qubit) {
    static const Matrix h = named_gate("H");
    const uint64_t mask = state.layout().qubit_mask(qubit);
    const uint64_t patterns[2] = {0, mask};
    apply_group(state.amplitudes(), 0, 0, mask, patterns, h);
}

}  // namespace

std::vector<MeasuredBranch> measure(
    const StateVector &state, const std::vector<int> &qubits, const std::vector<Basis> &bases, MeasureMode::Kind kind,
    std::mt19937_64 &rng) {
    if (qubits.size() != bases.size()) {
        throw PreconditionError("one basis per measured qubit is required");
    }
    if (qubits.empty()) {
        throw PreconditionError("no qubits to measure");
    }
    std::vector<uint64_t> masks;
    std::set<int> seen;
    for (int q : qubits) {
        if (!seen.insert(q).second) {
            throw PreconditionError("qubit " + std::to_string(q) + " measured twice");
        }
        masks.push_back(state.layout().qubit_mask(q));
    }
    if (qubits.size() > 20) {
        throw PreconditionError("too many qubits in one measurement");
    }

    StateVector rotated = state;
    for (size_t i = 0; i < qubits.size(); ++i) {
        if (bases[i] == Basis::X) {
            apply_hadamard(rotated, qubits[i]);
        }
    }
    const size_t m = qubits.size();
    auto outcome_of = [&](uint64_t index) {
        uint64_t r = 0;
        for (size_t t = 0; t < m; ++t) {
            r = (r << 1) | ((index & masks[t]) ? 1 : 0);
        }
        return r;
    };
    std::vector<double> probs(size_t{1} << m, 0.0);
    auto amps = rotated.amplitudes();
    for (uint64_t i = 0; i < amps.size(); ++i) {
        if (amps[i] != Amplitude(0)) {
            probs[outcome_of(i)] += std::norm(amps[i]);
        }
    }

    std::vector<uint64_t> chosen;
    if (kind == MeasureMode::Kind::Branch) {
        for (uint64_t r = 0; r < probs.size(); ++r) {
            if (probs[r] > 1e-13) {
                chosen.push_back(r);
            }
        }
    } else {
        double total = 0;
        for (double p : probs) {
            total += p;
        }
        double u = std::uniform_real_distribution<double>(0.0, total)(rng);
        uint64_t pick = probs.size();
        double acc = 0;
        for (uint64_t r = 0; r < probs.size(); ++r) {
            if (probs[r] <= 1e-13) {
                continue;
            }
            acc += probs[r];
            pick = r;
            if (u < acc) {
                break;
            }
        }
        chosen.push_back(pick);
    }

    const auto patterns = spread_patterns(masks);
    uint64_t group = 0;
    for (auto mk : masks) {
        group |= mk;
    }
    std::vector<MeasuredBranch> out;
    for (uint64_t r : chosen) {
        StateVector post = rotated;
        auto pa = post.amplitudes();
        for (uint64_t i = 0; i < pa.size(); ++i) {
            if ((i & group) != patterns[r]) {
                pa[i] = 0;
            }
        }
        const double scale = 1.0 / std::sqrt(probs[r]);
        for (auto &a : pa) {
            a *= scale;
        }
        for (size_t i = 0; i < m; ++i) {
            if (bases[i] == Basis::X) {
                apply_hadamard(post, qubits[i]);
            }
        }
        MeasurementRecord record;
        record.qubits = qubits;
        record.bases = bases;
        for (size_t t = 0; t < m; ++t) {
            record.outcomes.push_back(static_cast<int>((r >> (m - 1 - t)) & 1));
        }
        record.probability = probs[r];
        out.push_back({std::move(record), std::move(post)});
    }
    return out;
}

std::vector<MeasuredBranch> measure(
    const StateVector &state, const std::vector<int> &qubits, const std::vector<Basis> &bases, MeasureMode mode) {
    std::mt19937_64 rng(mode.seed);
    return measure(state, qubits, bases, mode.kind, rng);
}

double fidelity(const StateVector &a, const StateVector &b) {
    if (!(a.layout() == b.layout())) {
        throw PreconditionError("fidelity of states with different layouts");
    }
    Amplitude inner = 0;
    auto x = a.amplitudes();
    auto y = b.amplitudes();
    for (uint64_t i = 0; i < x.size(); ++i) {
        inner += std::conj(x[i]) * y[i];
    }
    return std::min(1.0, std::norm(inner));
}

Matrix reduced_density_matrix(const StateVector &state, const std::vector<int> &qubits) {
    const auto &layout = state.layout();
    std::vector<uint64_t> masks;
    std::set<int> seen;
    uint64_t group = 0;
    for (int q : qubits) {
        if (!seen.insert(q).second) {
            throw PreconditionError("qubit " + std::to_string(q) + " listed twice");
        }
        masks.push_back(layout.qubit_mask(q));
        group |= masks.back();
    }
    if (qubits.size() > 12) {
        throw PreconditionError("reduced state of more than 12 qubits is not supported");
    }
    const auto patterns = spread_patterns(masks);
    const auto dim = static_cast<Eigen::Index>(patterns.size());
    Matrix rho = Matrix::Zero(dim, dim);
    Eigen::VectorXcd column(dim);
    auto amps = state.amplitudes();
    for_each_masked(amps.size(), group, 0, [&](uint64_t base) {
        bool any = false;
        for (Eigen::Index r = 0; r < dim; ++r) {
            column[r] = amps[base | patterns[r]];
            any = any || column[r] != Amplitude(0);
        }
        if (any) {
            rho.noalias() += column * column.adjoint();
        }
    });
    return rho;
}

double purity_across_cut(const StateVector &state, const std::vector<int> &qubits) {
    const int n = state.layout().total_bits();
    std::set<int> sub(qubits.begin(), qubits.end());
    if (sub.empty() || static_cast<int>(sub.size()) >= n || sub.size() != qubits.size()) {
        throw PreconditionError("cut must be a non-empty proper subset of distinct qubits");
    }
    for (int q : sub) {
        if (q < 0 || q >= n) {
            throw PreconditionError("qubit " + std::to_string(q) + " outside layout");
        }
    }
    std::vector<int> side(sub.begin(), sub.end());
    if (2 * static_cast<int>(sub.size()) > n) {
        side.clear();
        for (int q = 0; q < n; ++q) {
            if (!sub.count(q)) {
                side.push_back(q);
            }
        }
    }
    Matrix rho = reduced_density_matrix(state, side);
    double tr = rho.trace().real();
    return rho.cwiseAbs2().sum() / (tr * tr);
}

std::vector<double> walker_vertex_marginal(const StateVector &state, int walker) {
    const auto &layout = state.layout();
    layout.check_walker(walker);
    std::vector<double> out(size_t{1} << layout.vertex_bits(), 0.0);
    const uint64_t mask = layout.vertex_mask(walker);
    const int shift = layout.vertex_shift(walker);
    auto amps = state.amplitudes();
    for (uint64_t i = 0; i < amps.size(); ++i) {
        if (amps[i] != Amplitude(0)) {
            out[(i & mask) >> shift] += std::norm(amps[i]);
        }
    }
    return out;
}

std::vector<VertexId> walker_vertex_support(const StateVector &state, int walker, double tol) {
    auto marginal = walker_vertex_marginal(state, walker);
    std::vector<VertexId> out;
    for (size_t v = 0; v < marginal.size(); ++v) {
        if (marginal[v] > tol) {
            out.push_back(static_cast<VertexId>(v));
        }
    }
    return out;
}

double invalid_amplitude_weight(const StateVector &state) {
    const auto &layout = state.layout();
    if (layout.walkers() == 0) {
        return 0;
    }
    const auto &g = layout.graph();
    const auto nvert = static_cast<VertexId>(g.num_vertices());
    double weight = 0;
    auto amps = state.amplitudes();
    for (uint64_t i = 0; i < amps.size(); ++i) {
        if (amps[i] == Amplitude(0)) {
            continue;
        }
        for (int j = 0; j < layout.walkers(); ++j) {
            VertexId v = layout.walker_vertex(j, i);
            if (v >= nvert || layout.walker_coin(j, i) >= g.coin_count(v)) {
                weight += std::norm(amps[i]);
                break;
            }
        }
    }
    return weight;
}

StateVector extract_data_state(const StateVector &state) {
    const auto &layout = state.layout();
    StateVector out(RegisterLayout::data_only(layout.data_order()));
    if (layout.num_data() == 0) {
        return out;
    }
    Matrix rho = reduced_density_matrix(state, layout.data_qubits());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(rho);
    Eigen::VectorXcd v = solver.eigenvectors().col(rho.rows() - 1);
    Eigen::Index pivot = 0;
    v.cwiseAbs().maxCoeff(&pivot);
    v *= std::abs(v[pivot]) / v[pivot];
    v.normalize();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        out[static_cast<uint64_t>(i)] = v[i];
    }
    return out;
}

void dump_state(const StateVector &state, std::ostream &out) {
    const int n = state.layout().total_bits();
    auto amps = state.amplitudes();
    char buf[96];
    for (uint64_t i = 0; i < amps.size(); ++i) {
        if (std::abs(amps[i]) < 1e-12) {
            continue;
        }
        std::string bits(static_cast<size_t>(n), '0');
        for (int q = 0; q < n; ++q) {
            if ((i >> (n - 1 - q)) & 1) {
                bits[q] = '1';
            }
        }
        std::snprintf(buf, sizeof buf, "  %.17g  %.17g\n", amps[i].real(), amps[i].imag());
        out << bits << buf;
    }
}

}  // namespace qwcp
