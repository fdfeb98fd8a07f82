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

#include "qwcp/walkops.h"

#include <algorithm>
#include <set>

#include "qwcp/errors.h"
#include "qwcp/statevec.h"

namespace qwcp {

namespace {

OperatorSpec checked(const RegisterLayout &layout, OperatorSpec op) {
    validate_operator(layout, op);
    return op;
}

}  // namespace

OperatorSpec make_flipflop_shift(const RegisterLayout &layout, std::vector<int> walkers) {
    std::sort(walkers.begin(), walkers.end());
    return checked(layout, ShiftOp{ShiftKind::FlipFlop, std::move(walkers)});
}

OperatorSpec make_identity_shift() {
    return ShiftOp{ShiftKind::Identity, {}};
}

OperatorSpec make_coin_perm(const RegisterLayout &layout, VertexId v, Coin c1, Coin c2, int walker) {
    return checked(layout, CoinPermOp{walker, v, c1, c2});
}

OperatorSpec make_coin_block(const RegisterLayout &layout, std::vector<CoinBlockEntry> blocks, int walker) {
    return checked(layout, CoinBlockOp{walker, std::move(blocks)});
}

OperatorSpec make_data_controlled_coin(
    const RegisterLayout &layout, VertexId v, std::vector<int> controls, std::vector<bool> pattern,
    CoinAction action, int walker) {
    return checked(layout, DataControlledCoinOp{walker, v, std::move(controls), std::move(pattern), std::move(action)});
}

OperatorSpec make_coin_controlled_data(
    const RegisterLayout &layout, VertexId v, std::vector<Coin> coin_condition, std::vector<int> targets,
    Matrix unitary, int walker, std::optional<CoinAction> coin_action) {
    return checked(
        layout, CoinControlledDataOp{
                    walker, v, std::move(coin_condition), std::move(targets), std::move(unitary),
                    std::move(coin_action)});
}

OperatorSpec make_walk_interaction(
    const RegisterLayout &layout, VertexId v, Coin control_coin, CoinAction action, int control_walker,
    int target_walker) {
    return checked(layout, WalkInteractionOp{v, control_coin, control_walker, target_walker, std::move(action)});
}

OperatorSpec make_fanout(
    const RegisterLayout &layout, VertexId v, Coin incoming, std::vector<VertexId> successors,
    std::vector<int> walkers) {
    const auto &g = layout.graph();
    if (incoming == 0) {
        throw PreconditionError("fan-out control must arrive on a proper port, not the self-loop");
    }
    std::set<VertexId> distinct(successors.begin(), successors.end());
    if (distinct.size() != successors.size()) {
        throw PreconditionError("fan-out at '" + g.label(v) + "' lists a successor twice");
    }
    std::vector<Coin> ports;
    for (VertexId u : successors) {
        auto p = g.port_of(v, u);
        if (!p || *p == 0) {
            throw PreconditionError(
                "fan-out successor '" + g.label(u) + "' is not a neighbor of '" + g.label(v) + "'");
        }
        ports.push_back(*p);
    }
    return checked(layout, FanoutOp{v, incoming, std::move(successors), std::move(ports), std::move(walkers), false});
}

std::vector<OperatorSpec> expand_fanout(const FanoutOp &op) {
    std::vector<OperatorSpec> out;
    for (size_t j = 1; j < op.walkers.size(); ++j) {
        out.push_back(WalkInteractionOp{op.vertex, op.incoming, op.walkers[0], op.walkers[j], CoinSwap{0, op.ports[j]}});
    }
    out.push_back(CoinPermOp{op.walkers[0], op.vertex, op.incoming, op.ports[0]});
    if (op.inverse) {
        std::reverse(out.begin(), out.end());
    }
    return out;
}

CoinAction inverse_action(const CoinAction &action) {
    if (std::holds_alternative<CoinSwap>(action)) {
        return action;
    }
    const auto &block = std::get<CoinUnitary>(action);
    if (is_hermitian(block.unitary)) {
        return action;
    }
    return CoinUnitary{block.coins, block.unitary.adjoint()};
}

namespace {

Matrix inverse_matrix(const Matrix &m) {
    if (is_hermitian(m)) {
        return m;
    }
    return m.adjoint();
}

struct Inverter {
    std::vector<OperatorSpec> operator()(const ShiftOp &op) const {
        return {op};
    }
    std::vector<OperatorSpec> operator()(const CoinPermOp &op) const {
        return {op};
    }
    std::vector<OperatorSpec> operator()(const CoinBlockOp &op) const {
        CoinBlockOp inv = op;
        for (auto &entry : inv.blocks) {
            entry.block = std::get<CoinUnitary>(inverse_action(entry.block));
        }
        return {inv};
    }
    std::vector<OperatorSpec> operator()(const DataControlledCoinOp &op) const {
        DataControlledCoinOp inv = op;
        inv.action = inverse_action(op.action);
        return {inv};
    }
    std::vector<OperatorSpec> operator()(const CoinControlledDataOp &op) const {
        CoinControlledDataOp k = op;
        k.unitary = inverse_matrix(op.unitary);
        k.coin_action.reset();
        if (!op.coin_action) {
            return {k};
        }
        std::vector<OperatorSpec> out;
        const CoinAction undo = inverse_action(*op.coin_action);
        if (const auto *swap = std::get_if<CoinSwap>(&undo)) {
            out.push_back(CoinPermOp{op.walker, op.vertex, swap->c1, swap->c2});
        } else {
            out.push_back(CoinBlockOp{op.walker, {CoinBlockEntry{op.vertex, std::get<CoinUnitary>(undo)}}});
        }
        out.push_back(k);
        return out;
    }
    std::vector<OperatorSpec> operator()(const WalkInteractionOp &op) const {
        WalkInteractionOp inv = op;
        inv.action = inverse_action(op.action);
        return {inv};
    }
    std::vector<OperatorSpec> operator()(const FanoutOp &op) const {
        FanoutOp inv = op;
        inv.inverse = !op.inverse;
        return {inv};
    }
    std::vector<OperatorSpec> operator()(const MeasureAndCorrectOp &) const {
        throw PreconditionError("a measurement has no inverse");
    }
};

}  // namespace

std::vector<OperatorSpec> inverse_ops(const OperatorSpec &op) {
    return std::visit(Inverter{}, op);
}

Schedule invert_schedule(const Schedule &schedule) {
    if (schedule.measurement) {
        throw PreconditionError("cannot invert a schedule that contains a measurement");
    }
    const auto &ts = schedule.timesteps;
    const size_t n = ts.size();
    Schedule out;
    // Step i of the result undoes shift n-1-i, then the ops of step n-1-i.
    for (size_t i = 0; i <= n; ++i) {
        Timestep step;
        if (i > 0) {
            const auto &ops = ts[n - i].ops;
            for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
                for (auto &inv : inverse_ops(*it)) {
                    step.ops.push_back(std::move(inv));
                }
            }
        }
        step.shift = i < n ? ts[n - 1 - i].shift : ShiftOp{};
        bool idle = step.ops.empty() && (step.shift.kind == ShiftKind::Identity || step.shift.walkers.empty());
        if (!idle) {
            out.timesteps.push_back(std::move(step));
        }
    }
    return out;
}

std::string kind_name(const OperatorSpec &op) {
    static const char *names[] = {"Shift",           "CoinPerm",        "CoinBlock", "DataControlledCoin",
                                  "CoinControlledData", "WalkInteraction", "Fanout",    "MeasureAndCorrect"};
    return names[op.index()];
}

bool is_permutation(const OperatorSpec &op) {
    if (std::holds_alternative<ShiftOp>(op) || std::holds_alternative<CoinPermOp>(op) ||
        std::holds_alternative<FanoutOp>(op)) {
        return true;
    }
    if (const auto *d = std::get_if<DataControlledCoinOp>(&op)) {
        return std::holds_alternative<CoinSwap>(d->action);
    }
    if (const auto *w = std::get_if<WalkInteractionOp>(&op)) {
        return std::holds_alternative<CoinSwap>(w->action);
    }
    return false;
}

}  // namespace qwcp
