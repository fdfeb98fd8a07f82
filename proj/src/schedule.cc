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

#include "qwcp/schedule.h"

#include "json.hpp"
#include "qwcp/errors.h"
#include "qwcp/statevec.h"

namespace qwcp {

using nlohmann::json;

std::vector<OperatorSpec> Schedule::flatten() const {
    std::vector<OperatorSpec> out;
    for (const auto &step : timesteps) {
        out.insert(out.end(), step.ops.begin(), step.ops.end());
        if (step.shift.kind == ShiftKind::FlipFlop && !step.shift.walkers.empty()) {
            out.push_back(step.shift);
        }
    }
    if (measurement) {
        out.push_back(*measurement);
    }
    return out;
}

void Schedule::append(const Schedule &tail) {
    if (measurement && !tail.empty()) {
        throw PreconditionError("a measurement may only end a schedule");
    }
    timesteps.insert(timesteps.end(), tail.timesteps.begin(), tail.timesteps.end());
    if (tail.measurement) {
        measurement = tail.measurement;
    }
}

void validate_schedule(const RegisterLayout &layout, const Schedule &schedule) {
    for (size_t t = 0; t < schedule.timesteps.size(); ++t) {
        const auto &step = schedule.timesteps[t];
        for (const auto &op : step.ops) {
            if (std::holds_alternative<ShiftOp>(op)) {
                throw PreconditionError("timestep " + std::to_string(t) + " holds more than one shift");
            }
            if (std::holds_alternative<MeasureAndCorrectOp>(op)) {
                throw PreconditionError("timestep " + std::to_string(t) + " holds a measurement");
            }
            validate_operator(layout, op);
        }
        validate_operator(layout, step.shift);
    }
    if (schedule.measurement) {
        validate_operator(layout, *schedule.measurement);
    }
}

namespace {

json matrix_json(const Matrix &m) {
    json re = json::array();
    json im = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json rr = json::array();
        json ii = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            rr.push_back(m(r, c).real());
            ii.push_back(m(r, c).imag());
        }
        re.push_back(std::move(rr));
        im.push_back(std::move(ii));
    }
    return {{"re", re}, {"im", im}};
}

Matrix matrix_from(const json &j) {
    const auto &re = j.at("re");
    const auto &im = j.at("im");
    const auto n = static_cast<Eigen::Index>(re.size());
    if (n == 0 || im.size() != re.size()) {
        throw ParseError("schedule: matrix needs matching non-empty re and im parts");
    }
    Matrix m(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
        if (re[r].size() != re.size() || im[r].size() != re.size()) {
            throw ParseError("schedule: matrix must be square");
        }
        for (Eigen::Index c = 0; c < n; ++c) {
            m(r, c) = Amplitude(re[r][c].get<double>(), im[r][c].get<double>());
        }
    }
    return m;
}

struct Writer {
    const RegisterLayout &layout;

    std::string node(VertexId v) const {
        return layout.graph().label(v);
    }
    std::string qubit(int i) const {
        const auto &dq = layout.data_order().at(i);
        return layout.graph().label(dq.node) + "." + dq.name;
    }
    json qubits(const std::vector<int> &list) const {
        json out = json::array();
        for (int i : list) {
            out.push_back(qubit(i));
        }
        return out;
    }
    json action(const CoinAction &a) const {
        if (const auto *swap = std::get_if<CoinSwap>(&a)) {
            return {{"swap", {swap->c1, swap->c2}}};
        }
        const auto &block = std::get<CoinUnitary>(a);
        return {{"coins", block.coins}, {"unitary", matrix_json(block.unitary)}};
    }

    json operator()(const ShiftOp &op) const {
        return {
            {"kind", "Shift"},
            {"shift", op.kind == ShiftKind::FlipFlop ? "flipflop" : "identity"},
            {"walkers", op.walkers}};
    }
    json operator()(const CoinPermOp &op) const {
        return {{"kind", "CoinPerm"}, {"walker", op.walker}, {"node", node(op.vertex)}, {"c1", op.c1}, {"c2", op.c2}};
    }
    json operator()(const CoinBlockOp &op) const {
        json blocks = json::array();
        for (const auto &e : op.blocks) {
            json b = action(e.block);
            b["node"] = node(e.vertex);
            blocks.push_back(std::move(b));
        }
        return {{"kind", "CoinBlock"}, {"walker", op.walker}, {"blocks", blocks}};
    }
    json operator()(const DataControlledCoinOp &op) const {
        std::string pattern;
        for (bool b : op.pattern) {
            pattern += b ? '1' : '0';
        }
        return {
            {"kind", "DataControlledCoin"},
            {"walker", op.walker},
            {"node", node(op.vertex)},
            {"controls", qubits(op.controls)},
            {"pattern", pattern},
            {"action", action(op.action)}};
    }
    json operator()(const CoinControlledDataOp &op) const {
        json out = {
            {"kind", "CoinControlledData"},
            {"walker", op.walker},
            {"node", node(op.vertex)},
            {"coin_condition", op.coin_condition},
            {"targets", qubits(op.targets)},
            {"unitary", matrix_json(op.unitary)}};
        if (op.coin_action) {
            out["coin_action"] = action(*op.coin_action);
        }
        return out;
    }
    json operator()(const WalkInteractionOp &op) const {
        return {
            {"kind", "WalkInteraction"},
            {"node", node(op.vertex)},
            {"control_coin", op.control_coin},
            {"control_walker", op.control_walker},
            {"target_walker", op.target_walker},
            {"action", action(op.action)}};
    }
    json operator()(const FanoutOp &op) const {
        json succ = json::array();
        for (VertexId u : op.successors) {
            succ.push_back(node(u));
        }
        return {
            {"kind", "Fanout"},
            {"node", node(op.vertex)},
            {"incoming", op.incoming},
            {"successors", succ},
            {"ports", op.ports},
            {"walkers", op.walkers},
            {"inverse", op.inverse}};
    }
    json operator()(const MeasureAndCorrectOp &op) const {
        json entries = json::array();
        for (const auto &e : op.entries) {
            entries.push_back(
                {{"walker", e.walker},
                 {"a", node(e.a)},
                 {"b", node(e.b)},
                 {"correction", qubit(e.correction_qubit)},
                 {"notify", node(e.notify)}});
        }
        return {{"kind", "MeasureAndCorrect"}, {"entries", entries}};
    }
};

struct Reader {
    const RegisterLayout &layout;

    VertexId node(const json &j) const {
        auto label = j.get<std::string>();
        auto v = layout.graph().find(label);
        if (!v) {
            throw ParseError("schedule: unknown node '" + label + "'");
        }
        return *v;
    }
    int qubit(const json &j) const {
        auto text = j.get<std::string>();
        auto dot = text.find('.');
        if (dot == std::string::npos) {
            throw ParseError("schedule: data qubit '" + text + "' must be written node.name");
        }
        auto v = layout.graph().find(text.substr(0, dot));
        int i = v ? layout.find_data_index(*v, text.substr(dot + 1)) : -1;
        if (i < 0) {
            throw ParseError("schedule: unknown data qubit '" + text + "'");
        }
        return i;
    }
    std::vector<int> qubits(const json &j) const {
        std::vector<int> out;
        for (const auto &q : j) {
            out.push_back(qubit(q));
        }
        return out;
    }
    CoinAction action(const json &j) const {
        if (j.contains("swap")) {
            const auto &s = j.at("swap");
            if (s.size() != 2) {
                throw ParseError("schedule: swap needs two coin values");
            }
            return CoinSwap{s[0].get<Coin>(), s[1].get<Coin>()};
        }
        return CoinUnitary{j.at("coins").get<std::vector<Coin>>(), matrix_from(j.at("unitary"))};
    }

    OperatorSpec op(const json &j) const {
        const auto kind = j.at("kind").get<std::string>();
        if (kind == "Shift") {
            ShiftOp s;
            auto name = j.at("shift").get<std::string>();
            if (name == "flipflop") {
                s.kind = ShiftKind::FlipFlop;
            } else if (name != "identity") {
                throw ParseError("schedule: unknown shift '" + name + "'");
            }
            s.walkers = j.at("walkers").get<std::vector<int>>();
            return s;
        }
        if (kind == "CoinPerm") {
            return CoinPermOp{j.at("walker").get<int>(), node(j.at("node")), j.at("c1").get<Coin>(),
                              j.at("c2").get<Coin>()};
        }
        if (kind == "CoinBlock") {
            CoinBlockOp out{j.at("walker").get<int>(), {}};
            for (const auto &b : j.at("blocks")) {
                auto a = action(b);
                if (!std::holds_alternative<CoinUnitary>(a)) {
                    throw ParseError("schedule: coin block entries need coins and unitary");
                }
                out.blocks.push_back({node(b.at("node")), std::get<CoinUnitary>(a)});
            }
            return out;
        }
        if (kind == "DataControlledCoin") {
            std::vector<bool> pattern;
            for (char c : j.at("pattern").get<std::string>()) {
                if (c != '0' && c != '1') {
                    throw ParseError("schedule: control pattern must be a bit string");
                }
                pattern.push_back(c == '1');
            }
            return DataControlledCoinOp{j.at("walker").get<int>(), node(j.at("node")), qubits(j.at("controls")),
                                        std::move(pattern), action(j.at("action"))};
        }
        if (kind == "CoinControlledData") {
            CoinControlledDataOp out;
            out.walker = j.at("walker").get<int>();
            out.vertex = node(j.at("node"));
            out.coin_condition = j.at("coin_condition").get<std::vector<Coin>>();
            out.targets = qubits(j.at("targets"));
            out.unitary = matrix_from(j.at("unitary"));
            if (j.contains("coin_action")) {
                out.coin_action = action(j.at("coin_action"));
            }
            return out;
        }
        if (kind == "WalkInteraction") {
            return WalkInteractionOp{node(j.at("node")), j.at("control_coin").get<Coin>(),
                                     j.at("control_walker").get<int>(), j.at("target_walker").get<int>(),
                                     action(j.at("action"))};
        }
        if (kind == "Fanout") {
            FanoutOp out;
            out.vertex = node(j.at("node"));
            out.incoming = j.at("incoming").get<Coin>();
            for (const auto &u : j.at("successors")) {
                out.successors.push_back(node(u));
            }
            out.ports = j.at("ports").get<std::vector<Coin>>();
            out.walkers = j.at("walkers").get<std::vector<int>>();
            out.inverse = j.at("inverse").get<bool>();
            return out;
        }
        if (kind == "MeasureAndCorrect") {
            MeasureAndCorrectOp out;
            for (const auto &e : j.at("entries")) {
                out.entries.push_back(
                    {e.at("walker").get<int>(), node(e.at("a")), node(e.at("b")), qubit(e.at("correction")),
                     node(e.at("notify"))});
            }
            return out;
        }
        throw ParseError("schedule: unknown operator kind '" + kind + "'");
    }
};

}  // namespace

std::string serialize_schedule(const Schedule &schedule, const RegisterLayout &layout) {
    Writer w{layout};
    json steps = json::array();
    for (const auto &step : schedule.timesteps) {
        json ops = json::array();
        for (const auto &op : step.ops) {
            ops.push_back(std::visit(w, op));
        }
        steps.push_back({{"ops", ops}, {"shift", w(step.shift)}});
    }
    json doc = {{"timesteps", steps}};
    doc["measurement"] = schedule.measurement ? w(*schedule.measurement) : json(nullptr);
    return doc.dump(1);
}

Schedule parse_schedule(std::string_view text, const RegisterLayout &layout) {
    Reader r{layout};
    Schedule out;
    try {
        json doc = json::parse(text);
        for (const auto &step : doc.at("timesteps")) {
            Timestep t;
            for (const auto &op : step.at("ops")) {
                t.ops.push_back(r.op(op));
            }
            auto shift = r.op(step.at("shift"));
            if (!std::holds_alternative<ShiftOp>(shift)) {
                throw ParseError("schedule: timestep shift slot must hold a Shift");
            }
            t.shift = std::get<ShiftOp>(shift);
            out.timesteps.push_back(std::move(t));
        }
        if (doc.contains("measurement") && !doc.at("measurement").is_null()) {
            auto m = r.op(doc.at("measurement"));
            if (!std::holds_alternative<MeasureAndCorrectOp>(m)) {
                throw ParseError("schedule: measurement slot must hold a MeasureAndCorrect");
            }
            out.measurement = std::get<MeasureAndCorrectOp>(m);
        }
    } catch (const json::exception &e) {
        throw ParseError(std::string("schedule: ") + e.what());
    }
    validate_schedule(layout, out);
    return out;
}

}  // namespace qwcp
