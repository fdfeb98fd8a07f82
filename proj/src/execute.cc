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

#include "qwcp/execute.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "json.hpp"
#include "qwcp/errors.h"

namespace qwcp {

namespace {

struct Stage {
    std::string name;
    RegisterLayout layout;
    std::vector<WalkerPlacement> placements;
    Schedule schedule;
    GateList oracle;
    std::vector<GateEvent> gate_events;
    int propagation_steps = 0;
};

Stage from_protocol(CompiledProtocol p) {
    return Stage{std::move(p.name), std::move(p.layout), std::move(p.initial_walkers), std::move(p.schedule),
                 std::move(p.oracle), std::move(p.gate_events), p.propagation_steps};
}

struct Compiler {
    const Script &script;

    Stage operator()(const RemoteCuCommand &c) const {
        return from_protocol(schedule_remote_cu(script.graph, c.request, c.path, c.separation, c.hops));
    }
    Stage operator()(const RemoteMcuCommand &c) const {
        return from_protocol(schedule_multi_control(script.graph, c.request, c.path));
    }
    Stage operator()(const MultipathCommand &c) const {
        return from_protocol(schedule_multipath(script.graph, c.controls, c.paths, c.gates));
    }
    Stage operator()(const TreeCommand &c) const {
        return from_protocol(schedule_tree(script.graph, c.controls, c.tree, c.gates));
    }
    Stage operator()(const GhzCommand &c) const {
        return from_protocol(schedule_ghz_path(script.graph, c.branches));
    }
    Stage operator()(const LinkCommand &c) const {
        return from_protocol(schedule_linklevel(script.graph, c.pairs));
    }
    template <class Low>
    Stage operator()(const Low &) const {
        throw PreconditionError("internal: low-level command outside a low-level stage");
    }
};

bool low_level(const Command &c) {
    return std::holds_alternative<PlaceCommand>(c) || std::holds_alternative<StepCommand>(c) ||
           std::holds_alternative<OracleCommand>(c);
}

Stage low_level_stage(const Script &script, std::vector<const ScriptCommand *> group) {
    if (!script.walkers) {
        throw PreconditionError("low-level commands need a `walkers` declaration");
    }
    const int k = *script.walkers;
    Stage stage{"steps", RegisterLayout(script.graph, k), {}, {}, {}, {}, 0};
    std::vector<std::optional<WalkerPlacement>> placed(k);
    Timestep current;
    bool open = false;
    for (const auto *sc : group) {
        const auto &c = sc->command;
        if (const auto *p = std::get_if<PlaceCommand>(&c)) {
            if (placed[p->walker]) {
                throw PreconditionError("line " + std::to_string(sc->line) + ": walker placed twice");
            }
            placed[p->walker] = p->at;
        } else if (const auto *o = std::get_if<OracleCommand>(&c)) {
            stage.oracle.push_back(o->gate);
        } else {
            const auto &op = std::get<StepCommand>(c).op;
            if (stage.schedule.measurement && !std::holds_alternative<MeasureAndCorrectOp>(op)) {
                throw PreconditionError("line " + std::to_string(sc->line) + ": a measurement must end the stage");
            }
            if (const auto *shift = std::get_if<ShiftOp>(&op)) {
                current.shift = *shift;
                if (shift->kind == ShiftKind::FlipFlop && !shift->walkers.empty()) {
                    ++stage.propagation_steps;
                }
                stage.schedule.timesteps.push_back(std::move(current));
                current = Timestep{};
                open = false;
            } else if (const auto *m = std::get_if<MeasureAndCorrectOp>(&op)) {
                if (!stage.schedule.measurement) {
                    stage.schedule.measurement.emplace();
                }
                for (const auto &e : m->entries) {
                    stage.schedule.measurement->entries.push_back(e);
                }
            } else {
                current.ops.push_back(op);
                open = true;
            }
        }
    }
    if (open) {
        if (stage.schedule.measurement) {
            throw PreconditionError("operators after the final shift must be closed by a shift before measure");
        }
        stage.schedule.timesteps.push_back(std::move(current));
    }
    for (int j = 0; j < k; ++j) {
        if (!placed[j]) {
            throw PreconditionError("walker " + std::to_string(j) + " has no `place` line");
        }
        stage.placements.push_back(*placed[j]);
    }
    for (size_t t = 0; t < stage.schedule.timesteps.size(); ++t) {
        for (const auto &op : stage.schedule.timesteps[t].ops) {
            if (std::holds_alternative<CoinControlledDataOp>(op)) {
                stage.gate_events.push_back({std::get<CoinControlledDataOp>(op).vertex, static_cast<int>(t)});
            }
        }
    }
    return stage;
}

std::vector<Stage> compile_stages(const Script &script) {
    std::vector<Stage> out;
    std::vector<const ScriptCommand *> group;
    for (const auto &sc : script.commands) {
        if (low_level(sc.command)) {
            group.push_back(&sc);
            continue;
        }
        if (!group.empty()) {
            out.push_back(low_level_stage(script, std::move(group)));
            group.clear();
        }
        out.push_back(std::visit(Compiler{script}, sc.command));
    }
    if (!group.empty()) {
        out.push_back(low_level_stage(script, std::move(group)));
    }
    return out;
}

struct Track {
    StateVector data;
    StateVector oracle;
    BranchReport report;
    std::optional<StateVector> full;
};

}  // namespace

Execution execute(const Script &script, const ExecuteOptions &options) {
    if (!script.graph) {
        throw PreconditionError("script has no network");
    }
    auto stages = compile_stages(script);
    const RegisterLayout data_layout = RegisterLayout::data_only(RegisterLayout(script.graph, 0).data_order());
    StateVector initial = init_state(data_layout, {}, script.inits);

    std::vector<Track> tracks;
    tracks.push_back({initial, initial, {}, std::nullopt});
    Report report;
    for (size_t s = 0; s < stages.size(); ++s) {
        const auto &stage = stages[s];
        StageReport sr{stage.name,  stage.layout.walkers(), stage.layout.total_bits(), 0, stage.propagation_steps,
                       stage.gate_events, {}};
        std::vector<Track> next;
        for (size_t b = 0; b < tracks.size(); ++b) {
            auto &track = tracks[b];
            StateVector start = init_state_entangled(stage.layout, stage.placements, track.data.amplitudes());
            RunOptions run{options.mode, options.seed + 7919 * s + b};
            RunResult result = run_schedule(std::move(start), stage.schedule, run);
            if (b == 0) {
                sr.steps = result.trace.steps;
                sr.trace = result.trace;
            }
            report.locality_ok = report.locality_ok && result.trace.locality_ok &&
                                 result.trace.max_norm_drift <= kNormTolerance;
            StateVector oracle = oracle_apply(track.oracle, stage.oracle);
            for (auto &branch : result.branches) {
                Comparison cmp = compare(branch.state, oracle);
                BranchReport br = track.report;
                br.probability *= branch.probability;
                br.fidelity = std::min(br.fidelity, cmp.fidelity);
                br.walker_purity = std::min(br.walker_purity, cmp.walker_purity);
                br.final_norm = branch.state.norm();
                br.pass = br.pass && cmp.pass && result.trace.locality_ok &&
                          std::abs(br.final_norm - 1) <= kNormTolerance;
                for (auto &m : branch.measurements) {
                    br.measurements.push_back({static_cast<int>(s), std::move(m)});
                }
                for (auto &m : branch.messages) {
                    br.messages.push_back({static_cast<int>(s), std::move(m)});
                }
                StateVector data = extract_data_state(branch.state);
                next.push_back({std::move(data), oracle, std::move(br), std::move(branch.state)});
            }
        }
        report.steps += sr.steps;
        report.stages.push_back(std::move(sr));
        tracks = std::move(next);
    }

    Execution out{report, {}};
    auto &r = out.report;
    r.pass = r.locality_ok;
    for (auto &t : tracks) {
        if (std::abs(t.report.final_norm - 1) > std::abs(r.final_norm - 1)) {
            r.final_norm = t.report.final_norm;
        }
        r.fidelity_vs_oracle = std::min(r.fidelity_vs_oracle, t.report.fidelity);
        r.walker_purity = std::min(r.walker_purity, t.report.walker_purity);
        r.pass = r.pass && t.report.pass;
        r.branches.push_back(t.report);
        out.final_states.push_back(t.full ? std::move(*t.full) : std::move(t.data));
    }
    return out;
}

namespace {

using nlohmann::json;

json labels(const NetworkGraph &g, const std::vector<VertexId> &vs) {
    json out = json::array();
    for (VertexId v : vs) {
        out.push_back(g.label(v));
    }
    return out;
}

}  // namespace

std::string report_json(const Report &report, const NetworkGraph &g, const ExecuteOptions &options) {
    json doc;
    doc["schema"] = 1;
    doc["mode"] = options.mode == MeasureMode::Kind::Branch ? "branch" : "sample";
    doc["seed"] = options.seed;
    doc["steps"] = report.steps;
    doc["final_norm"] = report.final_norm;
    doc["fidelity_vs_oracle"] = report.fidelity_vs_oracle;
    doc["walker_purity"] = report.walker_purity;
    doc["locality_ok"] = report.locality_ok;
    doc["pass"] = report.pass;

    json stages = json::array();
    json supports = json::array();
    for (size_t s = 0; s < report.stages.size(); ++s) {
        const auto &st = report.stages[s];
        json events = json::array();
        for (const auto &e : st.gate_events) {
            events.push_back({{"node", g.label(e.node)}, {"timestep", e.timestep}});
        }
        stages.push_back({{"name", st.name},
                          {"walkers", st.walkers},
                          {"total_bits", st.total_bits},
                          {"steps", st.steps},
                          {"propagation_steps", st.propagation_steps},
                          {"gate_events", events},
                          {"locality_ok", st.trace.locality_ok},
                          {"violations", st.trace.violations},
                          {"max_norm_drift", st.trace.max_norm_drift}});
        for (size_t t = 0; t < st.trace.supports.size(); ++t) {
            json walkers = json::array();
            for (const auto &w : st.trace.supports[t]) {
                walkers.push_back(labels(g, w));
            }
            supports.push_back({{"stage", s}, {"t", t}, {"walkers", walkers}});
        }
    }
    doc["stages"] = stages;
    doc["supports"] = supports;

    json measurements = json::array();
    json messages = json::array();
    json branches = json::array();
    for (size_t b = 0; b < report.branches.size(); ++b) {
        const auto &br = report.branches[b];
        for (const auto &m : br.measurements) {
            std::string bases;
            for (auto basis : m.record.bases) {
                bases += basis == Basis::X ? 'X' : 'Z';
            }
            measurements.push_back({{"branch", b},
                                    {"stage", m.stage},
                                    {"qubits", m.record.qubits},
                                    {"bases", bases},
                                    {"outcomes", m.record.outcomes},
                                    {"probability", m.record.probability}});
        }
        for (const auto &m : br.messages) {
            messages.push_back({{"branch", b},
                                {"stage", m.stage},
                                {"walker", m.message.walker},
                                {"to", g.label(m.message.to)},
                                {"outcomes", m.message.outcomes},
                                {"z_correction", m.message.corrected}});
        }
        branches.push_back({{"probability", br.probability},
                            {"fidelity", br.fidelity},
                            {"walker_purity", br.walker_purity},
                            {"final_norm", br.final_norm},
                            {"pass", br.pass}});
    }
    doc["measurements"] = measurements;
    doc["classical_messages"] = messages;
    doc["branches"] = branches;
    return doc.dump(2) + "\n";
}

std::string format_trace(const Report &report, const NetworkGraph &g) {
    std::ostringstream out;
    for (size_t s = 0; s < report.stages.size(); ++s) {
        const auto &st = report.stages[s];
        out << "stage " << s << " (" << st.name << ")\n";
        for (size_t t = 0; t < st.trace.supports.size(); ++t) {
            out << "  t=" << t;
            const auto &walkers = st.trace.supports[t];
            for (size_t j = 0; j < walkers.size(); ++j) {
                out << "  w" << j << "={";
                for (size_t i = 0; i < walkers[j].size(); ++i) {
                    out << (i ? "," : "") << g.label(walkers[j][i]);
                }
                out << "}";
            }
            out << "\n";
        }
        for (const auto &v : st.trace.violations) {
            out << "  violation: " << v << "\n";
        }
    }
    return out.str();
}

}  // namespace qwcp
