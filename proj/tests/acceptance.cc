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

// Acceptance checks AC1-AC9. Prints one PASS/FAIL line per criterion and
// exits nonzero if any fails.

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "qwcp/errors.h"
#include "qwcp/execute.h"
#include "qwcp/protocols.h"
#include "qwcp/script.h"
#include "qwcp/walkops.h"
#include "testing.h"

using namespace qwcp;
using qwcp::testing::dense_expected;
using qwcp::testing::run_protocol;

namespace {

const std::string kSamples = QWCP_SAMPLES_DIR;
constexpr double kFid = 1e-9;

struct Verdict {
    bool pass = true;
    std::string detail;

    void check(bool ok, const std::string &what) {
        if (!ok && pass) {
            detail = what;
        }
        pass = pass && ok;
    }
};

// Every trace produced by AC1-AC7, for the locality check in AC8.
std::vector<std::pair<std::string, RunTrace>> g_traces;
// Every schedule built by AC1-AC7 with its layout, for the unitarity check.
std::vector<std::pair<RegisterLayout, Schedule>> g_schedules;

void keep(const std::string &name, const RunResult &r) {
    g_traces.emplace_back(name, r.trace);
}

void keep(const CompiledProtocol &cp) {
    g_schedules.emplace_back(cp.layout, cp.schedule);
}

GraphPtr load(const std::string &name) {
    return std::make_shared<const NetworkGraph>(load_network_file(kSamples + "/" + name));
}

PathSpec path(const NetworkGraph &g, std::initializer_list<const char *> labels) {
    PathSpec p;
    for (const char *l : labels) {
        p.nodes.push_back(g.id(l));
    }
    return p;
}

int data(const RegisterLayout &layout, const char *node, const char *name) {
    return layout.data_index(layout.graph().id(node), name);
}

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

const Matrix X = named_gate("X");

// Minimum fidelity and purity of every branch against `want`.
struct Scores {
    double fidelity = 1;
    double purity = 1;
    double probability = 0;
};

Scores score(const RunResult &r, const StateVector &want) {
    Scores s;
    for (const auto &b : r.branches) {
        auto c = compare(b.state, want);
        s.fidelity = std::min(s.fidelity, c.fidelity);
        s.purity = std::min(s.purity, c.walker_purity);
        s.probability += b.probability;
    }
    return s;
}

bool contains(const std::vector<VertexId> &s, VertexId v) {
    return std::find(s.begin(), s.end(), v) != s.end();
}

Verdict ac1() {
    Verdict v;
    auto g = load("grid3x3.json");
    auto p = path(*g, {"n0", "n1", "n2", "n5"});
    RegisterLayout probe(g, 0);
    const int a = data(probe, "n0", "a");
    const int b = data(probe, "n5", "b");
    auto cp = schedule_remote_cu(g, {{{a, true}}, {{b}, X}}, p, Separation::Reverse);
    keep(cp);
    const VertexId target = g->id("n5");
    std::mt19937_64 rng(1001);
    double fid = 1, pur = 1;
    for (int trial = 0; trial < 20; ++trial) {
        auto in = qwcp::testing::random_vector(size_t{1} << probe.num_data(), rng);
        auto r = run_protocol(cp, in);
        keep("AC1", r);
        // First timestep at which the walker has weight on B.
        int first = -1;
        for (size_t t = 0; t < r.trace.supports.size(); ++t) {
            if (contains(r.trace.supports[t][0], target)) {
                first = static_cast<int>(t);
                break;
            }
        }
        v.check(first == 3, "walker first reached B at t=" + std::to_string(first));
        auto s = score(r, dense_expected(cp.layout, in, {{{{a, true}}, {b}, X}}));
        fid = std::min(fid, s.fidelity);
        pur = std::min(pur, s.purity);
    }
    v.check(fid >= 1 - kFid, "fidelity " + num(fid));
    v.check(pur >= 1 - kFid, "purity " + num(pur));
    if (v.pass) {
        v.detail = "B reached at t=3; min fidelity 1-" + num(1 - fid) + ", min purity 1-" + num(1 - pur);
    }
    return v;
}

Verdict ac2() {
    Verdict v;
    auto g = load("grid3x3.json");
    auto p = path(*g, {"n0", "n1", "n2", "n5"});
    RegisterLayout probe(g, 0);
    const int a = data(probe, "n0", "a");
    const int b = data(probe, "n5", "b");
    auto cp = schedule_remote_cu(g, {{{a, true}}, {{b}, X}}, p, Separation::Measure);
    keep(cp);
    std::mt19937_64 rng(1002);
    double fid = 1, pair = 1;
    size_t branches = 0;
    for (int trial = 0; trial < 20; ++trial) {
        auto in = qwcp::testing::random_vector(size_t{1} << probe.num_data(), rng);
        auto r = run_protocol(cp, in, MeasureMode::Kind::Branch);
        keep("AC2", r);
        branches = std::max(branches, r.branches.size());
        auto s = score(r, dense_expected(cp.layout, in, {{{{a, true}}, {b}, X}}));
        fid = std::min(fid, s.fidelity);
        v.check(std::abs(s.probability - 1) <= 1e-10, "branch probabilities sum to " + num(s.probability));
        for (size_t i = 0; i < r.branches.size(); ++i) {
            for (size_t j = i + 1; j < r.branches.size(); ++j) {
                pair = std::min(pair, fidelity(extract_data_state(r.branches[i].state),
                                               extract_data_state(r.branches[j].state)));
            }
        }
    }
    v.check(branches >= 2, "only " + std::to_string(branches) + " branch");
    v.check(fid >= 1 - kFid, "oracle fidelity " + num(fid));
    v.check(pair >= 1 - kFid, "pairwise fidelity " + num(pair));
    if (v.pass) {
        v.detail = std::to_string(branches) + " branches; min oracle fidelity 1-" + num(1 - fid) +
                   ", min pairwise 1-" + num(1 - pair);
    }
    return v;
}

Verdict ac3() {
    Verdict v;
    auto g = load("grid3x3.json");
    RegisterLayout probe(g, 0);
    const int a0 = data(probe, "n0", "a");
    const int a1 = data(probe, "n1", "c");
    const int t = data(probe, "n2", "h");
    auto cp = schedule_multi_control(g, {{{a0, true}, {a1, true}}, {{t}, X}}, path(*g, {"n0", "n1", "n2"}));
    keep(cp);
    const int n = probe.num_data();
    auto bit = [n](int q) { return size_t{1} << (n - 1 - q); };
    int exact = 0;
    for (int in = 0; in < 8; ++in) {
        size_t index = ((in & 4) ? bit(a0) : 0) | ((in & 2) ? bit(a1) : 0) | ((in & 1) ? bit(t) : 0);
        size_t want = (in & 6) == 6 ? index ^ bit(t) : index;
        auto r = run_protocol(cp, qwcp::testing::basis_vector(size_t{1} << n, index));
        keep("AC3", r);
        // Walker back at its start, data on the expected basis state, nothing else.
        auto expected = init_state_entangled(cp.layout, cp.initial_walkers, qwcp::testing::basis_vector(size_t{1} << n, want));
        bool same = r.branches.size() == 1;
        for (uint64_t i = 0; same && i < expected.size(); ++i) {
            same = r.branches[0].state[i] == expected[i];
        }
        exact += same ? 1 : 0;
    }
    v.check(exact == 8, std::to_string(exact) + "/8 truth-table rows exact");
    std::mt19937_64 rng(1003);
    double fid = 1;
    for (int trial = 0; trial < 10; ++trial) {
        auto in = qwcp::testing::random_vector(size_t{1} << n, rng);
        auto r = run_protocol(cp, in);
        keep("AC3", r);
        fid = std::min(fid, score(r, dense_expected(cp.layout, in, {{{{a0, true}, {a1, true}}, {t}, X}})).fidelity);
    }
    v.check(fid >= 1 - kFid, "random-input fidelity " + num(fid));
    if (v.pass) {
        v.detail = "8/8 basis rows bit-exact; min fidelity 1-" + num(1 - fid) + " on 10 superpositions";
    }
    return v;
}

Verdict ac4() {
    Verdict v;
    auto g = load("grid3x3.json");
    RegisterLayout probe(g, 0);
    const int a = data(probe, "n0", "a");
    const int h = data(probe, "n2", "h");
    const int d = data(probe, "n8", "d");
    auto cp = schedule_multipath(
        g, {{a, true}}, {path(*g, {"n0", "n1", "n2"}), path(*g, {"n0", "n3", "n6", "n7", "n8"})},
        {{{h}, X}, {{d}, X}});
    keep(cp);
    std::mt19937_64 rng(1004);
    double fid = 1, pur = 1;
    for (int trial = 0; trial < 20; ++trial) {
        auto in = qwcp::testing::random_vector(size_t{1} << probe.num_data(), rng);
        auto r = run_protocol(cp, in);
        keep("AC4", r);
        auto s = score(r, dense_expected(cp.layout, in, {{{{a, true}}, {h}, X}, {{{a, true}}, {d}, X}}));
        fid = std::min(fid, s.fidelity);
        pur = std::min(pur, s.purity);
        for (int j = 0; j < 2; ++j) {
            pur = std::min(pur, purity_across_cut(r.branches[0].state, cp.layout.walker_qubits(j)));
        }
    }
    v.check(fid >= 1 - kFid, "fidelity " + num(fid));
    v.check(pur >= 1 - kFid, "purity " + num(pur));
    if (v.pass) {
        v.detail = "2 walkers; min fidelity 1-" + num(1 - fid) + ", min purity 1-" + num(1 - pur);
    }
    return v;
}

Verdict ac5() {
    Verdict v;
    auto g = load("tree7.json");
    RegisterLayout probe(g, 0);
    const int a = data(probe, "t0", "a");
    const int b = data(probe, "t3", "b");
    const int c = data(probe, "t6", "c");
    TreeSpec tree{g->id("t0"), {}};
    for (auto [p, q] : {std::pair{"t0", "t1"}, {"t0", "t2"}, {"t1", "t3"}, {"t1", "t4"}, {"t2", "t5"}, {"t2", "t6"}}) {
        tree.edges.emplace_back(g->id(p), g->id(q));
    }
    auto info = validate_tree(*g, tree);
    auto cp = schedule_tree(g, {{a, true}}, tree, {{{b}, X}, {{c}, X}});
    keep(cp);
    const int walkers = cp.layout.walkers();
    const int n = probe.num_data();

    // Control |+>, targets |0>, before separation.
    std::vector<Amplitude> plus(size_t{1} << n, 0);
    plus[0] = plus[size_t{1} << (n - 1 - a)] = std::sqrt(0.5);
    auto fwd = run_schedule(init_state_entangled(cp.layout, cp.initial_walkers, plus), cp.forward);
    keep("AC5 forward", fwd);
    const auto &sup = fwd.trace.supports;
    for (VertexId node : info.nodes()) {
        if (node == info.root) {
            continue;
        }
        std::vector<std::pair<int, int>> hits;  // (walker, timestep) of every new arrival
        for (size_t t = 1; t < sup.size(); ++t) {
            for (int j = 0; j < walkers; ++j) {
                if (contains(sup[t][j], node) && !contains(sup[t - 1][j], node)) {
                    hits.emplace_back(j, static_cast<int>(t));
                }
            }
        }
        v.check(hits.size() == 1, g->label(node) + " reached " + std::to_string(hits.size()) + " times");
        if (hits.size() == 1) {
            v.check(hits[0].second == info.depth.at(node),
                    g->label(node) + " reached at t=" + std::to_string(hits[0].second));
        }
    }
    const double cut = purity_across_cut(fwd.branches[0].state, cp.layout.data_qubits());
    v.check(std::abs(cut - 0.5) <= kFid, "walker-cut purity " + num(cut));

    std::mt19937_64 rng(1005);
    double fid = 1, pur = 1;
    for (int trial = 0; trial < 3; ++trial) {
        auto in = qwcp::testing::random_vector(size_t{1} << n, rng);
        auto r = run_protocol(cp, in);
        keep("AC5", r);
        auto s = score(r, dense_expected(cp.layout, in, {{{{a, true}}, {b}, X}, {{{a, true}}, {c}, X}}));
        fid = std::min(fid, s.fidelity);
        pur = std::min(pur, s.purity);
    }
    v.check(fid >= 1 - kFid, "fidelity " + num(fid));
    v.check(pur >= 1 - kFid, "purity after separation " + num(pur));
    if (v.pass) {
        v.detail = std::to_string(walkers) + " walkers, " + std::to_string(cp.layout.total_bits()) +
                   " bits; each node hit once at its depth; walker-cut purity " + num(cut) + "; min fidelity 1-" +
                   num(1 - fid);
    }
    return v;
}

Verdict ac6() {
    Verdict v;
    auto g = load("path4.json");
    RegisterLayout probe(g, 0);
    GhzBranch br{path(*g, {"p0", "p1", "p2", "p3"}), {}};
    for (const char *node : {"p0", "p1", "p2", "p3"}) {
        br.qubits.push_back(data(probe, node, "q"));
    }
    auto cp = schedule_ghz_path(g, {br});
    keep(cp);
    auto r = run_protocol(cp, qwcp::testing::basis_vector(16, 0));
    keep("AC6", r);
    std::vector<Amplitude> ghz(16, 0);
    ghz[0] = ghz[15] = std::sqrt(0.5);
    auto s = score(r, init_state_entangled(RegisterLayout::data_only(cp.layout.data_order()), {}, ghz));
    int shifts = 0;
    for (const auto &step : cp.forward.timesteps) {
        shifts += step.shift.kind == ShiftKind::FlipFlop && !step.shift.walkers.empty();
    }
    v.check(shifts == 3, std::to_string(shifts) + " propagation steps");
    v.check(s.fidelity >= 1 - kFid, "fidelity " + num(s.fidelity));
    v.check(s.purity >= 1 - kFid, "purity " + num(s.purity));
    if (v.pass) {
        v.detail = "3 propagation steps; fidelity 1-" + num(1 - s.fidelity);
    }
    return v;
}

Verdict ac7() {
    Verdict v;
    auto g = load("triangle.json");
    RegisterLayout probe(g, 0);
    std::vector<std::pair<int, int>> pairs{
        {data(probe, "x", "p"), data(probe, "y", "p")},
        {data(probe, "x", "q"), data(probe, "z", "q")},
        {data(probe, "y", "r"), data(probe, "z", "r")}};
    auto cp = schedule_linklevel(g, pairs);
    keep(cp);
    int shifts = 0;
    for (const auto &step : cp.schedule.timesteps) {
        shifts += step.shift.kind == ShiftKind::FlipFlop && !step.shift.walkers.empty();
    }
    v.check(shifts == 1, std::to_string(shifts) + " shift steps");
    auto r = run_protocol(cp, qwcp::testing::basis_vector(size_t{1} << probe.num_data(), 0));
    keep("AC7", r);
    Eigen::VectorXcd bell = Eigen::VectorXcd::Zero(4);
    bell[0] = bell[3] = std::sqrt(0.5);
    double fid = 1, pur = 1, total = 0;
    for (const auto &b : r.branches) {
        total += b.probability;
        for (auto [qa, qb] : pairs) {
            Matrix rho = reduced_density_matrix(b.state, {cp.layout.data_qubit(qa), cp.layout.data_qubit(qb)});
            fid = std::min(fid, (bell.adjoint() * rho * bell)(0, 0).real());
        }
        for (int j = 0; j < cp.layout.walkers(); ++j) {
            pur = std::min(pur, purity_across_cut(b.state, cp.layout.walker_qubits(j)));
            for (int k = j + 1; k < cp.layout.walkers(); ++k) {
                auto both = cp.layout.walker_qubits(j);
                auto other = cp.layout.walker_qubits(k);
                both.insert(both.end(), other.begin(), other.end());
                pur = std::min(pur, purity_across_cut(b.state, both));
            }
        }
    }
    v.check(std::abs(total - 1) <= 1e-10, "branch probabilities sum to " + num(total));
    v.check(fid >= 1 - kFid, "Bell fidelity " + num(fid));
    v.check(pur >= 1 - kFid, "walker purity " + num(pur));
    if (v.pass) {
        v.detail = "3 Bell pairs over " + std::to_string(r.branches.size()) + " branches; min fidelity 1-" +
                   num(1 - fid) + "; walkers separable";
    }
    return v;
}

// Checks that `op` permutes basis states: amplitudes tagged with distinct
// integers come out as the same set of integers.
bool permutes(const RegisterLayout &layout, const OperatorSpec &op) {
    StateVector s(layout);
    for (uint64_t i = 0; i < s.size(); ++i) {
        s[i] = static_cast<double>(i + 1);
    }
    apply_operator(s, op);
    std::vector<bool> seen(s.size(), false);
    for (uint64_t i = 0; i < s.size(); ++i) {
        const double x = s[i].real();
        const auto k = static_cast<uint64_t>(x);
        if (s[i].imag() != 0 || x != static_cast<double>(k) || k < 1 || k > s.size() || seen[k - 1]) {
            return false;
        }
        seen[k - 1] = true;
    }
    return true;
}

bool blocks_unitary(const OperatorSpec &op) {
    auto action_ok = [](const CoinAction &a) {
        const auto *u = std::get_if<CoinUnitary>(&a);
        return !u || unitarity_error(u->unitary) <= 1e-12;
    };
    if (const auto *b = std::get_if<CoinBlockOp>(&op)) {
        return std::all_of(b->blocks.begin(), b->blocks.end(), [&](const auto &e) { return action_ok(e.block); });
    }
    if (const auto *d = std::get_if<DataControlledCoinOp>(&op)) {
        return action_ok(d->action);
    }
    if (const auto *k = std::get_if<CoinControlledDataOp>(&op)) {
        return unitarity_error(k->unitary) <= 1e-12 && (!k->coin_action || action_ok(*k->coin_action));
    }
    if (const auto *w = std::get_if<WalkInteractionOp>(&op)) {
        return action_ok(w->action);
    }
    return true;
}

Verdict ac8() {
    Verdict v;
    // (a) flip-flop involution on every basis state.
    {
        std::vector<GraphPtr> graphs{
            qwcp::testing::path_graph(6, false), qwcp::testing::star_graph(5), load("triangle.json"),
            load("pair.json")};
        std::vector<std::string> k6;
        std::vector<std::pair<std::string, std::string>> links;
        for (int i = 0; i < 6; ++i) {
            k6.push_back("k" + std::to_string(i));
            for (int j = 0; j < i; ++j) {
                links.emplace_back(k6[j], k6[i]);
            }
        }
        graphs.push_back(qwcp::testing::make_graph(k6, links));
        std::mt19937_64 rng(1081);
        for (int i = 0; i < 6; ++i) {
            graphs.push_back(qwcp::testing::random_graph(2 + i % 5, 0.5, rng));
        }
        uint64_t states = 0;
        bool ok = true;
        for (const auto &g : graphs) {
            RegisterLayout layout(g, 1);
            auto shift = make_flipflop_shift(layout, {0});
            for (uint64_t i = 0; i < layout.dimension(); ++i) {
                StateVector s(layout);
                s[0] = 0;
                s[i] = 1;
                apply_operator(s, shift);
                apply_operator(s, shift);
                ok = ok && s[i] == Amplitude(1);
                ++states;
            }
        }
        v.check(ok, "(a) flip-flop squared is not the identity");
        v.detail = "(a) " + std::to_string(states) + " basis states";
    }
    // (b) norm drift over 1000 random operators.
    {
        std::mt19937_64 rng(1082);
        auto g = qwcp::testing::grid3x3({{"n0", {"a"}}, {"n4", {"b"}}});
        RegisterLayout layout(g, 2);
        auto s = qwcp::testing::random_input(layout, {{0, 0}, {4, 0}}, rng);
        double drift = 0;
        for (int i = 0; i < 1000; ++i) {
            apply_operator(s, qwcp::testing::random_operator(layout, rng));
            drift = std::max(drift, std::abs(s.norm() - 1));
        }
        v.check(drift <= 1e-10, "(b) norm drift " + num(drift));
        v.detail += "; (b) drift " + num(drift);
    }
    // (c) locality of every acceptance run.
    {
        int bad = 0;
        for (const auto &[name, trace] : g_traces) {
            bad += trace.locality_ok ? 0 : 1;
        }
        v.check(!g_traces.empty() && bad == 0, "(c) " + std::to_string(bad) + " runs broke locality");
        v.detail += "; (c) " + std::to_string(g_traces.size()) + " runs local";
    }
    // (d) unitarity of every operator the protocols built.
    {
        int ops = 0;
        bool ok = true;
        for (const auto &[layout, sched] : g_schedules) {
            for (const auto &op : sched.flatten()) {
                if (std::holds_alternative<MeasureAndCorrectOp>(op)) {
                    continue;
                }
                ++ops;
                bool good = blocks_unitary(op) && (!is_permutation(op) || permutes(layout, op));
                v.check(good, "(d) " + kind_name(op) + " is not unitary");
                ok = ok && good;
            }
        }
        v.check(ops > 0, "(d) no operators checked");
        v.detail += "; (d) " + std::to_string(ops) + " operators";
    }
    // (e) a schedule followed by its inverse is the identity.
    {
        std::mt19937_64 rng(1085);
        auto g = qwcp::testing::path_graph(3);
        RegisterLayout layout(g, 2);
        double worst = 1;
        for (int trial = 0; trial < 20; ++trial) {
            Schedule sched;
            for (int t = 0; t < 8; ++t) {
                Timestep step;
                for (int k = 0; k < 3; ++k) {
                    auto op = qwcp::testing::random_operator(layout, rng);
                    if (auto *sh = std::get_if<ShiftOp>(&op)) {
                        step.shift = *sh;
                    } else {
                        step.ops.push_back(op);
                    }
                }
                sched.timesteps.push_back(step);
            }
            auto in = qwcp::testing::random_input(layout, {{0, 0}, {2, 0}}, rng);
            auto mid = run_schedule(in, sched).branches[0].state;
            auto out = run_schedule(mid, invert_schedule(sched)).branches[0].state;
            worst = std::min(worst, fidelity(in, out));
        }
        // The protocols' own forward schedules, data gates included.
        for (const auto &[layout2, sched] : g_schedules) {
            if (sched.measurement || layout2.total_bits() > 20) {
                continue;
            }
            Schedule fwd = sched;
            auto in = qwcp::testing::random_vector(layout2.dimension(), rng);
            StateVector s(layout2);
            for (uint64_t i = 0; i < s.size(); ++i) {
                s[i] = in[i];
            }
            // Keep only valid walker positions so supports stay on the graph.
            const auto &gr = layout2.graph();
            for (uint64_t i = 0; i < s.size(); ++i) {
                for (int j = 0; j < layout2.walkers(); ++j) {
                    VertexId vtx = layout2.walker_vertex(j, i);
                    if (vtx >= static_cast<VertexId>(gr.num_vertices()) || !gr.valid_coin(vtx, layout2.walker_coin(j, i))) {
                        s[i] = 0;
                    }
                }
            }
            s.normalize();
            auto mid = run_schedule(s, fwd).branches[0].state;
            auto out = run_schedule(mid, invert_schedule(fwd)).branches[0].state;
            worst = std::min(worst, fidelity(s, out));
        }
        v.check(worst >= 1 - 1e-10, "(e) fidelity " + num(worst));
        v.detail += "; (e) min fidelity 1-" + num(1 - worst);
    }
    return v;
}

Verdict ac9() {
    Verdict v;
    int scripts = 0;
    for (const char *name : {"remote_cnot_measure.qw", "linklevel.qw", "multipath.qw", "lowlevel.qw"}) {
        auto s = parse_script_file(kSamples + "/" + name);
        for (uint64_t seed : {42u, 7u}) {
            ExecuteOptions o{MeasureMode::Kind::Sample, seed};
            auto a = report_json(execute(s, o).report, *s.graph, o);
            auto b = report_json(execute(s, o).report, *s.graph, o);
            v.check(a == b, std::string(name) + " differs between runs");
        }
        ExecuteOptions o{MeasureMode::Kind::Branch, 0};
        v.check(report_json(execute(s, o).report, *s.graph, o) == report_json(execute(s, o).report, *s.graph, o),
                std::string(name) + " branch report differs");
        ++scripts;
    }
    if (v.pass) {
        v.detail = std::to_string(scripts) + " scripts, byte-identical reports";
    }
    return v;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char *, std::function<Verdict()>>> criteria{
        {"AC1", ac1}, {"AC2", ac2}, {"AC3", ac3}, {"AC4", ac4}, {"AC5", ac5},
        {"AC6", ac6}, {"AC7", ac7}, {"AC8", ac8}, {"AC9", ac9}};
    int failed = 0;
    for (const auto &[name, fn] : criteria) {
        Verdict v;
        try {
            v = fn();
        } catch (const std::exception &e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        std::printf("%s %s %s\n", name, v.pass ? "PASS" : "FAIL", v.detail.c_str());
        std::fflush(stdout);
        failed += v.pass ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
