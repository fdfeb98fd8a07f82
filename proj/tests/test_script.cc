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

#include "qwcp/script.h"

#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "json.hpp"
#include "qwcp/errors.h"
#include "qwcp/execute.h"
#include "testing.h"

using namespace qwcp;

namespace {

const std::string kSamples = QWCP_SAMPLES_DIR;

ParseOptions in_samples() {
    ParseOptions o;
    o.base_dir = kSamples;
    return o;
}

Script parse(const std::string &text) {
    return parse_script(text, in_samples());
}

ParseError parse_error(const std::string &text) {
    try {
        parse(text);
    } catch (const ParseError &e) {
        return e;
    }
    ADD_FAILURE() << "no error for:\n" << text;
    return ParseError("none");
}

const char *kSampleNames[] = {"remote_cnot.qw", "remote_cnot_measure.qw", "toffoli.qw", "multipath.qw",
                              "tree.qw",        "ghz.qw",                 "linklevel.qw", "lowlevel.qw"};

}  // namespace

TEST(script, parse_remote_cu) {
    auto s = parse("network grid3x3.json\nremote_cu control=n0.a target=n5.b path=n0,n1,n2,n5 gate=X separation=reverse\n");
    ASSERT_EQ(s.commands.size(), 1u);
    EXPECT_EQ(s.commands[0].line, 2);
    const auto &cmd = std::get<RemoteCuCommand>(s.commands[0].command);
    RegisterLayout layout(s.graph, 0);
    const int a = layout.data_index(s.graph->id("n0"), "a");
    const int b = layout.data_index(s.graph->id("n5"), "b");
    EXPECT_EQ(cmd.request.controls, (std::vector<ControlQubit>{{a, true}}));
    EXPECT_EQ(cmd.request.gate.targets, std::vector<int>{b});
    EXPECT_TRUE(same_matrix(cmd.request.gate.unitary, named_gate("X")));
    EXPECT_EQ(cmd.path.nodes.size(), 4u);
    EXPECT_EQ(cmd.separation, Separation::Reverse);
}

TEST(script, custom_gate_is_column_major) {
    Matrix m = parse_gate("U[0,0,1,0;-1,0,0,0]");
    Matrix want(2, 2);
    want << 0, -1, 1, 0;
    EXPECT_TRUE(same_matrix(m, want));
    Matrix r = parse_gate("U[0.6,0,0.8,0;0.8,0,-0.6,0]");
    EXPECT_TRUE(is_unitary(r));
    EXPECT_TRUE(same_matrix(parse_gate(format_gate(m)), m));
    EXPECT_TRUE(same_matrix(parse_gate("H"), named_gate("H")));
    EXPECT_THROW(parse_gate("U[1,0,1,0;1,0,1,0]"), std::exception);
    EXPECT_THROW(parse_gate("U[1,0,0]"), std::exception);
    EXPECT_THROW(parse_gate("NOPE"), std::exception);
}

TEST(script, samples_round_trip) {
    for (const char *name : kSampleNames) {
        auto s = parse_script_file(kSamples + "/" + name);
        auto text = serialize_script(s);
        auto back = parse(text);
        EXPECT_EQ(back, s) << name << "\n" << text;
        EXPECT_EQ(serialize_script(back), text) << name;
    }
}

TEST(script, error_positions) {
    auto e = parse_error("network grid3x3.json\nremote_cu control=n0.a target=n5.b path=n0,n4 gate=X\n");
    EXPECT_EQ(e.line(), 2);
    EXPECT_GT(e.column(), 0);
    EXPECT_NE(e.message().find("n0"), std::string::npos) << e.what();

    e = parse_error("network grid3x3.json\n\nfrobnicate x=1\n");
    EXPECT_EQ(e.line(), 3);
    EXPECT_EQ(e.column(), 1);

    e = parse_error("network grid3x3.json\ninit n0.zz=0\n");
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 6);

    e = parse_error("network grid3x3.json\n  init n9.a=0\n");
    EXPECT_EQ(e.column(), 8);
}

TEST(script, rejects_malformed_scripts) {
    parse_error("");
    parse_error("remote_cu control=n0.a target=n5.b path=n0,n1,n2,n5 gate=X\n");
    parse_error("network grid3x3.json\nnetwork grid3x3.json\n");
    parse_error("network nowhere.json\n");
    parse_error("network grid3x3.json\ninit n0.a=2\n");
    parse_error("network grid3x3.json\nremote_cu control=n0.a target=n5.b path=n0,n1,n2,n5\n");
    parse_error("network grid3x3.json\nremote_cu control=n0.a target=n5.b path=n0,n1,n2,n5 gate=X bogus=1\n");
    parse_error("network grid3x3.json\nremote_cu control=n0.a target=n5.b path=n0,n1,n2,n5 gate=X separation=maybe\n");
    parse_error("network grid3x3.json\nremote_cu control=n0.a target=n5.b path=n0,n1,n2,n5 gate=U[1,0,1,0;1,0,1,0]\n");
    parse_error("network grid3x3.json\nremote_mcu controls=n0.a,n1.c string=1 target=n5.b path=n0,n1,n2,n5 gate=X\n");
    parse_error("network grid3x3.json\ntree control=n0.a root=n0 edges=n0-n1 target=n1.c gate=X\n");
    parse_error("network grid3x3.json\nstep shift flipflop\n");
    parse_error("network grid3x3.json\nwalkers 1\nstep coinperm walker=3 node=n0 swap=0,1\n");
    parse_error("network grid3x3.json\nwalkers 1\nstep shift sideways\n");
}

TEST(script, walker_budget) {
    auto e = parse_error(
        "network grid3x3.json\nwalkers 1\nmultipath control=n0.a path=n0,n1,n2 target=n2.h gate=X "
        "path=n0,n3,n6,n7,n8 target=n8.d gate=X\n");
    EXPECT_EQ(e.line(), 3);
    EXPECT_NE(e.message().find("budget"), std::string::npos);
    auto s = parse_script_file(kSamples + "/tree.qw");
    EXPECT_EQ(walkers_needed(*s.graph, s.commands[0].command), 4);
}

TEST(script, network_override) {
    ParseOptions o = in_samples();
    o.network_override = kSamples + "/path4.json";
    auto s = parse_script("network grid3x3.json\n", o);
    EXPECT_EQ(s.graph->num_vertices(), 4u);
}

TEST(script, init_states) {
    auto s = parse("network pair.json\ninit A.a=+ B.b=[0.6,0,0,0.8]\n");
    ASSERT_EQ(s.inits.size(), 2u);
    EXPECT_NEAR(s.inits.at(0)[0].real(), std::sqrt(0.5), 1e-15);
    EXPECT_NEAR(s.inits.at(1)[1].imag(), 0.8, 1e-15);
}

TEST(script, execute_remote_cnot) {
    auto s = parse_script_file(kSamples + "/remote_cnot.qw");
    auto run = execute(s, {MeasureMode::Kind::Branch, 0});
    const auto &r = run.report;
    EXPECT_TRUE(r.pass);
    EXPECT_GE(r.fidelity_vs_oracle, 1 - 1e-9);
    EXPECT_GE(r.walker_purity, 1 - 1e-9);
    EXPECT_TRUE(r.locality_ok);
    // Forward pass visits 4 nodes; the reversal walks 3 hops back and undoes the first coin.
    EXPECT_EQ(r.steps, 2 * 3 + 2);
    ASSERT_EQ(r.stages.size(), 1u);
    EXPECT_EQ(r.stages[0].propagation_steps, 3);
    EXPECT_EQ(run.final_states.size(), 1u);
}

TEST(script, execute_measure_branches) {
    auto s = parse_script_file(kSamples + "/remote_cnot_measure.qw");
    auto run = execute(s, {MeasureMode::Kind::Branch, 0});
    const auto &r = run.report;
    EXPECT_TRUE(r.pass);
    ASSERT_GE(r.branches.size(), 2u);
    double total = 0;
    for (const auto &b : r.branches) {
        EXPECT_EQ(b.measurements.size(), 1u);
        EXPECT_EQ(b.messages.size(), 1u);
        EXPECT_GE(b.fidelity, 1 - 1e-9);
        total += b.probability;
    }
    EXPECT_NEAR(total, 1, 1e-10);
    for (size_t i = 1; i < run.final_states.size(); ++i) {
        EXPECT_GE(fidelity(extract_data_state(run.final_states[0]), extract_data_state(run.final_states[i])), 1 - 1e-9);
    }
}

TEST(script, every_sample_passes) {
    for (const char *name : kSampleNames) {
        auto s = parse_script_file(kSamples + "/" + name);
        EXPECT_TRUE(execute(s, {MeasureMode::Kind::Branch, 0}).report.pass) << name;
        EXPECT_TRUE(execute(s, {MeasureMode::Kind::Sample, 3}).report.pass) << name;
    }
}

TEST(script, report_json_schema_and_determinism) {
    auto s = parse_script_file(kSamples + "/remote_cnot_measure.qw");
    ExecuteOptions o{MeasureMode::Kind::Sample, 42};
    auto a = report_json(execute(s, o).report, *s.graph, o);
    auto b = report_json(execute(s, o).report, *s.graph, o);
    EXPECT_EQ(a, b);
    auto j = nlohmann::json::parse(a);
    EXPECT_EQ(j["schema"], 1);
    for (const char *key : {"steps", "final_norm", "fidelity_vs_oracle", "walker_purity", "measurements",
                            "classical_messages", "supports", "pass"}) {
        EXPECT_TRUE(j.contains(key)) << key;
    }
    EXPECT_EQ(j["mode"], "sample");
    EXPECT_EQ(j["seed"], 42);
}

TEST(script, lowlevel_wrong_oracle_fails_verification) {
    std::ifstream in(kSamples + "/lowlevel.qw");
    std::stringstream text;
    text << in.rdbuf();
    std::string src = text.str();
    auto pos = src.find("targets=B.b gate=X\n", src.find("oracle"));
    ASSERT_NE(pos, std::string::npos);
    src.replace(pos, std::string("targets=B.b gate=X").size(), "targets=B.b gate=Z");
    auto s = parse(src);
    EXPECT_FALSE(execute(s, {MeasureMode::Kind::Branch, 0}).report.pass);
}

TEST(script, trace_lists_supports) {
    auto s = parse_script_file(kSamples + "/remote_cnot.qw");
    auto r = execute(s, {}).report;
    auto text = format_trace(r, *s.graph);
    EXPECT_NE(text.find("n5"), std::string::npos) << text;
}
