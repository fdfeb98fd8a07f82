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

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "qwcp/errors.h"
#include "qwcp/execute.h"

namespace {

enum Exit { kPass = 0, kOther = 1, kParse = 2, kPrecondition = 3, kVerification = 4 };

int run(const std::string &script_path, const std::string &network, uint64_t seed, const std::string &mode,
        const std::string &out_path, const std::string &dump_path, bool trace) {
    qwcp::ParseOptions parse;
    parse.network_override = network;
    qwcp::Script script = qwcp::parse_script_file(script_path, parse);

    qwcp::ExecuteOptions options;
    options.seed = seed;
    options.mode = mode == "branch" ? qwcp::MeasureMode::Kind::Branch : qwcp::MeasureMode::Kind::Sample;
    qwcp::Execution result = qwcp::execute(script, options);

    std::string json = qwcp::report_json(result.report, *script.graph, options);
    if (out_path.empty()) {
        std::cout << json;
    } else {
        std::ofstream(out_path) << json;
    }
    if (!dump_path.empty()) {
        std::ofstream dump(dump_path);
        for (size_t b = 0; b < result.final_states.size(); ++b) {
            if (result.final_states.size() > 1) {
                dump << "# branch " << b << "\n";
            }
            qwcp::dump_state(result.final_states[b], dump);
        }
    }
    if (trace) {
        std::cerr << qwcp::format_trace(result.report, *script.graph);
    }
    return result.report.pass ? kPass : kVerification;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Quantum walk control plane simulator"};
    app.require_subcommand(1);

    auto *cmd = app.add_subcommand("run", "Run a protocol script and verify it against the oracle");
    std::string script_path;
    std::string network;
    uint64_t seed = 0;
    std::string mode = "sample";
    std::string out_path;
    std::string dump_path;
    bool trace = false;
    cmd->add_option("script", script_path, "Protocol script")->required();
    cmd->add_option("--network", network, "Network file overriding the script's");
    cmd->add_option("--seed", seed, "Seed for sampled measurements");
    cmd->add_option("--mode", mode, "Measurement mode")->check(CLI::IsMember({"sample", "branch"}));
    cmd->add_option("--out", out_path, "Write the report JSON here instead of stdout");
    cmd->add_option("--dump-state", dump_path, "Write the final state amplitudes here");
    cmd->add_flag("--trace", trace, "Print per-step walker supports to stderr");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e) == 0 ? kPass : kParse;
    }
    try {
        return run(script_path, network, seed, mode, out_path, dump_path, trace);
    } catch (const qwcp::ParseError &e) {
        std::cerr << script_path << ": " << e.what() << "\n";
        return kParse;
    } catch (const qwcp::PreconditionError &e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return kPrecondition;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kOther;
    }
}
