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

#ifndef QWCP_SCRIPT_H
#define QWCP_SCRIPT_H

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qwcp/oracle.h"
#include "qwcp/protocols.h"

namespace qwcp {

struct RemoteCuCommand {
    GateRequest request;
    PathSpec path;
    Separation separation = Separation::Reverse;
    std::vector<NodeGate> hops;
    friend bool operator==(const RemoteCuCommand &, const RemoteCuCommand &) = default;
};

struct RemoteMcuCommand {
    GateRequest request;
    PathSpec path;
    friend bool operator==(const RemoteMcuCommand &, const RemoteMcuCommand &) = default;
};

struct MultipathCommand {
    std::vector<ControlQubit> controls;
    std::vector<PathSpec> paths;
    std::vector<NodeGate> gates;
    friend bool operator==(const MultipathCommand &, const MultipathCommand &) = default;
};

struct TreeCommand {
    std::vector<ControlQubit> controls;
    TreeSpec tree;
    std::vector<NodeGate> gates;
    friend bool operator==(const TreeCommand &, const TreeCommand &) = default;
};

struct GhzCommand {
    std::vector<GhzBranch> branches;
    friend bool operator==(const GhzCommand &, const GhzCommand &) = default;
};

struct LinkCommand {
    std::vector<std::pair<int, int>> pairs;
    friend bool operator==(const LinkCommand &, const LinkCommand &) = default;
};

struct PlaceCommand {
    int walker = 0;
    WalkerPlacement at;
    friend bool operator==(const PlaceCommand &, const PlaceCommand &) = default;
};

/// Low-level operator; a ShiftOp closes the current timestep and a
/// MeasureAndCorrectOp (one entry per line) ends the stage.
struct StepCommand {
    OperatorSpec op;
    friend bool operator==(const StepCommand &, const StepCommand &) = default;
};

struct OracleCommand {
    OracleGate gate;
    friend bool operator==(const OracleCommand &, const OracleCommand &) = default;
};

using Command = std::variant<
    RemoteCuCommand,
    RemoteMcuCommand,
    MultipathCommand,
    TreeCommand,
    GhzCommand,
    LinkCommand,
    PlaceCommand,
    StepCommand,
    OracleCommand>;

struct ScriptCommand {
    int line = 0;
    Command command;
    // Equality ignores the line number.
    friend bool operator==(const ScriptCommand &a, const ScriptCommand &b) {
        return a.command == b.command;
    }
};

struct Script {
    std::string network_path;  // as written in the script
    std::shared_ptr<const NetworkGraph> graph;
    std::optional<int> walkers;
    std::map<int, QubitState> inits;  // data index -> single-qubit state
    std::vector<ScriptCommand> commands;

    friend bool operator==(const Script &a, const Script &b);
};

struct ParseOptions {
    /// Directory that a relative `network` path is resolved against.
    std::string base_dir = ".";
    /// Overrides the script's network file when non-empty.
    std::string network_override;
};

/// Parses and resolves a script. Syntax errors, unknown nodes or qubits,
/// paths that leave the graph and exceeded walker budgets raise ParseError
/// with the line and column.
Script parse_script(std::string_view text, const ParseOptions &options = {});
Script parse_script_file(const std::string &path, const ParseOptions &options = {});

/// Canonical text form; parse_script(serialize_script(s)) == s.
std::string serialize_script(const Script &script);

/// Gate text: a library name or U[...] with columns separated by ';' and
/// each column listed as re,im pairs.
Matrix parse_gate(std::string_view text);
std::string format_gate(const Matrix &m);

/// Walkers a high-level command needs.
int walkers_needed(const NetworkGraph &g, const Command &command);

}  // namespace qwcp

#endif
