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

#ifndef QWCP_EXECUTE_H
#define QWCP_EXECUTE_H

#include <cstdint>
#include <string>
#include <vector>

#include "qwcp/script.h"

namespace qwcp {

struct ExecuteOptions {
    MeasureMode::Kind mode = MeasureMode::Kind::Sample;
    uint64_t seed = 0;
};

struct StageReport {
    std::string name;
    int walkers = 0;
    int total_bits = 0;
    int steps = 0;
    int propagation_steps = 0;
    std::vector<GateEvent> gate_events;
    RunTrace trace;  // from the first incoming branch
};

struct StagedMeasurement {
    int stage = 0;
    MeasurementRecord record;
};

struct StagedMessage {
    int stage = 0;
    ClassicalMessage message;
};

struct BranchReport {
    double probability = 1;
    double fidelity = 1;       // worst stage
    double walker_purity = 1;  // worst stage
    double final_norm = 1;
    bool pass = true;
    std::vector<StagedMeasurement> measurements;
    std::vector<StagedMessage> messages;
};

struct Report {
    int steps = 0;
    double final_norm = 1;
    double fidelity_vs_oracle = 1;
    double walker_purity = 1;
    bool locality_ok = true;
    bool pass = true;
    std::vector<StageReport> stages;
    std::vector<BranchReport> branches;
};

struct Execution {
    Report report;
    std::vector<StateVector> final_states;  // one per branch, last stage
};

/// Runs every stage of the script. High-level commands are one stage each;
/// consecutive place/step/oracle lines form one low-level stage. The data
/// state passes from stage to stage.
Execution execute(const Script &script, const ExecuteOptions &options = {});

/// Report JSON with "schema": 1.
std::string report_json(const Report &report, const NetworkGraph &graph, const ExecuteOptions &options);

/// Human-readable per-step walker supports.
std::string format_trace(const Report &report, const NetworkGraph &graph);

}  // namespace qwcp

#endif
