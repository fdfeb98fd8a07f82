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

#ifndef QWCP_SCHEDULE_H
#define QWCP_SCHEDULE_H

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qwcp/layout.h"
#include "qwcp/operators.h"

namespace qwcp {

/// Operators applied in listed order, followed by exactly one shift.
struct Timestep {
    std::vector<OperatorSpec> ops;
    ShiftOp shift;
    friend bool operator==(const Timestep &, const Timestep &) = default;
};

/// Time-ordered timesteps with an optional terminal measurement.
struct Schedule {
    std::vector<Timestep> timesteps;
    std::optional<MeasureAndCorrectOp> measurement;

    size_t size() const {
        return timesteps.size();
    }
    bool empty() const {
        return timesteps.empty() && !measurement;
    }
    /// All operators in application order (shifts included, identity
    /// shifts with no walkers omitted; the measurement comes last).
    std::vector<OperatorSpec> flatten() const;
    /// Concatenates `tail` after this schedule. Throws if this schedule
    /// already ends in a measurement.
    void append(const Schedule &tail);

    friend bool operator==(const Schedule &, const Schedule &) = default;
};

/// Validates every operator against the layout and the structural rules:
/// timestep ops hold no shifts or measurements, and only the terminal slot
/// holds a measurement.
void validate_schedule(const RegisterLayout &layout, const Schedule &schedule);

/// JSON form; nodes and data qubits by label so files stay readable.
std::string serialize_schedule(const Schedule &schedule, const RegisterLayout &layout);
Schedule parse_schedule(std::string_view text, const RegisterLayout &layout);

}  // namespace qwcp

#endif
