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

#ifndef QWCP_WALKOPS_H
#define QWCP_WALKOPS_H

#include <optional>
#include <vector>

#include "qwcp/layout.h"
#include "qwcp/operators.h"
#include "qwcp/schedule.h"

namespace qwcp {

// Constructors validate against the layout and throw PreconditionError.

OperatorSpec make_flipflop_shift(const RegisterLayout &layout, std::vector<int> walkers);
OperatorSpec make_identity_shift();

OperatorSpec make_coin_perm(const RegisterLayout &layout, VertexId v, Coin c1, Coin c2, int walker);

/// Block-diagonal coin; vertices without an entry get the identity.
OperatorSpec make_coin_block(const RegisterLayout &layout, std::vector<CoinBlockEntry> blocks, int walker);

/// Coin action at v conditioned on the control data qubits (all at v)
/// reading `pattern`.
OperatorSpec make_data_controlled_coin(
    const RegisterLayout &layout, VertexId v, std::vector<int> controls, std::vector<bool> pattern,
    CoinAction action, int walker);

/// K on data qubits of v wherever walker sits at v (optionally only on the
/// listed coin values), followed by an optional coin action at v.
OperatorSpec make_coin_controlled_data(
    const RegisterLayout &layout, VertexId v, std::vector<Coin> coin_condition, std::vector<int> targets,
    Matrix unitary, int walker, std::optional<CoinAction> coin_action = std::nullopt);

OperatorSpec make_walk_interaction(
    const RegisterLayout &layout, VertexId v, Coin control_coin, CoinAction action, int control_walker,
    int target_walker);

/// Fan-out of the control carried by walkers[0] on coin `incoming` at v to
/// successors[j] carried by walkers[j]. Helpers must rest at (v, 0).
OperatorSpec make_fanout(
    const RegisterLayout &layout, VertexId v, Coin incoming, std::vector<VertexId> successors,
    std::vector<int> walkers);

/// Two-walk interactions followed by the carrier's coin swap; reversed when
/// op.inverse is set.
std::vector<OperatorSpec> expand_fanout(const FanoutOp &op);

/// Operators whose product (applied in order) is the inverse of op.
std::vector<OperatorSpec> inverse_ops(const OperatorSpec &op);

CoinAction inverse_action(const CoinAction &action);

/// Reversed schedule of inverted operators. Throws on a measurement.
Schedule invert_schedule(const Schedule &schedule);

}  // namespace qwcp

#endif
