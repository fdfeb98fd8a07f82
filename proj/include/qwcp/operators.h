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

#ifndef QWCP_OPERATORS_H
#define QWCP_OPERATORS_H

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qwcp/gates.h"
#include "qwcp/netgraph.h"

namespace qwcp {

/// Swap of two coin values c1 <-> c2 at a vertex.
struct CoinSwap {
    Coin c1 = 0;
    Coin c2 = 0;
    friend bool operator==(const CoinSwap &, const CoinSwap &) = default;
};

/// Unitary on the span of the listed coin values (row/column r <-> coins[r]).
struct CoinUnitary {
    std::vector<Coin> coins;
    Matrix unitary;
    friend bool operator==(const CoinUnitary &a, const CoinUnitary &b) {
        return a.coins == b.coins && same_matrix(a.unitary, b.unitary);
    }
};

using CoinAction = std::variant<CoinSwap, CoinUnitary>;

enum class ShiftKind { FlipFlop, Identity };

/// Shift on the listed walkers; unlisted walkers are left in place.
struct ShiftOp {
    ShiftKind kind = ShiftKind::Identity;
    std::vector<int> walkers;
    friend bool operator==(const ShiftOp &, const ShiftOp &) = default;
};

/// C_v^{c1 c2} for one walker: swaps c1 and c2 at vertex v only.
struct CoinPermOp {
    int walker = 0;
    VertexId vertex = 0;
    Coin c1 = 0;
    Coin c2 = 0;
    friend bool operator==(const CoinPermOp &, const CoinPermOp &) = default;
};

struct CoinBlockEntry {
    VertexId vertex = 0;
    CoinUnitary block;
    friend bool operator==(const CoinBlockEntry &, const CoinBlockEntry &) = default;
};

/// Block-diagonal coin sum_v |v><v| (x) C_v; unlisted vertices get identity.
struct CoinBlockOp {
    int walker = 0;
    std::vector<CoinBlockEntry> blocks;
    friend bool operator==(const CoinBlockOp &, const CoinBlockOp &) = default;
};

/// Coin action at v applied iff the control data qubits read `pattern`.
struct DataControlledCoinOp {
    int walker = 0;
    VertexId vertex = 0;
    std::vector<int> controls;  // data indices
    std::vector<bool> pattern;
    CoinAction action;
    friend bool operator==(const DataControlledCoinOp &, const DataControlledCoinOp &) = default;
};

/// Unitary K on data qubits of v applied on components where the walker is
/// at v (and, if coin_condition is non-empty, its coin is one of those
/// values). An optional coin action at v follows K.
struct CoinControlledDataOp {
    int walker = 0;
    VertexId vertex = 0;
    std::vector<Coin> coin_condition;
    std::vector<int> targets;  // data indices; targets[0] is the most significant
    Matrix unitary;
    std::optional<CoinAction> coin_action;
    friend bool operator==(const CoinControlledDataOp &a, const CoinControlledDataOp &b) {
        return a.walker == b.walker && a.vertex == b.vertex && a.coin_condition == b.coin_condition &&
               a.targets == b.targets && same_matrix(a.unitary, b.unitary) && a.coin_action == b.coin_action;
    }
};

/// Two-walk interaction: acts on the target walker's coin iff the control
/// walker is at (vertex, control_coin) and the target walker is at vertex.
struct WalkInteractionOp {
    VertexId vertex = 0;
    Coin control_coin = 0;
    int control_walker = 0;
    int target_walker = 1;
    CoinAction action;
    friend bool operator==(const WalkInteractionOp &, const WalkInteractionOp &) = default;
};

/// 1-to-k control fan-out at a vertex. walkers[0] carries the incoming
/// control on coin `incoming`; walkers[1..] are helpers resting at (v, 0).
/// Afterwards walker j points along the edge to successors[j].
struct FanoutOp {
    VertexId vertex = 0;
    Coin incoming = 0;
    std::vector<VertexId> successors;
    std::vector<Coin> ports;  // port of (vertex, successors[j])
    std::vector<int> walkers;
    bool inverse = false;
    friend bool operator==(const FanoutOp &, const FanoutOp &) = default;
};

/// Measurement separation of one walker whose support is {a, b}, both at
/// coin 0. Odd parity of the X-basis outcomes triggers Z on the correction
/// qubit; the outcomes are reported to `notify`.
struct WalkerSeparation {
    int walker = 0;
    VertexId a = 0;
    VertexId b = 0;
    int correction_qubit = 0;  // data index
    VertexId notify = 0;
    friend bool operator==(const WalkerSeparation &, const WalkerSeparation &) = default;
};

struct MeasureAndCorrectOp {
    std::vector<WalkerSeparation> entries;
    friend bool operator==(const MeasureAndCorrectOp &, const MeasureAndCorrectOp &) = default;
};

using OperatorSpec = std::variant<
    ShiftOp,
    CoinPermOp,
    CoinBlockOp,
    DataControlledCoinOp,
    CoinControlledDataOp,
    WalkInteractionOp,
    FanoutOp,
    MeasureAndCorrectOp>;

/// Name of the operator kind ("Shift", "CoinPerm", ...).
std::string kind_name(const OperatorSpec &op);

/// True for kinds that only relocate amplitudes.
bool is_permutation(const OperatorSpec &op);

}  // namespace qwcp

#endif
