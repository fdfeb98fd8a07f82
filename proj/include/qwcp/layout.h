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

#ifndef QWCP_LAYOUT_H
#define QWCP_LAYOUT_H

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "qwcp/netgraph.h"

namespace qwcp {

struct DataQubit {
    VertexId node = 0;
    std::string name;
    friend bool operator==(const DataQubit &, const DataQubit &) = default;
};

/// Bit layout of k walker registers followed by the data plane.
///
/// Qubits are numbered most-significant first: walker 0 vertex bits,
/// walker 0 coin bits, walker 1 vertex bits, ..., then the data qubits in
/// data_order. Qubit q occupies amplitude-index bit (total_bits - 1 - q).
class RegisterLayout {
   public:
    /// Layout for `walkers` walkers on g; data order is node id, then the
    /// order the network file lists the node's qubits.
    RegisterLayout(std::shared_ptr<const NetworkGraph> graph, int walkers);

    /// Layout holding only data qubits (no walkers, no graph).
    static RegisterLayout data_only(std::vector<DataQubit> data_order);

    const NetworkGraph &graph() const;
    const std::shared_ptr<const NetworkGraph> &graph_ptr() const {
        return graph_;
    }
    bool has_graph() const {
        return graph_ != nullptr;
    }

    int vertex_bits() const {
        return vertex_bits_;
    }
    int coin_bits() const {
        return coin_bits_;
    }
    int walkers() const {
        return walkers_;
    }
    int walker_width() const {
        return vertex_bits_ + coin_bits_;
    }
    const std::vector<DataQubit> &data_order() const {
        return data_order_;
    }
    int num_data() const {
        return static_cast<int>(data_order_.size());
    }
    int total_bits() const {
        return walkers_ * walker_width() + num_data();
    }
    uint64_t dimension() const {
        return uint64_t{1} << total_bits();
    }

    /// Qubit number of bit `bit` (0 = most significant) of walker j's vertex register.
    int vertex_qubit(int walker, int bit) const;
    int coin_qubit(int walker, int bit) const;
    int data_qubit(int data_index) const;
    /// All qubit numbers of walker j (vertex then coin).
    std::vector<int> walker_qubits(int walker) const;
    std::vector<int> all_walker_qubits() const;
    std::vector<int> data_qubits() const;

    uint64_t qubit_mask(int qubit) const;

    int vertex_shift(int walker) const;
    int coin_shift(int walker) const;
    uint64_t vertex_mask(int walker) const;
    uint64_t coin_mask(int walker) const;
    uint64_t walker_mask(int walker) const {
        return vertex_mask(walker) | coin_mask(walker);
    }
    uint64_t data_mask(int data_index) const {
        return qubit_mask(data_qubit(data_index));
    }

    /// Index bits encoding walker j at (v, c).
    uint64_t walker_bits(int walker, VertexId v, Coin c) const;
    VertexId walker_vertex(int walker, uint64_t index) const;
    Coin walker_coin(int walker, uint64_t index) const;

    /// Position of (node, name) in data_order.
    int data_index(VertexId node, std::string_view name) const;
    int find_data_index(VertexId node, std::string_view name) const;  // -1 if absent

    void check_walker(int walker) const;
    void check_data_index(int data_index) const;

    friend bool operator==(const RegisterLayout &a, const RegisterLayout &b);

   private:
    RegisterLayout() = default;

    std::shared_ptr<const NetworkGraph> graph_;
    int vertex_bits_ = 0;
    int coin_bits_ = 0;
    int walkers_ = 0;
    std::vector<DataQubit> data_order_;
};

}  // namespace qwcp

#endif
