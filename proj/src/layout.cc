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

#include "qwcp/layout.h"

#include "qwcp/errors.h"

namespace qwcp {

RegisterLayout::RegisterLayout(std::shared_ptr<const NetworkGraph> graph, int walkers)
    : graph_(std::move(graph)), walkers_(walkers) {
    if (!graph_) {
        throw PreconditionError("layout requires a network graph");
    }
    if (walkers < 0) {
        throw PreconditionError("walker count must be non-negative");
    }
    auto widths = register_widths(*graph_);
    vertex_bits_ = widths.vertex_bits;
    coin_bits_ = widths.coin_bits;
    for (VertexId v = 0; v < static_cast<VertexId>(graph_->num_vertices()); ++v) {
        for (const auto &name : graph_->data_qubits(v)) {
            data_order_.push_back({v, name});
        }
    }
}

RegisterLayout RegisterLayout::data_only(std::vector<DataQubit> data_order) {
    RegisterLayout layout;
    layout.data_order_ = std::move(data_order);
    return layout;
}

const NetworkGraph &RegisterLayout::graph() const {
    if (!graph_) {
        throw PreconditionError("layout has no network graph");
    }
    return *graph_;
}

void RegisterLayout::check_walker(int walker) const {
    if (walker < 0 || walker >= walkers_) {
        throw PreconditionError(
            "walker " + std::to_string(walker) + " outside layout with " + std::to_string(walkers_) + " walkers");
    }
}

void RegisterLayout::check_data_index(int data_index) const {
    if (data_index < 0 || data_index >= num_data()) {
        throw PreconditionError("data qubit index " + std::to_string(data_index) + " outside layout");
    }
}

int RegisterLayout::vertex_qubit(int walker, int bit) const {
    check_walker(walker);
    return walker * walker_width() + bit;
}

int RegisterLayout::coin_qubit(int walker, int bit) const {
    check_walker(walker);
    return walker * walker_width() + vertex_bits_ + bit;
}

int RegisterLayout::data_qubit(int data_index) const {
    check_data_index(data_index);
    return walkers_ * walker_width() + data_index;
}

std::vector<int> RegisterLayout::walker_qubits(int walker) const {
    check_walker(walker);
    std::vector<int> out;
    for (int q = 0; q < walker_width(); ++q) {
        out.push_back(walker * walker_width() + q);
    }
    return out;
}

std::vector<int> RegisterLayout::all_walker_qubits() const {
    std::vector<int> out;
    for (int q = 0; q < walkers_ * walker_width(); ++q) {
        out.push_back(q);
    }
    return out;
}

std::vector<int> RegisterLayout::data_qubits() const {
    std::vector<int> out;
    for (int i = 0; i < num_data(); ++i) {
        out.push_back(walkers_ * walker_width() + i);
    }
    return out;
}

uint64_t RegisterLayout::qubit_mask(int qubit) const {
    if (qubit < 0 || qubit >= total_bits()) {
        throw PreconditionError("qubit " + std::to_string(qubit) + " outside layout");
    }
    return uint64_t{1} << (total_bits() - 1 - qubit);
}

int RegisterLayout::coin_shift(int walker) const {
    check_walker(walker);
    return total_bits() - (walker + 1) * walker_width();
}

int RegisterLayout::vertex_shift(int walker) const {
    return coin_shift(walker) + coin_bits_;
}

uint64_t RegisterLayout::vertex_mask(int walker) const {
    return ((uint64_t{1} << vertex_bits_) - 1) << vertex_shift(walker);
}

uint64_t RegisterLayout::coin_mask(int walker) const {
    return ((uint64_t{1} << coin_bits_) - 1) << coin_shift(walker);
}

uint64_t RegisterLayout::walker_bits(int walker, VertexId v, Coin c) const {
    return ((static_cast<uint64_t>(v) << coin_bits_) | static_cast<uint64_t>(c)) << coin_shift(walker);
}

VertexId RegisterLayout::walker_vertex(int walker, uint64_t index) const {
    return static_cast<VertexId>((index & vertex_mask(walker)) >> vertex_shift(walker));
}

Coin RegisterLayout::walker_coin(int walker, uint64_t index) const {
    return static_cast<Coin>((index & coin_mask(walker)) >> coin_shift(walker));
}

int RegisterLayout::find_data_index(VertexId node, std::string_view name) const {
    for (size_t i = 0; i < data_order_.size(); ++i) {
        if (data_order_[i].node == node && data_order_[i].name == name) {
            return static_cast<int>(i);
        }
    }
    return -1;
}

int RegisterLayout::data_index(VertexId node, std::string_view name) const {
    int i = find_data_index(node, name);
    if (i < 0) {
        std::string where = graph_ ? graph_->label(node) : std::to_string(node);
        throw PreconditionError("no data qubit '" + std::string(name) + "' at node '" + where + "'");
    }
    return i;
}

bool operator==(const RegisterLayout &a, const RegisterLayout &b) {
    if (a.vertex_bits_ != b.vertex_bits_ || a.coin_bits_ != b.coin_bits_ || a.walkers_ != b.walkers_ ||
        a.data_order_ != b.data_order_) {
        return false;
    }
    if (a.graph_ == b.graph_) {
        return true;
    }
    return a.graph_ && b.graph_ && *a.graph_ == *b.graph_;
}

}  // namespace qwcp
