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

#ifndef QWCP_NETGRAPH_H
#define QWCP_NETGRAPH_H

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qwcp {

/// Index of a node in the sorted label list.
using VertexId = int;
/// Port (coin value) at a vertex. Port 0 is the self-loop.
using Coin = int;

/// Symmetric directed network graph with implicit self-loops.
///
/// Vertex ids are positions in the lexicographically sorted label list.
/// Every vertex v has ports 0..d(v): port 0 is the self-loop (v, v), ports
/// 1..d(v) are the proper neighbors in ascending label order. Immutable once
/// built.
class NetworkGraph {
   public:
    /// Builds a graph from node labels, a directed edge list (both
    /// directions must be present) and per-node data qubit names.
    static NetworkGraph build(
        std::vector<std::string> nodes,
        const std::vector<std::pair<std::string, std::string>> &edges,
        const std::map<std::string, std::vector<std::string>> &data_qubits = {});

    size_t num_vertices() const {
        return labels_.size();
    }
    const std::vector<std::string> &labels() const {
        return labels_;
    }
    const std::string &label(VertexId v) const;
    VertexId id(std::string_view label) const;
    std::optional<VertexId> find(std::string_view label) const;

    /// Number of proper neighbors d(v).
    int degree(VertexId v) const;
    /// Number of valid ports at v, d(v) + 1.
    int coin_count(VertexId v) const {
        return degree(v) + 1;
    }
    int max_coin_count() const;
    bool valid_coin(VertexId v, Coin c) const {
        return c >= 0 && c < coin_count(v);
    }

    /// Proper neighbors of v in port order (ascending label).
    const std::vector<VertexId> &neighbors(VertexId v) const;
    bool adjacent(VertexId u, VertexId v) const;
    /// Vertex reached through port c at v; c = 0 gives v itself.
    VertexId neighbor_of_port(VertexId v, Coin c) const;
    /// Port at v assigned to edge (v, u); u == v gives 0.
    std::optional<Coin> port_of(VertexId v, VertexId u) const;
    /// As port_of, throwing PreconditionError when (v, u) is not an edge.
    Coin port(VertexId v, VertexId u) const;

    /// Number of directed proper edges (twice the number of links).
    size_t num_directed_edges() const;

    const std::vector<std::string> &data_qubits(VertexId v) const;
    size_t num_data_qubits() const;

    friend bool operator==(const NetworkGraph &, const NetworkGraph &) = default;

   private:
    std::vector<std::string> labels_;
    std::vector<std::vector<VertexId>> adjacency_;
    std::vector<std::vector<std::string>> data_qubits_;

    void check_vertex(VertexId v) const;
};

/// Parses the JSON network file format:
/// {"nodes": [...], "edges": [[u, v], ...], "data_qubits": {node: [name, ...]}}
NetworkGraph load_network(std::string_view text);
NetworkGraph load_network_file(const std::string &path);

/// Ordered node sequence [A, ..., B]; consecutive nodes adjacent, no repeats.
struct PathSpec {
    std::vector<VertexId> nodes;

    size_t hops() const {
        return nodes.empty() ? 0 : nodes.size() - 1;
    }
    VertexId front() const {
        return nodes.front();
    }
    VertexId back() const {
        return nodes.back();
    }
    friend bool operator==(const PathSpec &, const PathSpec &) = default;
};

/// Throws PreconditionError naming the offending hop if the path is not
/// valid in g.
void validate_path(const NetworkGraph &g, const PathSpec &path);

/// Directed rooted tree embedded in the graph.
struct TreeSpec {
    VertexId root = 0;
    std::vector<std::pair<VertexId, VertexId>> edges;  // (parent, child)
    friend bool operator==(const TreeSpec &, const TreeSpec &) = default;
};

/// Derived structure of a validated tree. Children keep the order in which
/// their edges were listed.
struct TreeInfo {
    VertexId root = 0;
    std::map<VertexId, VertexId> parent;
    std::map<VertexId, std::vector<VertexId>> children;
    std::map<VertexId, int> depth;

    std::vector<VertexId> nodes() const;
    const std::vector<VertexId> &successors(VertexId v) const;
};

TreeInfo validate_tree(const NetworkGraph &g, const TreeSpec &tree);

/// BFS hop distance; empty when v is unreachable from u.
std::optional<int> hop_distance(const NetworkGraph &g, VertexId u, VertexId v);

/// A minimum-hop path from u to v, breaking ties toward lower vertex ids.
std::optional<PathSpec> shortest_path(const NetworkGraph &g, VertexId u, VertexId v);

/// Vertex and coin register widths for the walker encoding.
struct RegisterWidths {
    int vertex_bits = 1;
    int coin_bits = 1;
};
RegisterWidths register_widths(const NetworkGraph &g);

/// Control plane qubit count k * (vertex_bits + coin_bits).
int control_plane_budget(const NetworkGraph &g, int walkers);

}  // namespace qwcp

#endif
