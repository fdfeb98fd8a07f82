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

#include "qwcp/netgraph.h"

#include <algorithm>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "qwcp/errors.h"

namespace qwcp {

namespace {

int bits_for(size_t count) {
    int bits = 1;
    while ((size_t{1} << bits) < count) {
        ++bits;
    }
    return bits;
}

}  // namespace

NetworkGraph NetworkGraph::build(
    std::vector<std::string> nodes,
    const std::vector<std::pair<std::string, std::string>> &edges,
    const std::map<std::string, std::vector<std::string>> &data_qubits) {
    if (nodes.empty()) {
        throw PreconditionError("network has no nodes");
    }
    for (const auto &n : nodes) {
        if (n.empty()) {
            throw PreconditionError("empty node label");
        }
    }
    std::sort(nodes.begin(), nodes.end());
    if (auto dup = std::adjacent_find(nodes.begin(), nodes.end()); dup != nodes.end()) {
        throw PreconditionError("duplicate node label '" + *dup + "'");
    }

    NetworkGraph g;
    g.labels_ = std::move(nodes);
    g.adjacency_.resize(g.labels_.size());
    g.data_qubits_.resize(g.labels_.size());

    std::set<std::pair<VertexId, VertexId>> directed;
    for (const auto &[a, b] : edges) {
        auto u = g.find(a);
        auto v = g.find(b);
        if (!u || !v) {
            throw PreconditionError("edge [" + a + ", " + b + "] references an unknown node");
        }
        if (*u == *v) {
            throw PreconditionError("self-loop on '" + a + "' must not be listed; self-loops are implicit");
        }
        if (!directed.insert({*u, *v}).second) {
            throw PreconditionError("duplicate edge [" + a + ", " + b + "]");
        }
    }
    for (const auto &[u, v] : directed) {
        if (!directed.count({v, u})) {
            throw PreconditionError(
                "asymmetric edge list: [" + g.labels_[u] + ", " + g.labels_[v] + "] present without [" +
                g.labels_[v] + ", " + g.labels_[u] + "]");
        }
        g.adjacency_[u].push_back(v);
    }
    // std::set iteration already yields neighbors in ascending id order.

    for (const auto &[node, names] : data_qubits) {
        auto v = g.find(node);
        if (!v) {
            throw PreconditionError("data qubits declared at unknown node '" + node + "'");
        }
        std::set<std::string> seen;
        for (const auto &name : names) {
            if (name.empty()) {
                throw PreconditionError("empty data qubit name at node '" + node + "'");
            }
            if (!seen.insert(name).second) {
                throw PreconditionError("duplicate data qubit '" + name + "' at node '" + node + "'");
            }
        }
        g.data_qubits_[*v] = names;
    }
    return g;
}

void NetworkGraph::check_vertex(VertexId v) const {
    if (v < 0 || static_cast<size_t>(v) >= labels_.size()) {
        throw PreconditionError("vertex id " + std::to_string(v) + " out of range");
    }
}

const std::string &NetworkGraph::label(VertexId v) const {
    check_vertex(v);
    return labels_[v];
}

std::optional<VertexId> NetworkGraph::find(std::string_view label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) {
        return std::nullopt;
    }
    return static_cast<VertexId>(it - labels_.begin());
}

VertexId NetworkGraph::id(std::string_view label) const {
    auto v = find(label);
    if (!v) {
        throw PreconditionError("unknown node '" + std::string(label) + "'");
    }
    return *v;
}

int NetworkGraph::degree(VertexId v) const {
    check_vertex(v);
    return static_cast<int>(adjacency_[v].size());
}

int NetworkGraph::max_coin_count() const {
    int best = 1;
    for (const auto &adj : adjacency_) {
        best = std::max(best, static_cast<int>(adj.size()) + 1);
    }
    return best;
}

const std::vector<VertexId> &NetworkGraph::neighbors(VertexId v) const {
    check_vertex(v);
    return adjacency_[v];
}

bool NetworkGraph::adjacent(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
}

VertexId NetworkGraph::neighbor_of_port(VertexId v, Coin c) const {
    check_vertex(v);
    if (!valid_coin(v, c)) {
        throw PreconditionError("coin " + std::to_string(c) + " is not a valid port at '" + labels_[v] + "'");
    }
    return c == 0 ? v : adjacency_[v][c - 1];
}

std::optional<Coin> NetworkGraph::port_of(VertexId v, VertexId u) const {
    check_vertex(v);
    check_vertex(u);
    if (u == v) {
        return 0;
    }
    const auto &adj = adjacency_[v];
    auto it = std::lower_bound(adj.begin(), adj.end(), u);
    if (it == adj.end() || *it != u) {
        return std::nullopt;
    }
    return static_cast<Coin>(it - adj.begin()) + 1;
}

Coin NetworkGraph::port(VertexId v, VertexId u) const {
    auto c = port_of(v, u);
    if (!c) {
        throw PreconditionError("'" + labels_[v] + "' and '" + labels_[u] + "' are not adjacent");
    }
    return *c;
}

size_t NetworkGraph::num_directed_edges() const {
    size_t n = 0;
    for (const auto &adj : adjacency_) {
        n += adj.size();
    }
    return n;
}

const std::vector<std::string> &NetworkGraph::data_qubits(VertexId v) const {
    check_vertex(v);
    return data_qubits_[v];
}

size_t NetworkGraph::num_data_qubits() const {
    size_t n = 0;
    for (const auto &q : data_qubits_) {
        n += q.size();
    }
    return n;
}

NetworkGraph load_network(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError(std::string("network file: ") + e.what());
    }
    std::vector<std::string> nodes;
    std::vector<std::pair<std::string, std::string>> edges;
    std::map<std::string, std::vector<std::string>> data;
    try {
        if (!doc.is_object() || !doc.contains("nodes")) {
            throw ParseError("network file: expected an object with a \"nodes\" array");
        }
        nodes = doc.at("nodes").get<std::vector<std::string>>();
        if (doc.contains("edges")) {
            for (const auto &e : doc.at("edges")) {
                if (!e.is_array() || e.size() != 2) {
                    throw ParseError("network file: each edge must be a [from, to] pair");
                }
                edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
            }
        }
        if (doc.contains("data_qubits")) {
            data = doc.at("data_qubits").get<std::map<std::string, std::vector<std::string>>>();
        }
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("network file: ") + e.what());
    }
    return NetworkGraph::build(std::move(nodes), edges, data);
}

NetworkGraph load_network_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw PreconditionError("cannot open network file '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return load_network(buffer.str());
}

void validate_path(const NetworkGraph &g, const PathSpec &path) {
    if (path.nodes.empty()) {
        throw PreconditionError("empty path");
    }
    std::set<VertexId> seen;
    for (size_t i = 0; i < path.nodes.size(); ++i) {
        VertexId v = path.nodes[i];
        if (v < 0 || static_cast<size_t>(v) >= g.num_vertices()) {
            throw PreconditionError("path references vertex id " + std::to_string(v) + " outside the graph");
        }
        if (!seen.insert(v).second) {
            throw PreconditionError("path visits '" + g.label(v) + "' twice");
        }
        if (i > 0 && !g.adjacent(path.nodes[i - 1], v)) {
            throw PreconditionError(
                "path hop " + g.label(path.nodes[i - 1]) + "->" + g.label(v) + " is not an edge of the network");
        }
    }
}

std::vector<VertexId> TreeInfo::nodes() const {
    std::vector<VertexId> out;
    for (const auto &[v, d] : depth) {
        out.push_back(v);
    }
    return out;
}

const std::vector<VertexId> &TreeInfo::successors(VertexId v) const {
    static const std::vector<VertexId> none;
    auto it = children.find(v);
    return it == children.end() ? none : it->second;
}

TreeInfo validate_tree(const NetworkGraph &g, const TreeSpec &tree) {
    TreeInfo info;
    info.root = tree.root;
    g.label(tree.root);
    for (const auto &[p, c] : tree.edges) {
        if (!g.adjacent(p, c)) {
            throw PreconditionError("tree edge " + g.label(p) + ">" + g.label(c) + " is not an edge of the network");
        }
        if (c == tree.root) {
            throw PreconditionError("tree edge " + g.label(p) + ">" + g.label(c) + " points into the root");
        }
        if (!info.parent.emplace(c, p).second) {
            throw PreconditionError("tree node '" + g.label(c) + "' has more than one predecessor");
        }
        info.children[p].push_back(c);
    }
    std::deque<VertexId> queue{tree.root};
    info.depth[tree.root] = 0;
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        for (VertexId c : info.successors(v)) {
            info.depth[c] = info.depth[v] + 1;
            queue.push_back(c);
        }
    }
    if (info.depth.size() != info.parent.size() + 1) {
        throw PreconditionError("tree edges do not form a single tree rooted at '" + g.label(tree.root) + "'");
    }
    return info;
}

namespace {

std::vector<int> bfs_from(const NetworkGraph &g, VertexId u, std::vector<VertexId> *parent) {
    std::vector<int> dist(g.num_vertices(), -1);
    if (parent) {
        parent->assign(g.num_vertices(), -1);
    }
    std::deque<VertexId> queue{u};
    dist[u] = 0;
    while (!queue.empty()) {
        VertexId x = queue.front();
        queue.pop_front();
        for (VertexId y : g.neighbors(x)) {
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                if (parent) {
                    (*parent)[y] = x;
                }
                queue.push_back(y);
            }
        }
    }
    return dist;
}

}  // namespace

std::optional<int> hop_distance(const NetworkGraph &g, VertexId u, VertexId v) {
    g.label(u);
    g.label(v);
    int d = bfs_from(g, u, nullptr)[v];
    if (d < 0) {
        return std::nullopt;
    }
    return d;
}

std::optional<PathSpec> shortest_path(const NetworkGraph &g, VertexId u, VertexId v) {
    g.label(u);
    g.label(v);
    std::vector<VertexId> parent;
    auto dist = bfs_from(g, u, &parent);
    if (dist[v] < 0) {
        return std::nullopt;
    }
    PathSpec path;
    for (VertexId x = v; x != -1; x = parent[x]) {
        path.nodes.push_back(x);
        if (x == u) {
            break;
        }
    }
    std::reverse(path.nodes.begin(), path.nodes.end());
    return path;
}

RegisterWidths register_widths(const NetworkGraph &g) {
    return {bits_for(g.num_vertices()), bits_for(static_cast<size_t>(g.max_coin_count()))};
}

int control_plane_budget(const NetworkGraph &g, int walkers) {
    if (walkers < 1) {
        throw PreconditionError("walker count must be at least 1");
    }
    auto w = register_widths(g);
    return walkers * (w.vertex_bits + w.coin_bits);
}

}  // namespace qwcp
