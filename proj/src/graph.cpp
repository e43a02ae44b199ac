#include "edgeflow/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "edgeflow/errors.hpp"

namespace edgeflow {

namespace {

std::vector<Edge> validate_edges(int num_nodes, std::span<const std::pair<int, int>> pairs,
                                 bool canonicalize) {
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    std::set<std::pair<int, int>> seen;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto [a, b] = pairs[i];
        if (a < 0 || a >= num_nodes || b < 0 || b >= num_nodes)
            throw NodeIndexError("edge " + std::to_string(i) + " references node outside [0, " +
                                 std::to_string(num_nodes) + ")");
        if (a == b)
            throw SelfLoopError("edge " + std::to_string(i) + " is a self-loop at node " +
                                std::to_string(a));
        const auto key = std::minmax(a, b);
        if (!seen.insert(key).second)
            throw DuplicateEdgeError("edge " + std::to_string(i) + " duplicates pair (" +
                                     std::to_string(key.first) + ", " +
                                     std::to_string(key.second) + ")");
        if (canonicalize)
            edges.push_back({key.first, key.second});
        else
            edges.push_back({a, b});
    }
    return edges;
}

}  // namespace

Graph::Graph(int num_nodes, std::vector<Edge> edges)
    : num_nodes_(num_nodes), edges_(std::move(edges)) {}

Graph Graph::from_pairs(int num_nodes, std::span<const std::pair<int, int>> pairs) {
    if (num_nodes < 0) throw NodeIndexError("negative node count");
    return Graph(num_nodes, validate_edges(num_nodes, pairs, /*canonicalize=*/true));
}

Graph Graph::from_oriented(int num_nodes, std::span<const std::pair<int, int>> pairs) {
    if (num_nodes < 0) throw NodeIndexError("negative node count");
    return Graph(num_nodes, validate_edges(num_nodes, pairs, /*canonicalize=*/false));
}

const Edge& Graph::edge(int e) const {
    if (e < 0 || e >= num_edges())
        throw EdgeIndexError("edge index " + std::to_string(e) + " outside [0, " +
                             std::to_string(num_edges()) + ")");
    return edges_[e];
}

Graph Graph::with_flipped_edge(int e) const {
    const Edge& old = edge(e);
    Graph g = *this;
    g.edges_[e] = Edge{old.head, old.tail};
    return g;
}

void Graph::set_node_labels(std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != static_cast<std::size_t>(num_nodes_))
        throw DimensionError("node label count does not match node count");
    node_labels_ = std::move(labels);
}

SparseMatrix incidence_matrix(const Graph& g) {
    std::vector<IntTriplet> t;
    t.reserve(2 * static_cast<std::size_t>(g.num_edges()));
    for (int e = 0; e < g.num_edges(); ++e) {
        t.push_back({g.edge(e).tail, e, -1});
        t.push_back({g.edge(e).head, e, +1});
    }
    return SparseMatrix::from_int_triplets(g.num_nodes(), g.num_edges(), std::move(t));
}

SparseMatrix adjacency_matrix(const Graph& g) {
    std::vector<IntTriplet> t;
    t.reserve(2 * static_cast<std::size_t>(g.num_edges()));
    for (const Edge& e : g.edges()) {
        t.push_back({e.tail, e.head, 1});
        t.push_back({e.head, e.tail, 1});
    }
    return SparseMatrix::from_int_triplets(g.num_nodes(), g.num_nodes(), std::move(t));
}

SparseMatrix degree_matrix(const Graph& g) {
    std::vector<std::int64_t> deg(static_cast<std::size_t>(g.num_nodes()), 0);
    for (const Edge& e : g.edges()) {
        ++deg[e.tail];
        ++deg[e.head];
    }
    std::vector<IntTriplet> t;
    for (int i = 0; i < g.num_nodes(); ++i)
        if (deg[i] != 0) t.push_back({i, i, deg[i]});
    return SparseMatrix::from_int_triplets(g.num_nodes(), g.num_nodes(), std::move(t));
}

SparseMatrix graph_laplacian(const Graph& g) {
    std::vector<IntTriplet> t;
    t.reserve(4 * static_cast<std::size_t>(g.num_edges()));
    for (const Edge& e : g.edges()) {
        t.push_back({e.tail, e.tail, 1});
        t.push_back({e.head, e.head, 1});
        t.push_back({e.tail, e.head, -1});
        t.push_back({e.head, e.tail, -1});
    }
    return SparseMatrix::from_int_triplets(g.num_nodes(), g.num_nodes(), std::move(t));
}

namespace {

// Incidence sign of node v on edge e: -1 at the tail, +1 at the head.
inline std::int64_t incidence_sign(const Edge& e, int v) { return v == e.tail ? -1 : 1; }

std::vector<std::vector<int>> incident_edge_lists(const Graph& g) {
    std::vector<std::vector<int>> inc(static_cast<std::size_t>(g.num_nodes()));
    for (int e = 0; e < g.num_edges(); ++e) {
        inc[g.edge(e).tail].push_back(e);
        inc[g.edge(e).head].push_back(e);
    }
    return inc;
}

}  // namespace

SparseMatrix edge_laplacian(const Graph& g) {
    const int m = g.num_edges();
    std::vector<IntTriplet> t;
    for (int e = 0; e < m; ++e) t.push_back({e, e, 2});
    // Off-diagonal (e, f) = product of the incidence signs at the shared node.
    const auto inc = incident_edge_lists(g);
    for (int v = 0; v < g.num_nodes(); ++v) {
        const auto& list = inc[v];
        for (std::size_t i = 0; i < list.size(); ++i) {
            for (std::size_t j = i + 1; j < list.size(); ++j) {
                const int e = list[i];
                const int f = list[j];
                const std::int64_t s = incidence_sign(g.edge(e), v) * incidence_sign(g.edge(f), v);
                t.push_back({e, f, s});
                t.push_back({f, e, s});
            }
        }
    }
    return SparseMatrix::from_int_triplets(m, m, std::move(t));
}

Graph line_graph(const Graph& g) {
    std::vector<std::pair<int, int>> pairs;
    const auto inc = incident_edge_lists(g);
    for (int v = 0; v < g.num_nodes(); ++v) {
        const auto& list = inc[v];
        for (std::size_t i = 0; i < list.size(); ++i)
            for (std::size_t j = i + 1; j < list.size(); ++j)
                pairs.emplace_back(std::min(list[i], list[j]), std::max(list[i], list[j]));
    }
    std::sort(pairs.begin(), pairs.end());
    // Two simple-graph edges share at most one node, so no duplicates arise.
    return Graph::from_pairs(g.num_edges(), pairs);
}

SparseMatrix line_graph_adjacency(const Graph& g) {
    std::vector<IntTriplet> t;
    const auto inc = incident_edge_lists(g);
    for (int v = 0; v < g.num_nodes(); ++v) {
        const auto& list = inc[v];
        for (std::size_t i = 0; i < list.size(); ++i) {
            for (std::size_t j = i + 1; j < list.size(); ++j) {
                t.push_back({list[i], list[j], 1});
                t.push_back({list[j], list[i], 1});
            }
        }
    }
    return SparseMatrix::from_int_triplets(g.num_edges(), g.num_edges(), std::move(t));
}

SparseMatrix line_graph_laplacian(const Graph& g) { return graph_laplacian(line_graph(g)); }

int connected_component_count(const Graph& g) {
    std::vector<int> parent(static_cast<std::size_t>(g.num_nodes()));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    int components = g.num_nodes();
    for (const Edge& e : g.edges()) {
        const int a = find(e.tail);
        const int b = find(e.head);
        if (a != b) {
            parent[a] = b;
            --components;
        }
    }
    return components;
}

}  // namespace edgeflow
