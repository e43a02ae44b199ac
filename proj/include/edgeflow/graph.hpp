#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "edgeflow/sparse.hpp"

namespace edgeflow {

// One oriented edge: the reference orientation runs tail -> head. The
// orientation is bookkeeping, not direction: a flow of -2 on edge (t, h)
// means 2 units moving from h to t.
struct Edge {
    int tail = 0;
    int head = 0;

    bool operator==(const Edge&) const = default;
};

// Simple undirected graph with a fixed reference orientation per edge.
// No self-loops, no parallel edges. Edge indices are stable: every derived
// operator and every edge signal is indexed the same way. Immutable after
// construction.
class Graph {
public:
    Graph() = default;

    // Canonical orientation: tail = smaller endpoint.
    static Graph from_pairs(int num_nodes, std::span<const std::pair<int, int>> pairs);

    // Keeps the given order as the reference orientation.
    static Graph from_oriented(int num_nodes, std::span<const std::pair<int, int>> pairs);

    int num_nodes() const { return num_nodes_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    const Edge& edge(int e) const;
    std::span<const Edge> edges() const { return edges_; }

    // Same graph with edge e reversed; everything else untouched.
    Graph with_flipped_edge(int e) const;

    // Optional external identifiers; empty when unused.
    const std::vector<std::string>& node_labels() const { return node_labels_; }
    void set_node_labels(std::vector<std::string> labels);

    bool operator==(const Graph& other) const {
        return num_nodes_ == other.num_nodes_ && edges_ == other.edges_;
    }

private:
    Graph(int num_nodes, std::vector<Edge> edges);

    int num_nodes_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::string> node_labels_;
};

// N x E incidence matrix: column e holds -1 at the tail and +1 at the head.
SparseMatrix incidence_matrix(const Graph& g);

SparseMatrix adjacency_matrix(const Graph& g);
SparseMatrix degree_matrix(const Graph& g);

// L = D - A (equivalently B B^T), operator on node signals.
SparseMatrix graph_laplacian(const Graph& g);

// L1 = B^T B, operator on edge signals.
SparseMatrix edge_laplacian(const Graph& g);

// Graph on the E edges; two edges are adjacent when they share an endpoint.
Graph line_graph(const Graph& g);

// |B^T B - 2 I| taken elementwise; adjacency of line_graph(g).
SparseMatrix line_graph_adjacency(const Graph& g);

SparseMatrix line_graph_laplacian(const Graph& g);

int connected_component_count(const Graph& g);

}  // namespace edgeflow
