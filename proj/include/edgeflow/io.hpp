#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "edgeflow/filters.hpp"
#include "edgeflow/flowgen.hpp"
#include "edgeflow/graph.hpp"
#include "edgeflow/signals.hpp"
#include "edgeflow/sparse.hpp"

namespace edgeflow::io {

// Graph files: UTF-8 text, one edge per line as `tail<TAB>head` (0-based ids),
// `#` comments ignored, optional `nodes <N>` header (otherwise N = max id + 1),
// optional `coord <i> <x> <y>` lines. When coord lines appear they must cover
// every node; layouts are either fully stored or fully computed.
struct GraphFile {
    Graph graph;
    std::vector<std::array<double, 2>> coords;  // empty or one entry per node

    bool has_coords() const { return !coords.empty(); }
};

GraphFile parse_graph_text(const std::string& text, const std::string& name);
GraphFile read_graph_file(const std::string& path);
void write_graph_file(const GraphFile& gf, const std::string& path);

// FNV-1a (64-bit) over the node count and the oriented edge list. Flow files
// carry this so a flow cannot silently be applied to the wrong graph.
std::uint64_t edge_list_hash(const Graph& g);

// Flow files: header comments recording the source graph name, the sign
// convention, and the edge-list hash, then one `edge_index value` line per
// edge. Values use %.17g, so write-then-read is bit-exact.
void write_flow_file(const std::string& path, const EdgeSignal& f, const Graph& g,
                     const std::string& graph_name);
EdgeSignal read_flow_file(const std::string& path, const Graph& g);

// Node signals (potentials) use the same layout with `node_index value` lines.
void write_node_signal_file(const std::string& path, const NodeSignal& s, const Graph& g,
                            const std::string& graph_name);
NodeSignal read_node_signal_file(const std::string& path, const Graph& g);

// FilterSpec as a flat key-value record: kind, alpha, beta, mu, k, and an
// optional `phi <path>` pointing at a node-signal file (loaded by the caller
// once the graph is known).
struct FilterSpecFile {
    filters::FilterSpec spec;
    std::optional<std::string> phi_path;
};

FilterSpecFile read_filter_spec_file(const std::string& path);
void write_filter_spec_file(const std::string& path, const filters::FilterSpec& spec,
                            const std::optional<std::string>& phi_path = std::nullopt);

// FlowRecipe as a flat key-value record mirroring its field names.
flowgen::FlowRecipe read_flow_recipe_file(const std::string& path);
void write_flow_recipe_file(const std::string& path, const flowgen::FlowRecipe& r);

// Operator export: `row col value` per line, sorted by (row, col).
void write_operator_file(const std::string& path, const SparseMatrix& m);

std::string read_text_file(const std::string& path);

}  // namespace edgeflow::io
