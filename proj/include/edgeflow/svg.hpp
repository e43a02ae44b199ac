#pragma once

#include <array>
#include <string>
#include <vector>

#include "edgeflow/graph.hpp"
#include "edgeflow/signals.hpp"

namespace edgeflow::svg {

// Force-directed node placement with a fixed internal seed and iteration
// count: the same graph always lays out the same way. Used when the graph
// file carries no coordinate block.
std::vector<std::array<double, 2>> spring_layout(const Graph& g, int iterations = 250);

struct FlowMapOptions {
    double width = 480.0;
    double height = 480.0;
    double margin = 40.0;
    std::string title;  // drawn top-left when nonempty
    double min_edge_width = 0.8;
    double max_edge_width = 7.0;
    // Flows are scaled against this magnitude; 0 means autoscale to the
    // largest |f| in this figure. Pass a shared value to compare panels.
    double reference_magnitude = 0.0;
};

// Flow map: every edge drawn as a line whose width tracks |f|, colored by
// sign, with an arrowhead along the actual flow direction (negative values
// point against the stored orientation). Near-zero flows render as thin
// gray lines without arrowheads.
std::string render_flow_map(const Graph& g,
                            const std::vector<std::array<double, 2>>& coords,
                            const EdgeSignal& f, const FlowMapOptions& opts = {});

// Plain rendering of the topology.
std::string render_graph(const Graph& g,
                         const std::vector<std::array<double, 2>>& coords,
                         const FlowMapOptions& opts = {});

void write_svg_file(const std::string& path, const std::string& svg);

}  // namespace edgeflow::svg
