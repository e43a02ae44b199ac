#pragma once

#include <vector>

namespace edgeflow {

// Real value per edge, signed relative to the edge's reference orientation:
// positive means flow from tail to head.
struct EdgeSignal {
    std::vector<double> values;

    EdgeSignal() = default;
    explicit EdgeSignal(std::size_t n, double fill = 0.0) : values(n, fill) {}
    explicit EdgeSignal(std::vector<double> v) : values(std::move(v)) {}

    std::size_t size() const { return values.size(); }
    double& operator[](std::size_t i) { return values[i]; }
    double operator[](std::size_t i) const { return values[i]; }

    bool operator==(const EdgeSignal&) const = default;
};

// Real value per node (potentials, node data).
struct NodeSignal {
    std::vector<double> values;

    NodeSignal() = default;
    explicit NodeSignal(std::size_t n, double fill = 0.0) : values(n, fill) {}
    explicit NodeSignal(std::vector<double> v) : values(std::move(v)) {}

    std::size_t size() const { return values.size(); }
    double& operator[](std::size_t i) { return values[i]; }
    double operator[](std::size_t i) const { return values[i]; }

    bool operator==(const NodeSignal&) const = default;
};

}  // namespace edgeflow
