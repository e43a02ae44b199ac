#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "edgeflow/graph.hpp"
#include "edgeflow/signals.hpp"

namespace edgeflow::filters {

enum class FilterKind {
    node_denoise,          // (I + alpha L)^-1 y
    node_smooth,           // (I - mu L)^k y
    flow_denoise,          // (I + alpha L1)^-1 f
    flow_smooth,           // (I - mu L1)^k f
    flow_denoise_sources,  // (I + alpha L1)^-1 (f + alpha B^T phi)
    mixed,                 // (I + alpha L1 + beta LLG)^-1 f
};

const char* kind_name(FilterKind k);
std::optional<FilterKind> kind_from_name(std::string_view name);

struct FilterSpec {
    FilterKind kind = FilterKind::flow_denoise;
    double alpha = 0.0;
    double beta = 0.0;
    double mu = 0.0;
    int k = 0;
    std::optional<NodeSignal> potential;  // sources/sinks, flow_denoise_sources only
};

// Named validation notes: parameters set but irrelevant to the kind are
// flagged ("ignored_parameter ..."), required ones that are missing or out of
// range raise InvalidFilterSpecError.
std::vector<std::string> validate(const FilterSpec& spec);

// Notes emitted while filtering (currently only the smoothing stability
// warning "mu_exceeds_stability_bound"). Pass nullptr to ignore.
using Notes = std::vector<std::string>;

NodeSignal node_denoise(const Graph& g, const NodeSignal& y, double alpha);
NodeSignal node_smooth(const Graph& g, const NodeSignal& y, double mu, int k,
                       Notes* notes = nullptr);
EdgeSignal flow_denoise(const Graph& g, const EdgeSignal& f, double alpha);
EdgeSignal flow_smooth(const Graph& g, const EdgeSignal& f, double mu, int k,
                       Notes* notes = nullptr);
EdgeSignal flow_denoise_sources(const Graph& g, const EdgeSignal& f, double alpha,
                                const NodeSignal& phi);
EdgeSignal mixed_filter(const Graph& g, const EdgeSignal& f, double alpha, double beta);

enum class OperatorBasis { node_laplacian, edge_laplacian, line_graph_laplacian };

const char* basis_name(OperatorBasis b);
std::optional<OperatorBasis> basis_from_name(std::string_view name);
SparseMatrix basis_operator(const Graph& g, OperatorBasis b);

// Filter gain per eigenvalue, ordered by the ascending eigenvalues of the
// chosen basis operator: 1/(1 + alpha lambda) for the denoisers,
// (1 - mu lambda)^k for the smoothers. The mixed filter has no such response
// (its two regularizers share no eigenbasis) and is rejected.
struct FrequencyResponse {
    std::vector<double> values;
};

FrequencyResponse frequency_response(std::span<const double> eigenvalues,
                                     const FilterSpec& spec);
FrequencyResponse frequency_response(const Graph& g, const FilterSpec& spec,
                                     OperatorBasis basis);

// True iff the response never increases (ties allowed within tie_tol).
bool is_lowpass(const FrequencyResponse& h, double tie_tol = 1e-12);

}  // namespace edgeflow::filters
