#include "edgeflow/filters.hpp"

#include <cmath>

#include "edgeflow/errors.hpp"
#include "edgeflow/kernels.hpp"
#include "edgeflow/spectral.hpp"

namespace edgeflow::filters {

const char* kind_name(FilterKind k) {
    switch (k) {
        case FilterKind::node_denoise: return "node_denoise";
        case FilterKind::node_smooth: return "node_smooth";
        case FilterKind::flow_denoise: return "flow_denoise";
        case FilterKind::flow_smooth: return "flow_smooth";
        case FilterKind::flow_denoise_sources: return "flow_denoise_sources";
        case FilterKind::mixed: return "mixed";
    }
    return "unknown";
}

std::optional<FilterKind> kind_from_name(std::string_view name) {
    for (FilterKind k :
         {FilterKind::node_denoise, FilterKind::node_smooth, FilterKind::flow_denoise,
          FilterKind::flow_smooth, FilterKind::flow_denoise_sources, FilterKind::mixed}) {
        if (name == kind_name(k)) return k;
    }
    return std::nullopt;
}

namespace {

bool uses_alpha(FilterKind k) {
    return k == FilterKind::node_denoise || k == FilterKind::flow_denoise ||
           k == FilterKind::flow_denoise_sources || k == FilterKind::mixed;
}

bool uses_mu(FilterKind k) {
    return k == FilterKind::node_smooth || k == FilterKind::flow_smooth;
}

}  // namespace

std::vector<std::string> validate(const FilterSpec& spec) {
    std::vector<std::string> notes;
    const FilterKind k = spec.kind;

    if (uses_alpha(k) && spec.alpha < 0.0)
        throw InvalidFilterSpecError("alpha must be >= 0");
    if (k == FilterKind::mixed && spec.beta < 0.0)
        throw InvalidFilterSpecError("beta must be >= 0");
    if (uses_mu(k)) {
        if (spec.mu <= 0.0) throw InvalidFilterSpecError("mu must be > 0");
        if (spec.k < 0) throw InvalidFilterSpecError("k must be >= 0");
    }

    if (!uses_alpha(k) && spec.alpha != 0.0) notes.push_back("ignored_parameter alpha");
    if (k != FilterKind::mixed && spec.beta != 0.0) notes.push_back("ignored_parameter beta");
    if (!uses_mu(k)) {
        if (spec.mu != 0.0) notes.push_back("ignored_parameter mu");
        if (spec.k != 0) notes.push_back("ignored_parameter k");
    }
    if (k != FilterKind::flow_denoise_sources && spec.potential.has_value())
        notes.push_back("ignored_parameter phi");
    if (k == FilterKind::flow_denoise_sources && !spec.potential.has_value())
        throw InvalidFilterSpecError("flow_denoise_sources requires a potential (phi)");
    return notes;
}

namespace {

std::vector<double> rational_solve(const SparseMatrix& reg, double alpha,
                                   std::span<const double> rhs) {
    const SparseMatrix eye = SparseMatrix::identity(reg.rows());
    const double coeffs[] = {1.0, alpha};
    const SparseMatrix* mats[] = {&eye, &reg};
    const SparseMatrix system = SparseMatrix::linear_combination(coeffs, mats);
    return spectral::spd_solve(system, rhs);
}

std::vector<double> power_smooth(const SparseMatrix& lap, double mu, int k,
                                 std::span<const double> input, Notes* notes) {
    if (k < 0) throw InvalidFilterSpecError("k must be >= 0");
    if (mu <= 0.0) throw InvalidFilterSpecError("mu must be > 0");
    if (notes) {
        const double lam_max = spectral::lambda_max_estimate(lap);
        if (lam_max > 0.0 && mu >= 2.0 / lam_max)
            notes->push_back("mu_exceeds_stability_bound");
    }
    std::vector<double> x(input.begin(), input.end());
    std::vector<double> t(x.size());
    for (int i = 0; i < k; ++i) {
        kernels::spmv(lap, x, t);
        kernels::axpy(-mu, t, x);
    }
    return x;
}

}  // namespace

NodeSignal node_denoise(const Graph& g, const NodeSignal& y, double alpha) {
    if (y.size() != static_cast<std::size_t>(g.num_nodes()))
        throw DimensionError("node_denoise: signal length does not match node count");
    if (alpha < 0.0) throw InvalidFilterSpecError("alpha must be >= 0");
    return NodeSignal(rational_solve(graph_laplacian(g), alpha, y.values));
}

NodeSignal node_smooth(const Graph& g, const NodeSignal& y, double mu, int k, Notes* notes) {
    if (y.size() != static_cast<std::size_t>(g.num_nodes()))
        throw DimensionError("node_smooth: signal length does not match node count");
    return NodeSignal(power_smooth(graph_laplacian(g), mu, k, y.values, notes));
}

EdgeSignal flow_denoise(const Graph& g, const EdgeSignal& f, double alpha) {
    if (f.size() != static_cast<std::size_t>(g.num_edges()))
        throw DimensionError("flow_denoise: signal length does not match edge count");
    if (alpha < 0.0) throw InvalidFilterSpecError("alpha must be >= 0");
    return EdgeSignal(rational_solve(edge_laplacian(g), alpha, f.values));
}

EdgeSignal flow_smooth(const Graph& g, const EdgeSignal& f, double mu, int k, Notes* notes) {
    if (f.size() != static_cast<std::size_t>(g.num_edges()))
        throw DimensionError("flow_smooth: signal length does not match edge count");
    return EdgeSignal(power_smooth(edge_laplacian(g), mu, k, f.values, notes));
}

EdgeSignal flow_denoise_sources(const Graph& g, const EdgeSignal& f, double alpha,
                                const NodeSignal& phi) {
    if (f.size() != static_cast<std::size_t>(g.num_edges()))
        throw DimensionError("flow_denoise_sources: signal length does not match edge count");
    if (phi.size() != static_cast<std::size_t>(g.num_nodes()))
        throw DimensionError("flow_denoise_sources: potential length does not match node count");
    if (alpha < 0.0) throw InvalidFilterSpecError("alpha must be >= 0");

    // rhs = f + alpha B^T phi
    std::vector<double> rhs(f.values);
    std::vector<double> lifted(f.size());
    kernels::spmv(incidence_matrix(g).transposed(), phi.values, lifted);
    kernels::axpy(alpha, lifted, rhs);
    return EdgeSignal(rational_solve(edge_laplacian(g), alpha, rhs));
}

EdgeSignal mixed_filter(const Graph& g, const EdgeSignal& f, double alpha, double beta) {
    if (f.size() != static_cast<std::size_t>(g.num_edges()))
        throw DimensionError("mixed_filter: signal length does not match edge count");
    if (alpha < 0.0 || beta < 0.0) throw InvalidFilterSpecError("alpha and beta must be >= 0");

    const SparseMatrix eye = SparseMatrix::identity(g.num_edges());
    const SparseMatrix l1 = edge_laplacian(g);
    const SparseMatrix llg = line_graph_laplacian(g);
    const double coeffs[] = {1.0, alpha, beta};
    const SparseMatrix* mats[] = {&eye, &l1, &llg};
    const SparseMatrix system = SparseMatrix::linear_combination(coeffs, mats);
    return EdgeSignal(spectral::spd_solve(system, f.values));
}

const char* basis_name(OperatorBasis b) {
    switch (b) {
        case OperatorBasis::node_laplacian: return "L";
        case OperatorBasis::edge_laplacian: return "L1";
        case OperatorBasis::line_graph_laplacian: return "LLG";
    }
    return "unknown";
}

std::optional<OperatorBasis> basis_from_name(std::string_view name) {
    if (name == "L") return OperatorBasis::node_laplacian;
    if (name == "L1") return OperatorBasis::edge_laplacian;
    if (name == "LLG") return OperatorBasis::line_graph_laplacian;
    return std::nullopt;
}

SparseMatrix basis_operator(const Graph& g, OperatorBasis b) {
    switch (b) {
        case OperatorBasis::node_laplacian: return graph_laplacian(g);
        case OperatorBasis::edge_laplacian: return edge_laplacian(g);
        case OperatorBasis::line_graph_laplacian: return line_graph_laplacian(g);
    }
    throw InvalidFilterSpecError("unknown operator basis");
}

FrequencyResponse frequency_response(std::span<const double> eigenvalues,
                                     const FilterSpec& spec) {
    FrequencyResponse h;
    h.values.reserve(eigenvalues.size());
    switch (spec.kind) {
        case FilterKind::node_denoise:
        case FilterKind::flow_denoise:
        case FilterKind::flow_denoise_sources:
            for (double lam : eigenvalues) h.values.push_back(1.0 / (1.0 + spec.alpha * lam));
            break;
        case FilterKind::node_smooth:
        case FilterKind::flow_smooth:
            for (double lam : eigenvalues)
                h.values.push_back(std::pow(1.0 - spec.mu * lam, spec.k));
            break;
        case FilterKind::mixed:
            throw MixedResponseError(
                "the mixed filter couples two operators without a common eigenbasis; "
                "no single-operator frequency response exists");
    }
    return h;
}

FrequencyResponse frequency_response(const Graph& g, const FilterSpec& spec,
                                     OperatorBasis basis) {
    if (spec.kind == FilterKind::mixed)
        throw MixedResponseError(
            "the mixed filter couples two operators without a common eigenbasis; "
            "no single-operator frequency response exists");
    const auto eig = spectral::eig_sym(basis_operator(g, basis));
    return frequency_response(eig.eigenvalues, spec);
}

bool is_lowpass(const FrequencyResponse& h, double tie_tol) {
    for (std::size_t i = 1; i < h.values.size(); ++i) {
        if (h.values[i] > h.values[i - 1] + tie_tol) return false;
    }
    return true;
}

}  // namespace edgeflow::filters
