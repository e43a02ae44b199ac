#include "edgeflow/hodge.hpp"

#include <algorithm>
#include <cmath>

#include "edgeflow/errors.hpp"
#include "edgeflow/kernels.hpp"

namespace edgeflow::hodge {

int cycle_space_dimension(const Graph& g) {
    return g.num_edges() - g.num_nodes() + connected_component_count(g);
}

Projector::Projector(const Graph& g, double rank_tol)
    : graph_(g),
      incidence_(incidence_matrix(g)),
      incidence_t_(incidence_.transposed()),
      node_eig_(spectral::eig_sym(graph_laplacian(g))),
      rank_tol_(rank_tol) {}

EdgeSignal Projector::cyclic(const EdgeSignal& f) const {
    if (f.size() != static_cast<std::size_t>(graph_.num_edges()))
        throw DimensionError("cyclic: signal length does not match edge count");
    std::vector<double> divergence(static_cast<std::size_t>(graph_.num_nodes()));
    kernels::spmv(incidence_, f.values, divergence);
    const std::vector<double> phi = spectral::pinv_apply(node_eig_, divergence, rank_tol_);
    std::vector<double> out(f.values);
    std::vector<double> grad(f.size());
    kernels::spmv(incidence_t_, phi, grad);
    kernels::axpy(-1.0, grad, out);
    return EdgeSignal(std::move(out));
}

EdgeSignal Projector::gradient(const EdgeSignal& f) const {
    EdgeSignal c = cyclic(f);
    std::vector<double> out(f.values);
    kernels::axpy(-1.0, c.values, out);
    return EdgeSignal(std::move(out));
}

HodgeDecomposition Projector::decompose(const EdgeSignal& f) const {
    HodgeDecomposition d;
    d.cyclic = cyclic(f);
    d.gradient.values = f.values;
    kernels::axpy(-1.0, d.cyclic.values, d.gradient.values);
    std::vector<double> residual(static_cast<std::size_t>(graph_.num_nodes()));
    kernels::spmv(incidence_, d.cyclic.values, residual);
    d.residual_norm = kernels::norm2(residual);
    return d;
}

NodeSignal Projector::potential(const EdgeSignal& f) const {
    if (f.size() != static_cast<std::size_t>(graph_.num_edges()))
        throw DimensionError("potential: signal length does not match edge count");
    std::vector<double> divergence(static_cast<std::size_t>(graph_.num_nodes()));
    kernels::spmv(incidence_, f.values, divergence);
    return NodeSignal(spectral::pinv_apply(node_eig_, divergence, rank_tol_));
}

EdgeSignal project_cyclic(const Graph& g, const EdgeSignal& f) {
    return Projector(g).cyclic(f);
}

EdgeSignal project_gradient(const Graph& g, const EdgeSignal& f) {
    return Projector(g).gradient(f);
}

HodgeDecomposition decompose(const Graph& g, const EdgeSignal& f) {
    return Projector(g).decompose(f);
}

EdgeSignal ideal_lowpass(const Graph& g, const EdgeSignal& f, double rank_tol) {
    if (f.size() != static_cast<std::size_t>(g.num_edges()))
        throw DimensionError("ideal_lowpass: signal length does not match edge count");
    const auto eig = spectral::eig_sym(edge_laplacian(g));
    const int m = eig.dimension();
    double lam_max = 0.0;
    for (double l : eig.eigenvalues) lam_max = std::max(lam_max, std::abs(l));
    const double cut = rank_tol * lam_max;

    EdgeSignal out(static_cast<std::size_t>(m), 0.0);
    for (int j = 0; j < m; ++j) {
        if (std::abs(eig.eigenvalues[j]) > cut) continue;
        double coef = 0.0;
        for (int i = 0; i < m; ++i) coef += eig.eigenvectors(i, j) * f[i];
        for (int i = 0; i < m; ++i) out[i] += coef * eig.eigenvectors(i, j);
    }
    return out;
}

std::vector<EdgeSignal> cycle_basis(const Graph& g, double rank_tol) {
    const auto eig = spectral::eig_sym(edge_laplacian(g));
    const int m = eig.dimension();
    double lam_max = 0.0;
    for (double l : eig.eigenvalues) lam_max = std::max(lam_max, std::abs(l));
    const double cut = rank_tol * lam_max;

    std::vector<EdgeSignal> basis;
    for (int j = 0; j < m; ++j) {
        if (std::abs(eig.eigenvalues[j]) > cut) continue;
        EdgeSignal v(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) v[i] = eig.eigenvectors(i, j);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace edgeflow::hodge
