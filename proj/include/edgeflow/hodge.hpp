#pragma once

#include <vector>

#include "edgeflow/graph.hpp"
#include "edgeflow/signals.hpp"
#include "edgeflow/spectral.hpp"

namespace edgeflow::hodge {

// Orthogonal split of an edge signal into a flow-conserving (cyclic) part
// and a potential-induced (gradient) part. residual_norm records ||B f_C||_2
// as a numerical self-check; it should be ~0.
struct HodgeDecomposition {
    EdgeSignal cyclic;
    EdgeSignal gradient;
    double residual_norm = 0.0;
};

// E - N + C, the number of independent cycles. Equals dim ker(L1).
int cycle_space_dimension(const Graph& g);

// Precomputes the incidence matrix and the eigendecomposition of the node
// Laplacian once per graph. Projections work in node space (N x N) rather
// than edge space (E x E) since N is usually the smaller side. Immutable
// after construction; safe to share across threads.
class Projector {
public:
    explicit Projector(const Graph& g, double rank_tol = spectral::default_rank_tol);

    const Graph& graph() const { return graph_; }

    // Orthogonal projection onto ker(B): the closest flow-conserving signal.
    // Computed as f - B^T L^+ (B f).
    EdgeSignal cyclic(const EdgeSignal& f) const;

    // f - cyclic(f); lies in im(B^T).
    EdgeSignal gradient(const EdgeSignal& f) const;

    HodgeDecomposition decompose(const EdgeSignal& f) const;

    // A node potential phi with B^T phi = gradient(f) (up to constants per
    // component): phi = L^+ B f.
    NodeSignal potential(const EdgeSignal& f) const;

private:
    Graph graph_;
    SparseMatrix incidence_;
    SparseMatrix incidence_t_;
    spectral::EigenDecomposition node_eig_;
    double rank_tol_;
};

EdgeSignal project_cyclic(const Graph& g, const EdgeSignal& f);
EdgeSignal project_gradient(const Graph& g, const EdgeSignal& f);
HodgeDecomposition decompose(const Graph& g, const EdgeSignal& f);

// Spectral route to the same projection: eigendecompose L1 and keep only the
// zero-eigenvalue components. Exists as an independent cross-check of the
// node-space path; O(E^3) instead of O(N^3).
EdgeSignal ideal_lowpass(const Graph& g, const EdgeSignal& f,
                         double rank_tol = spectral::default_rank_tol);

// Orthonormal basis of the cycle space, read off the kernel eigenvectors of
// L1. Diagnostics only: the individual vectors are solver-dependent, only
// their span is canonical.
std::vector<EdgeSignal> cycle_basis(const Graph& g,
                                    double rank_tol = spectral::default_rank_tol);

}  // namespace edgeflow::hodge
