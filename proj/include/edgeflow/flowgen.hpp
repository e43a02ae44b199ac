#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <utility>

#include "edgeflow/graph.hpp"
#include "edgeflow/hodge.hpp"
#include "edgeflow/signals.hpp"
#include "edgeflow/spectral.hpp"

namespace edgeflow::flowgen {

// Seedable, platform-independent generator: mt19937_64 (fully specified by
// the standard) plus a Box-Muller normal transform. std::normal_distribution
// is deliberately avoided because its algorithm is implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform on (0, 1]; never returns 0, so log() is safe.
    double uniform();
    // Standard normal; generates Box-Muller pairs and caches the second.
    double normal();

private:
    std::mt19937_64 engine_;
    bool has_cached_ = false;
    double cached_ = 0.0;
};

// splitmix64-style derivation of independent sub-seeds from a base seed.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t stream);

struct FlowRecipe {
    double harmonic_weight = 0.0;
    double gradient_weight = 0.0;
    double linegraph_smooth_weight = 0.0;
    double noise_sigma = 0.0;
    std::uint64_t seed = 0;
    // Number of low-frequency L_LG eigenvectors mixed by the linegraph-smooth
    // component; 0 means the default ceil(E/10).
    int linegraph_cutoff = 0;
};

// Throws InvalidRecipeError when weights are negative, all zero, or sigma < 0.
void validate(const FlowRecipe& r);

int effective_cutoff(const FlowRecipe& r, int num_edges);

// Caches the spectral machinery (node-Laplacian eigensystem for projections,
// L_LG eigensystem for smooth flows) so ensembles over many seeds pay for the
// decompositions once. Lazily initialized; not safe for concurrent use, build
// one factory per thread or call the free functions below.
class FlowFactory {
public:
    explicit FlowFactory(Graph g);

    const Graph& graph() const { return g_; }

    EdgeSignal harmonic(std::uint64_t seed) const;
    EdgeSignal gradient(std::uint64_t seed) const;
    EdgeSignal linegraph_smooth(std::uint64_t seed, int cutoff) const;

    // Returns (f0, f): the unit-norm mixture and its noisy observation.
    std::pair<EdgeSignal, EdgeSignal> synthesize(const FlowRecipe& r) const;

private:
    Graph g_;
    SparseMatrix incidence_t_;
    mutable std::optional<hodge::Projector> projector_;
    mutable std::optional<spectral::EigenDecomposition> llg_eig_;
};

EdgeSignal random_harmonic_flow(const Graph& g, std::uint64_t seed);
EdgeSignal random_gradient_flow(const Graph& g, std::uint64_t seed);
EdgeSignal random_linegraph_smooth_flow(const Graph& g, std::uint64_t seed, int cutoff);
EdgeSignal add_gaussian_noise(const EdgeSignal& f, double sigma, std::uint64_t seed);
std::pair<EdgeSignal, EdgeSignal> synthesize(const Graph& g, const FlowRecipe& r);

}  // namespace edgeflow::flowgen
