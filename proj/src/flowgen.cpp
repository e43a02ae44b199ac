#include "edgeflow/flowgen.hpp"

#include <cmath>
#include <vector>

#include "edgeflow/errors.hpp"
#include "edgeflow/kernels.hpp"

namespace edgeflow::flowgen {

double Rng::uniform() {
    // 53 significant bits, shifted into (0, 1].
    return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
}

double Rng::normal() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * 3.14159265358979323846 * u2;
    cached_ = r * std::sin(theta);
    has_cached_ = true;
    return r * std::cos(theta);
}

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t stream) {
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

void validate(const FlowRecipe& r) {
    if (r.harmonic_weight < 0.0 || r.gradient_weight < 0.0 ||
        r.linegraph_smooth_weight < 0.0)
        throw InvalidRecipeError("component weights must be >= 0");
    if (r.harmonic_weight == 0.0 && r.gradient_weight == 0.0 &&
        r.linegraph_smooth_weight == 0.0)
        throw InvalidRecipeError("at least one component weight must be positive");
    if (r.noise_sigma < 0.0) throw InvalidRecipeError("noise_sigma must be >= 0");
    if (r.linegraph_cutoff < 0) throw InvalidRecipeError("linegraph_cutoff must be >= 0");
}

int effective_cutoff(const FlowRecipe& r, int num_edges) {
    if (r.linegraph_cutoff > 0) return r.linegraph_cutoff;
    return (num_edges + 9) / 10 > 0 ? (num_edges + 9) / 10 : 1;
}

namespace {

std::vector<double> draw_normals(Rng& rng, std::size_t n) {
    std::vector<double> v(n);
    for (double& x : v) x = rng.normal();
    return v;
}

// Normalizes in place; redraws via `regenerate` on (measure-zero) degenerate
// draws so the generators always return a unit vector.
template <typename Regenerate>
void normalize_or_retry(std::vector<double>& v, Regenerate regenerate) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        const double n = kernels::norm2(v);
        if (n > 1e-12) {
            kernels::scale(1.0 / n, v);
            return;
        }
        v = regenerate();
    }
    throw ConvergenceError("random flow generator produced degenerate vectors", 64);
}

}  // namespace

FlowFactory::FlowFactory(Graph g)
    : g_(std::move(g)), incidence_t_(incidence_matrix(g_).transposed()) {}

EdgeSignal FlowFactory::harmonic(std::uint64_t seed) const {
    if (hodge::cycle_space_dimension(g_) < 1)
        throw TrivialCycleSpaceError("graph has no independent cycles");
    if (!projector_) projector_.emplace(g_);
    Rng rng(seed);
    auto project = [&] {
        return projector_->cyclic(EdgeSignal(draw_normals(rng, g_.num_edges()))).values;
    };
    std::vector<double> f = project();
    normalize_or_retry(f, project);
    return EdgeSignal(std::move(f));
}

EdgeSignal FlowFactory::gradient(std::uint64_t seed) const {
    if (g_.num_edges() < 1)
        throw DimensionError("random_gradient_flow: graph has no edges");
    Rng rng(seed);
    auto lift = [&] {
        const std::vector<double> phi = draw_normals(rng, g_.num_nodes());
        std::vector<double> f(g_.num_edges());
        kernels::spmv(incidence_t_, phi, f);
        return f;
    };
    std::vector<double> f = lift();
    normalize_or_retry(f, lift);
    return EdgeSignal(std::move(f));
}

EdgeSignal FlowFactory::linegraph_smooth(std::uint64_t seed, int cutoff) const {
    const int e = g_.num_edges();
    if (cutoff < 1 || cutoff > e)
        throw CutoffError("linegraph cutoff must lie in [1, E]");
    if (!llg_eig_) llg_eig_ = spectral::eig_sym(line_graph_laplacian(g_));
    Rng rng(seed);
    auto combine = [&] {
        const std::vector<double> c = draw_normals(rng, static_cast<std::size_t>(cutoff));
        std::vector<double> f(e, 0.0);
        for (int j = 0; j < cutoff; ++j)
            for (int i = 0; i < e; ++i) f[i] += c[j] * llg_eig_->eigenvectors(i, j);
        return f;
    };
    std::vector<double> f = combine();
    normalize_or_retry(f, combine);
    return EdgeSignal(std::move(f));
}

std::pair<EdgeSignal, EdgeSignal> FlowFactory::synthesize(const FlowRecipe& r) const {
    validate(r);
    const int e = g_.num_edges();
    if (e < 1) throw DimensionError("synthesize: graph has no edges");

    std::vector<double> acc(e, 0.0);
    if (r.harmonic_weight > 0.0)
        kernels::axpy(r.harmonic_weight, harmonic(mix_seed(r.seed, 0)).values, acc);
    if (r.gradient_weight > 0.0)
        kernels::axpy(r.gradient_weight, gradient(mix_seed(r.seed, 1)).values, acc);
    if (r.linegraph_smooth_weight > 0.0)
        kernels::axpy(r.linegraph_smooth_weight,
                      linegraph_smooth(mix_seed(r.seed, 2), effective_cutoff(r, e)).values,
                      acc);

    const double n = kernels::norm2(acc);
    if (n <= 1e-12)
        throw InvalidRecipeError("mixture components cancel; cannot normalize f0");
    kernels::scale(1.0 / n, acc);

    EdgeSignal f0(std::move(acc));
    EdgeSignal f = add_gaussian_noise(f0, r.noise_sigma, mix_seed(r.seed, 3));
    return {std::move(f0), std::move(f)};
}

EdgeSignal random_harmonic_flow(const Graph& g, std::uint64_t seed) {
    return FlowFactory(g).harmonic(seed);
}

EdgeSignal random_gradient_flow(const Graph& g, std::uint64_t seed) {
    return FlowFactory(g).gradient(seed);
}

EdgeSignal random_linegraph_smooth_flow(const Graph& g, std::uint64_t seed, int cutoff) {
    return FlowFactory(g).linegraph_smooth(seed, cutoff);
}

EdgeSignal add_gaussian_noise(const EdgeSignal& f, double sigma, std::uint64_t seed) {
    if (sigma < 0.0) throw InvalidRecipeError("noise sigma must be >= 0");
    EdgeSignal out = f;
    if (sigma == 0.0) return out;
    Rng rng(seed);
    for (double& x : out.values) x += sigma * rng.normal();
    return out;
}

std::pair<EdgeSignal, EdgeSignal> synthesize(const Graph& g, const FlowRecipe& r) {
    return FlowFactory(g).synthesize(r);
}

}  // namespace edgeflow::flowgen
