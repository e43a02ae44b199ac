// Acceptance gate: prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails. Random instances are seeded, so every run checks
// the same cases.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <string>
#include <vector>

#include "edgeflow/dense.hpp"
#include "edgeflow/experiments.hpp"
#include "edgeflow/filters.hpp"
#include "edgeflow/flowgen.hpp"
#include "edgeflow/graph.hpp"
#include "edgeflow/hodge.hpp"
#include "edgeflow/io.hpp"
#include "edgeflow/kernels.hpp"
#include "edgeflow/spectral.hpp"
#include "test_support.hpp"

using namespace edgeflow;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report_line(int index, bool ok, const std::string& what) {
    std::printf("%s %2d %s\n", ok ? "PASS" : "FAIL", index, what.c_str());
    if (!ok) ++failures;
}

std::string fmt(const char* pattern, ...) {
    va_list args;
    va_start(args, pattern);
    char buf[512];
    std::vsnprintf(buf, sizeof(buf), pattern, args);
    va_end(args);
    return buf;
}

bool dense_equal(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j)) return false;
    return true;
}

// 1. L = B B^T and L1 = B^T B, exact, 200 random graphs with N <= 15, < 5 s.
void criterion_1() {
    const auto t0 = Clock::now();
    flowgen::Rng rng(1001);
    int exact = 0;
    const int total = 200;
    for (int t = 0; t < total; ++t) {
        const Graph g = testsup::random_connected_graph(rng, 2, 15, 2.0);
        const DenseMatrix b = to_dense(incidence_matrix(g));
        const bool ok_l = dense_equal(to_dense(graph_laplacian(g)),
                                      multiply(b, b.transposed()));
        const bool ok_l1 = dense_equal(to_dense(edge_laplacian(g)),
                                       multiply(b.transposed(), b));
        if (ok_l && ok_l1) ++exact;
    }
    const double dt = seconds_since(t0);
    report_line(1, exact == total && dt < 5.0,
                fmt("structural identities L = B B^T, L1 = B^T B exact on %d/%d graphs, "
                    "%.2f s (< 5 s)",
                    exact, total, dt));
}

// 2. Nonzero eigenvalues of L and L1 agree within 1e-9; dim ker L1 = E - N + C.
void criterion_2() {
    flowgen::Rng rng(1002);
    const int total = 50;
    int ok_count = 0;
    double worst = 0.0;
    for (int t = 0; t < total; ++t) {
        const Graph g = testsup::random_connected_graph(rng, 2, 12, 2.0);
        const int n = g.num_nodes(), e = g.num_edges();
        const int c = connected_component_count(g);
        const auto eig_l = spectral::eig_sym(graph_laplacian(g));
        const auto eig_l1 = spectral::eig_sym(edge_laplacian(g));

        bool ok = spectral::kernel_dimension(eig_l1) == e - n + c;
        // structural zero counts: C for L, E - N + C for L1
        std::vector<double> nz_l(eig_l.eigenvalues.begin() + c, eig_l.eigenvalues.end());
        std::vector<double> nz_l1(eig_l1.eigenvalues.begin() + (e - n + c),
                                  eig_l1.eigenvalues.end());
        ok = ok && nz_l.size() == nz_l1.size();
        if (ok)
            for (std::size_t i = 0; i < nz_l.size(); ++i) {
                const double d = std::abs(nz_l[i] - nz_l1[i]);
                worst = std::max(worst, d);
                ok = ok && d <= 1e-9;
            }
        if (ok) ++ok_count;
    }
    report_line(2, ok_count == total,
                fmt("nonzero spectra of L and L1 match as multisets on %d/%d graphs "
                    "(worst gap %.2e <= 1e-9), kernel dim = E - N + C everywhere",
                    ok_count, total, worst));
}

// 3. project_cyclic equals an independent dense KKT solve, 1e-7 relative.
void criterion_3() {
    flowgen::Rng rng(1003);
    const int total = 50;
    int ok_count = 0;
    double worst = 0.0;
    for (int t = 0; t < total; ++t) {
        const Graph g = testsup::random_connected_graph(rng, 2, 12, 2.0);
        const std::vector<double> f = testsup::random_signal(rng, g.num_edges());
        const EdgeSignal got = hodge::project_cyclic(g, EdgeSignal(f));
        const std::vector<double> want = testsup::kkt_cyclic_projection(g, f);
        const double want_norm = kernels::norm2(want);
        double err;
        if (want_norm < 1e-12) {
            err = kernels::norm2(got.values);  // both should vanish
        } else {
            err = testsup::rel_err(got.values, want);
        }
        worst = std::max(worst, err);
        if (err <= 1e-7) ++ok_count;
    }
    report_line(3, ok_count == total,
                fmt("cyclic projection matches the dense KKT oracle on %d/%d cases "
                    "(worst %.2e <= 1e-7 relative)",
                    ok_count, total, worst));
}

// 4. Hodge reconstruction, orthogonality, energy split: 1e-8 relative on 1000
//    random (graph, signal) pairs, < 10 s.
void criterion_4() {
    const auto t0 = Clock::now();
    flowgen::Rng rng(1004);
    const int total = 1000;
    int ok_count = 0;
    double worst = 0.0;
    for (int t = 0; t < total; ++t) {
        const Graph g = testsup::random_connected_graph(rng, 2, 12, 2.0);
        const EdgeSignal f(testsup::random_signal(rng, g.num_edges()));
        const auto d = hodge::decompose(g, f);
        double rec = 0.0, cross = 0.0, ec = 0.0, eg = 0.0, ef = 0.0;
        for (std::size_t i = 0; i < f.size(); ++i) {
            const double r = d.cyclic[i] + d.gradient[i] - f[i];
            rec += r * r;
            cross += d.cyclic[i] * d.gradient[i];
            ec += d.cyclic[i] * d.cyclic[i];
            eg += d.gradient[i] * d.gradient[i];
            ef += f[i] * f[i];
        }
        const double scale = std::max(ef, 1e-30);
        const double m = std::max({std::sqrt(rec / scale), std::abs(cross) / scale,
                                   std::abs(ec + eg - ef) / scale});
        worst = std::max(worst, m);
        if (m <= 1e-8) ++ok_count;
    }
    const double dt = seconds_since(t0);
    report_line(4, ok_count == total && dt < 10.0,
                fmt("hodge reconstruction/orthogonality/energy on %d/%d pairs "
                    "(worst %.2e <= 1e-8), %.2f s (< 10 s)",
                    ok_count, total, worst, dt));
}

// 5. Reductions: sources with phi = 0, mixed with beta = 0, alpha = 0.
void criterion_5() {
    flowgen::Rng rng(1005);
    const int total = 50;
    int ok_count = 0;
    double worst = 0.0;
    for (int t = 0; t < total; ++t) {
        const Graph g = testsup::random_connected_graph(rng, 3, 12, 2.0);
        const EdgeSignal f(testsup::random_signal(rng, g.num_edges()));
        const double alpha = 0.05 + 4.0 * rng.uniform();
        const EdgeSignal base = filters::flow_denoise(g, f, alpha);
        const NodeSignal phi0(static_cast<std::size_t>(g.num_nodes()), 0.0);
        const double d1 = testsup::max_abs_diff(
            filters::flow_denoise_sources(g, f, alpha, phi0).values, base.values);
        const double d2 =
            testsup::max_abs_diff(filters::mixed_filter(g, f, alpha, 0.0).values,
                                  base.values);
        const double d3 =
            testsup::max_abs_diff(filters::flow_denoise(g, f, 0.0).values, f.values);
        const double m = std::max({d1, d2, d3});
        worst = std::max(worst, m);
        if (m <= 1e-10) ++ok_count;
    }
    report_line(5, ok_count == total,
                fmt("filter reductions (phi=0, beta=0, alpha=0) on %d/%d instances "
                    "(worst %.2e <= 1e-10)",
                    ok_count, total, worst));
}

// 6. Frequency responses: lowpass over 100 draws with mu < 1/lambda_max,
//    values match 1/(1+alpha lambda) and (1-mu lambda)^k to 1e-10.
void criterion_6() {
    flowgen::Rng rng(1006);
    const int total = 100;
    int ok_count = 0;
    double worst = 0.0;
    for (int t = 0; t < total; ++t) {
        const Graph g = testsup::random_connected_graph(rng, 3, 12, 2.0);
        const int pick = t % 4;
        const bool node_side = pick < 2;
        const auto eig = spectral::eig_sym(node_side ? graph_laplacian(g)
                                                     : edge_laplacian(g));
        const double lmax = eig.eigenvalues.back();
        filters::FilterSpec spec;
        bool smooth = pick == 1 || pick == 3;
        if (smooth) {
            spec.kind = node_side ? filters::FilterKind::node_smooth
                                  : filters::FilterKind::flow_smooth;
            spec.mu = rng.uniform() / std::max(lmax, 1e-12);
            spec.k = 1 + static_cast<int>(rng.uniform() * 12);
        } else {
            spec.kind = node_side ? filters::FilterKind::node_denoise
                                  : filters::FilterKind::flow_denoise;
            spec.alpha = 6.0 * rng.uniform();
        }
        const auto h = filters::frequency_response(eig.eigenvalues, spec);
        bool ok = filters::is_lowpass(h);
        for (std::size_t i = 0; i < h.values.size(); ++i) {
            const double lam = eig.eigenvalues[i];
            const double want = smooth ? std::pow(1.0 - spec.mu * lam, spec.k)
                                       : 1.0 / (1.0 + spec.alpha * lam);
            const double d = std::abs(h.values[i] - want);
            worst = std::max(worst, d);
            ok = ok && d <= 1e-10;
        }
        if (ok) ++ok_count;
    }
    report_line(6, ok_count == total,
                fmt("frequency responses lowpass and exact on %d/%d draws "
                    "(worst %.2e <= 1e-10)",
                    ok_count, total, worst));
}

// 7. Schematic scenario, 1000 seeds: flow smoothing beats the baseline and
//    line-graph smoothing loses to flow smoothing, each in >= 95%; < 30 s.
void criterion_7() {
    const auto t0 = Clock::now();
    const Graph g = io::read_graph_file("data/two_cycles.graph").graph;
    const auto recipe = experiments::schematic_recipe(g.num_edges(), 1);
    const auto ens = experiments::run_schematic_ensemble(
        g, recipe, experiments::schematic_mu, experiments::schematic_k,
        experiments::schematic_amplitude, 1000);
    const double dt = seconds_since(t0);
    const bool ok = ens.fraction_flow_beats_baseline >= 0.95 &&
                    ens.fraction_flow_beats_lg >= 0.95 && dt < 30.0;
    report_line(7, ok,
                fmt("schematic over 1000 seeds: flow beats baseline %.1f%% (>= 95%%), "
                    "line-graph worse than flow %.1f%% (>= 95%%), %.2f s (< 30 s)",
                    100.0 * ens.fraction_flow_beats_baseline,
                    100.0 * ens.fraction_flow_beats_lg, dt));
}

// 8. Comparison scenario, 100 seeds: median ordering plus the full per-seed
//    ordering in >= 70% of seeds; < 5 min.
void criterion_8() {
    const auto t0 = Clock::now();
    const Graph g = io::read_graph_file("data/street_network.graph").graph;
    const auto recipe = experiments::comparison_recipe(g.num_edges(), 1);
    const auto ens = experiments::run_denoising_comparison_ensemble(
        g, recipe, experiments::default_comparison_grids(),
        experiments::comparison_amplitude, 100);
    const double dt = seconds_since(t0);
    const bool medians_ok = ens.median_mixed <= ens.median_flow &&
                            ens.median_flow <= ens.median_baseline &&
                            ens.median_mixed <= ens.median_lg &&
                            ens.median_lg <= ens.median_baseline;
    const bool ok = medians_ok && ens.fraction_full_ordering >= 0.70 && dt < 300.0;
    report_line(
        8, ok,
        fmt("comparison over 100 seeds: medians %.2f/%.2f/%.2f/%.2f "
            "(mixed/flow/linegraph/baseline) ordered, full ordering %.0f%% (>= 70%%), "
            "%.1f s (< 300 s)",
            ens.median_mixed, ens.median_flow, ens.median_lg, ens.median_baseline,
            100.0 * ens.fraction_full_ordering, dt));
}

// 9. Orientation equivariance of the L1 filters; line-graph filter is not
//    equivariant on the triangle witness.
void criterion_9() {
    flowgen::Rng rng(1009);
    const int total = 20;
    int ok_count = 0;
    double worst = 0.0;
    for (int t = 0; t < total; ++t) {
        const Graph g = testsup::random_connected_graph(rng, 3, 12, 2.0);
        const int e = testsup::uniform_int(rng, 0, g.num_edges() - 1);
        const Graph g2 = g.with_flipped_edge(e);
        const EdgeSignal f(testsup::random_signal(rng, g.num_edges()));
        EdgeSignal f2 = f;
        f2[static_cast<std::size_t>(e)] = -f2[static_cast<std::size_t>(e)];
        const NodeSignal phi(testsup::random_signal(rng, g.num_nodes()));
        const double alpha = 0.1 + 3.0 * rng.uniform();
        const double mu = 0.4 * rng.uniform() /
                          std::max(spectral::lambda_max_estimate(edge_laplacian(g)), 1e-9);

        const auto check_pair = [&](const EdgeSignal& a, const EdgeSignal& b) {
            double m = 0.0;
            for (std::size_t i = 0; i < a.size(); ++i) {
                const double want = i == static_cast<std::size_t>(e) ? -a[i] : a[i];
                m = std::max(m, std::abs(b[i] - want));
            }
            return m;
        };
        const double d1 = check_pair(filters::flow_denoise(g, f, alpha),
                                     filters::flow_denoise(g2, f2, alpha));
        const double d2 = check_pair(filters::flow_smooth(g, f, mu, 7),
                                     filters::flow_smooth(g2, f2, mu, 7));
        const double d3 = check_pair(filters::flow_denoise_sources(g, f, alpha, phi),
                                     filters::flow_denoise_sources(g2, f2, alpha, phi));
        const double m = std::max({d1, d2, d3});
        worst = std::max(worst, m);
        if (m <= 1e-10) ++ok_count;
    }

    // witness: the line-graph filter feels the orientation flip
    const Graph tri = testsup::cyclic_triangle();
    const Graph lg1 = line_graph(tri);
    const Graph lg2 = line_graph(tri.with_flipped_edge(0));
    const EdgeSignal circ(std::vector<double>{1.0, 1.0, 1.0});
    EdgeSignal circ2 = circ;
    circ2[0] = -circ2[0];
    const NodeSignal out1 =
        filters::node_denoise(lg1, NodeSignal(circ.values), 1.0);
    const NodeSignal out2 =
        filters::node_denoise(lg2, NodeSignal(circ2.values), 1.0);
    double witness = 0.0;
    for (std::size_t i = 0; i < out1.size(); ++i) {
        const double want = i == 0 ? -out1[i] : out1[i];
        witness = std::max(witness, std::abs(out2[i] - want));
    }

    const bool ok = ok_count == total && witness > 1e-3;
    report_line(9, ok,
                fmt("orientation equivariance of L1 filters on %d/%d flips "
                    "(worst %.2e <= 1e-10); line-graph witness deviates %.3f (> 1e-3)",
                    ok_count, total, worst, witness));
}

// 10. flow_denoise on 10,000 edges at rel_tol 1e-8 in < 1 s.
void criterion_10() {
    flowgen::Rng rng(1010);
    const Graph g = testsup::random_graph_with_edges(rng, 3000, 10000);
    const SparseMatrix l1 = edge_laplacian(g);
    const SparseMatrix eye = SparseMatrix::identity(g.num_edges());
    const std::vector<double> coef{1.0, 1.0};
    const std::vector<const SparseMatrix*> mats{&eye, &l1};
    const SparseMatrix reg = SparseMatrix::linear_combination(coef, mats);
    const std::vector<double> f = testsup::random_signal(rng, g.num_edges());

    spectral::SolveOptions opts;
    opts.rel_tol = 1e-8;
    const auto t0 = Clock::now();
    const std::vector<double> x = spectral::spd_solve(reg, f, opts);
    const double dt = seconds_since(t0);

    std::vector<double> res(f.size());
    kernels::spmv(reg, x, res);
    kernels::axpy(-1.0, f, res);
    const double rel = kernels::norm2(res) / kernels::norm2(f);
    report_line(10, dt < 1.0 && rel <= 1e-8,
                fmt("flow denoise solve on %d edges: %.3f s (< 1 s), residual %.2e "
                    "(<= 1e-8 relative)",
                    g.num_edges(), dt, rel));
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all 10 criteria passed\n");
    return 0;
}
