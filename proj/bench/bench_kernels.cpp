// Times the OpenMP kernels against the serial reference implementations and
// checks they agree. Run with --quick for a fast smoke pass (used by ctest).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "edgeflow/flowgen.hpp"
#include "edgeflow/kernels.hpp"
#include "edgeflow/sparse.hpp"

namespace {

using edgeflow::SparseMatrix;
using edgeflow::Triplet;
namespace kernels = edgeflow::kernels;

SparseMatrix banded_spd(int n, int band) {
    std::vector<Triplet> t;
    t.reserve(static_cast<std::size_t>(n) * (2 * band + 1));
    for (int i = 0; i < n; ++i) {
        t.push_back({i, i, 4.0});
        for (int d = 1; d <= band; ++d) {
            if (i + d < n) {
                t.push_back({i, i + d, -1.0 / d});
                t.push_back({i + d, i, -1.0 / d});
            }
        }
    }
    return SparseMatrix::from_triplets(n, n, std::move(t));
}

std::vector<double> random_vector(std::size_t n, std::uint64_t seed) {
    edgeflow::flowgen::Rng rng(seed);
    std::vector<double> v(n);
    for (double& x : v) x = rng.normal();
    return v;
}

template <typename F>
double time_best_ms(int reps, F&& body) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        body();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

void print_row(const char* name, int n, double serial_ms, double parallel_ms,
               double diff) {
    std::printf("%-12s %10d %12.3f %12.3f %9.2fx %12.3e\n", name, n, serial_ms,
                parallel_ms, serial_ms / std::max(parallel_ms, 1e-9), diff);
}

}  // namespace

int main(int argc, char** argv) {
    bool quick = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--quick") == 0) quick = true;

    const int n = quick ? 20000 : 400000;
    const int band = 5;
    const int reps = quick ? 2 : 5;

#ifdef _OPENMP
    std::printf("openmp enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("openmp disabled (serial build)\n");
#endif
    std::printf("%-12s %10s %12s %12s %10s %12s\n", "kernel", "n", "serial ms",
                "parallel ms", "speedup", "max |diff|");

    const SparseMatrix a = banded_spd(n, band);
    const std::vector<double> x = random_vector(static_cast<std::size_t>(n), 1);
    const std::vector<double> y = random_vector(static_cast<std::size_t>(n), 2);

    {
        std::vector<double> out_s(x.size()), out_p(x.size());
        const double ts = time_best_ms(reps, [&] { kernels::serial::spmv(a, x, out_s); });
        const double tp = time_best_ms(reps, [&] { kernels::spmv(a, x, out_p); });
        print_row("spmv", n, ts, tp, max_abs_diff(out_s, out_p));
        if (max_abs_diff(out_s, out_p) != 0.0) {
            std::printf("FAIL: parallel spmv differs from serial\n");
            return 1;
        }
    }
    {
        double ds = 0.0, dp = 0.0;
        const double ts = time_best_ms(reps, [&] { ds = kernels::serial::dot(x, y); });
        const double tp = time_best_ms(reps, [&] { dp = kernels::dot(x, y); });
        const double rel = std::abs(ds - dp) / std::max(1.0, std::abs(ds));
        print_row("dot", n, ts, tp, rel);
        // chunked vs naive summation: same value up to roundoff
        if (rel > 1e-12) {
            std::printf("FAIL: chunked dot drifted from serial by %.3e\n", rel);
            return 1;
        }
    }
    {
        std::vector<double> ys = y, yp = y;
        const double ts = time_best_ms(reps, [&] { kernels::serial::axpy(0.5, x, ys); });
        const double tp = time_best_ms(reps, [&] { kernels::axpy(0.5, x, yp); });
        // timing loops re-apply axpy, so both sides accumulated identically
        print_row("axpy", n, ts, tp, max_abs_diff(ys, yp));
        if (max_abs_diff(ys, yp) != 0.0) {
            std::printf("FAIL: parallel axpy differs from serial\n");
            return 1;
        }
    }

    std::printf("ok\n");
    return 0;
}
