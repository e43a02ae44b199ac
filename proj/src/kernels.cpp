#include "edgeflow/kernels.hpp"

#include <cmath>

#include "edgeflow/errors.hpp"

namespace edgeflow::kernels {

namespace {

void check_spmv_dims(const SparseMatrix& a, std::span<const double> x, std::span<double> y) {
    if (x.size() != static_cast<std::size_t>(a.cols()) ||
        y.size() != static_cast<std::size_t>(a.rows()))
        throw DimensionError("spmv: vector length does not match matrix");
}

}  // namespace

void spmv(const SparseMatrix& a, std::span<const double> x, std::span<double> y) {
    check_spmv_dims(a, x, y);
    const auto& rp = a.row_ptr();
    const auto& ci = a.col_idx();
    const auto& va = a.values();
    const int rows = a.rows();
#pragma omp parallel for schedule(static)
    for (int i = 0; i < rows; ++i) {
        double acc = 0.0;
        for (int p = rp[i]; p < rp[i + 1]; ++p) acc += va[p] * x[ci[p]];
        y[i] = acc;
    }
}

double dot(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw DimensionError("dot: length mismatch");
    const std::size_t n = x.size();
    const std::size_t nchunks = (n + chunk_size - 1) / chunk_size;
    if (nchunks <= 1) return serial::dot(x, y);

    std::vector<double> partial(nchunks, 0.0);
    const auto chunks = static_cast<long>(nchunks);
#pragma omp parallel for schedule(static)
    for (long c = 0; c < chunks; ++c) {
        const std::size_t lo = static_cast<std::size_t>(c) * chunk_size;
        const std::size_t hi = std::min(n, lo + chunk_size);
        double acc = 0.0;
        for (std::size_t i = lo; i < hi; ++i) acc += x[i] * y[i];
        partial[c] = acc;
    }
    double total = 0.0;
    for (double p : partial) total += p;
    return total;
}

double norm2(std::span<const double> x) { return std::sqrt(dot(x, x)); }

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
    if (x.size() != y.size()) throw DimensionError("axpy: length mismatch");
    const auto n = static_cast<long>(x.size());
#pragma omp parallel for schedule(static)
    for (long i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scale(double alpha, std::span<double> x) {
    const auto n = static_cast<long>(x.size());
#pragma omp parallel for schedule(static)
    for (long i = 0; i < n; ++i) x[i] *= alpha;
}

void copy(std::span<const double> src, std::span<double> dst) {
    if (src.size() != dst.size()) throw DimensionError("copy: length mismatch");
    const auto n = static_cast<long>(src.size());
#pragma omp parallel for schedule(static)
    for (long i = 0; i < n; ++i) dst[i] = src[i];
}

namespace serial {

void spmv(const SparseMatrix& a, std::span<const double> x, std::span<double> y) {
    check_spmv_dims(a, x, y);
    const auto& rp = a.row_ptr();
    const auto& ci = a.col_idx();
    const auto& va = a.values();
    for (int i = 0; i < a.rows(); ++i) {
        double acc = 0.0;
        for (int p = rp[i]; p < rp[i + 1]; ++p) acc += va[p] * x[ci[p]];
        y[i] = acc;
    }
}

double dot(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw DimensionError("dot: length mismatch");
    double acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
    return acc;
}

double norm2(std::span<const double> x) { return std::sqrt(dot(x, x)); }

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
    if (x.size() != y.size()) throw DimensionError("axpy: length mismatch");
    for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

}  // namespace serial

}  // namespace edgeflow::kernels
