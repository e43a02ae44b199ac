#pragma once

#include <cstddef>
#include <span>

#include "edgeflow/sparse.hpp"

// Vector and sparse-matrix kernels. The functions in edgeflow::kernels are
// the production path: OpenMP-parallel when compiled with OpenMP, and
// deterministic regardless of thread count. Determinism is achieved by
//   - parallelizing spmv over rows (each output entry is one thread's work),
//   - reducing dot products over fixed-size chunks whose partial sums are
//     combined serially in chunk order.
// The same chunked order is used when OpenMP is disabled, so results do not
// depend on the build flavor either.
//
// edgeflow::kernels::serial holds the straightforward loop implementations.
// They are the reference the parallel kernels are tested and benchmarked
// against; production code never calls them.

namespace edgeflow::kernels {

inline constexpr std::size_t chunk_size = 2048;

// y = A x
void spmv(const SparseMatrix& a, std::span<const double> x, std::span<double> y);

double dot(std::span<const double> x, std::span<const double> y);
double norm2(std::span<const double> x);

// y += alpha * x
void axpy(double alpha, std::span<const double> x, std::span<double> y);
void scale(double alpha, std::span<double> x);
void copy(std::span<const double> src, std::span<double> dst);

namespace serial {

void spmv(const SparseMatrix& a, std::span<const double> x, std::span<double> y);
double dot(std::span<const double> x, std::span<const double> y);
double norm2(std::span<const double> x);
void axpy(double alpha, std::span<const double> x, std::span<double> y);

}  // namespace serial

}  // namespace edgeflow::kernels
