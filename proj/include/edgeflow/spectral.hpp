#pragma once

#include <optional>
#include <span>
#include <vector>

#include "edgeflow/dense.hpp"
#include "edgeflow/sparse.hpp"

namespace edgeflow::spectral {

// Eigenvalues below rank_tol * lambda_max count as zero. Shared across the
// repo so "lambda = 0" means one thing everywhere.
inline constexpr double default_rank_tol = 1e-8;
inline constexpr double default_rel_tol = 1e-10;

// Systems up to this size are solved by dense Cholesky; larger ones by
// diagonally preconditioned conjugate gradients.
inline constexpr int default_dense_threshold = 512;

struct EigenDecomposition {
    std::vector<double> eigenvalues;  // ascending
    DenseMatrix eigenvectors;         // orthonormal, column i pairs with eigenvalues[i]

    int dimension() const { return static_cast<int>(eigenvalues.size()); }
};

// Full symmetric eigendecomposition. Throws NotSymmetricError when the input
// is not symmetric as stored, ConvergenceError if the sweep budget runs out.
EigenDecomposition eig_sym(const SparseMatrix& m);

struct SolveOptions {
    double rel_tol = default_rel_tol;
    int dense_threshold = default_dense_threshold;
    long max_iterations = 0;  // 0: choose from the system size
};

// Solve M x = rhs for symmetric positive definite M with
// ||M x - rhs||_2 <= rel_tol * ||rhs||_2 guaranteed on return.
std::vector<double> spd_solve(const SparseMatrix& m, std::span<const double> rhs,
                              const SolveOptions& opts = {});

// Factor-once, solve-many form of spd_solve: small systems keep a Cholesky
// factorization, large ones keep the matrix for preconditioned CG. solve()
// returns exactly what spd_solve would for the same matrix and options.
class SpdSolver {
public:
    explicit SpdSolver(const SparseMatrix& m, const SolveOptions& opts = {});

    std::vector<double> solve(std::span<const double> rhs) const;
    int size() const { return n_; }

private:
    SolveOptions opts_;
    int n_;
    std::optional<DenseMatrix> dense_;
    std::optional<DenseCholesky> chol_;
    std::optional<SparseMatrix> sparse_;
};

// M^+ v for symmetric M: eigencomponents with |lambda| > rank_tol * |lambda|_max
// are inverted, the rest are zeroed.
std::vector<double> pinv_apply(const SparseMatrix& m, std::span<const double> v,
                               double rank_tol = default_rank_tol);
std::vector<double> pinv_apply(const EigenDecomposition& eig, std::span<const double> v,
                               double rank_tol = default_rank_tol);

// Number of eigenvalues treated as zero under rank_tol.
int kernel_dimension(const EigenDecomposition& eig, double rank_tol = default_rank_tol);

// Largest eigenvalue by power iteration (matrix must be symmetric positive
// semidefinite). Accuracy ~tol, which is plenty for stability bounds.
double lambda_max_estimate(const SparseMatrix& m, double tol = 1e-6);

}  // namespace edgeflow::spectral
