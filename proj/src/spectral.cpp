#include "edgeflow/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "edgeflow/errors.hpp"
#include "edgeflow/kernels.hpp"

namespace edgeflow::spectral {

EigenDecomposition eig_sym(const SparseMatrix& m) {
    if (!m.is_symmetric()) throw NotSymmetricError("eig_sym: input is not symmetric");
    DenseEig d = jacobi_eigensystem(to_dense(m));
    return EigenDecomposition{std::move(d.values), std::move(d.vectors)};
}

namespace {

// Conjugate gradients with diagonal (Jacobi) preconditioning. All inner
// products go through the deterministic chunked kernels, so the iteration
// path does not depend on the thread count.
std::vector<double> pcg_solve(const SparseMatrix& m, std::span<const double> rhs,
                              double rel_tol, long max_iterations) {
    const std::size_t n = rhs.size();
    std::vector<double> diag = m.diagonal();
    for (double& d : diag) d = (d > 0.0) ? 1.0 / d : 1.0;

    const double bnorm = kernels::norm2(rhs);
    std::vector<double> x(n, 0.0);
    if (bnorm == 0.0) return x;
    const double target = rel_tol * bnorm;

    std::vector<double> r(rhs.begin(), rhs.end());
    std::vector<double> z(n), p(n), ap(n);
    for (std::size_t i = 0; i < n; ++i) z[i] = diag[i] * r[i];
    p = z;
    double rz = kernels::dot(r, z);

    if (max_iterations <= 0) max_iterations = std::max<long>(1000, 20 * static_cast<long>(n));
    for (long it = 0; it < max_iterations; ++it) {
        kernels::spmv(m, p, ap);
        const double pap = kernels::dot(p, ap);
        if (pap <= 0.0)
            throw NotPositiveDefiniteError("cg breakdown: matrix is not positive definite");
        const double alpha = rz / pap;
        kernels::axpy(alpha, p, x);
        kernels::axpy(-alpha, ap, r);
        if (kernels::norm2(r) <= target) {
            // recursive residual can drift; confirm with the true residual
            kernels::spmv(m, x, ap);
            for (std::size_t i = 0; i < n; ++i) ap[i] = rhs[i] - ap[i];
            if (kernels::norm2(ap) <= target) return x;
            r = ap;
        }
        for (std::size_t i = 0; i < n; ++i) z[i] = diag[i] * r[i];
        const double rz_next = kernels::dot(r, z);
        const double beta = rz_next / rz;
        rz = rz_next;
        for (std::size_t i = 0; i < n; ++i) p[i] = z[i] + beta * p[i];
    }
    throw ConvergenceError("cg did not reach the requested tolerance", max_iterations);
}

std::vector<double> dense_spd_solve(const DenseMatrix& a, const DenseCholesky& chol,
                                    std::span<const double> rhs, double rel_tol) {
    std::vector<double> x = chol.solve(rhs);

    const double bnorm = kernels::norm2(rhs);
    if (bnorm == 0.0) return x;
    // Iterative refinement until the promised residual bound holds.
    for (int pass = 0; pass < 4; ++pass) {
        std::vector<double> r = matvec(a, x);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = rhs[i] - r[i];
        if (kernels::norm2(r) <= rel_tol * bnorm) return x;
        std::vector<double> dx = chol.solve(r);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] += dx[i];
    }
    std::vector<double> r = matvec(a, x);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = rhs[i] - r[i];
    if (kernels::norm2(r) <= rel_tol * bnorm) return x;
    throw ConvergenceError("dense solve could not meet the residual bound", 4);
}

}  // namespace

SpdSolver::SpdSolver(const SparseMatrix& m, const SolveOptions& opts)
    : opts_(opts), n_(m.rows()) {
    if (m.rows() != m.cols()) throw DimensionError("spd_solve: matrix not square");
    if (n_ <= opts_.dense_threshold) {
        dense_ = to_dense(m);
        chol_.emplace(*dense_);
    } else {
        sparse_ = m;
    }
}

std::vector<double> SpdSolver::solve(std::span<const double> rhs) const {
    if (rhs.size() != static_cast<std::size_t>(n_))
        throw DimensionError("spd_solve: rhs length mismatch");
    if (chol_) return dense_spd_solve(*dense_, *chol_, rhs, opts_.rel_tol);
    return pcg_solve(*sparse_, rhs, opts_.rel_tol, opts_.max_iterations);
}

std::vector<double> spd_solve(const SparseMatrix& m, std::span<const double> rhs,
                              const SolveOptions& opts) {
    return SpdSolver(m, opts).solve(rhs);
}

std::vector<double> pinv_apply(const EigenDecomposition& eig, std::span<const double> v,
                               double rank_tol) {
    const int n = eig.dimension();
    if (v.size() != static_cast<std::size_t>(n))
        throw DimensionError("pinv_apply: vector length mismatch");
    double lam_max = 0.0;
    for (double l : eig.eigenvalues) lam_max = std::max(lam_max, std::abs(l));
    const double cut = rank_tol * lam_max;

    std::vector<double> out(static_cast<std::size_t>(n), 0.0);
    for (int j = 0; j < n; ++j) {
        const double lam = eig.eigenvalues[j];
        if (std::abs(lam) <= cut) continue;
        double coef = 0.0;
        for (int i = 0; i < n; ++i) coef += eig.eigenvectors(i, j) * v[i];
        coef /= lam;
        for (int i = 0; i < n; ++i) out[i] += coef * eig.eigenvectors(i, j);
    }
    return out;
}

std::vector<double> pinv_apply(const SparseMatrix& m, std::span<const double> v,
                               double rank_tol) {
    return pinv_apply(eig_sym(m), v, rank_tol);
}

int kernel_dimension(const EigenDecomposition& eig, double rank_tol) {
    double lam_max = 0.0;
    for (double l : eig.eigenvalues) lam_max = std::max(lam_max, std::abs(l));
    const double cut = rank_tol * lam_max;
    int dim = 0;
    for (double l : eig.eigenvalues)
        if (std::abs(l) <= cut) ++dim;
    return dim;
}

double lambda_max_estimate(const SparseMatrix& m, double tol) {
    if (m.rows() != m.cols()) throw DimensionError("lambda_max: matrix not square");
    const std::size_t n = static_cast<std::size_t>(m.rows());
    if (n == 0) return 0.0;

    // Fixed pseudo-random start so the estimate is reproducible and not
    // accidentally orthogonal to the top eigenvector.
    std::vector<double> x(n);
    std::uint64_t state = 0x243f6a8885a308d3ULL;
    for (std::size_t i = 0; i < n; ++i) {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        z ^= z >> 31;
        x[i] = static_cast<double>(z >> 11) * 0x1.0p-53 - 0.5;
    }
    double nx = kernels::norm2(x);
    if (nx == 0.0) return 0.0;
    kernels::scale(1.0 / nx, x);

    std::vector<double> y(n);
    double lambda = 0.0;
    for (long it = 0; it < 100000; ++it) {
        kernels::spmv(m, x, y);
        const double next = kernels::dot(x, y);
        const double ny = kernels::norm2(y);
        if (ny == 0.0) return 0.0;  // x landed in the kernel
        kernels::scale(1.0 / ny, y);
        x.swap(y);
        if (std::abs(next - lambda) <= tol * std::max(1.0, std::abs(next))) return next;
        lambda = next;
    }
    throw ConvergenceError("power iteration did not converge", 100000);
}

}  // namespace edgeflow::spectral
