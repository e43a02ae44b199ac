#pragma once

#include <span>
#include <vector>

#include "edgeflow/sparse.hpp"

namespace edgeflow {

// Small dense row-major matrix. Used by the dense solver paths and the
// symmetric eigendecomposition; everything large stays sparse.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(int rows, int cols);

    static DenseMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const {
        return data_[static_cast<std::size_t>(i) * cols_ + j];
    }

    const std::vector<double>& data() const { return data_; }

    DenseMatrix transposed() const;
    double frobenius_norm() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> data_;
};

DenseMatrix to_dense(const SparseMatrix& m);
DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);
std::vector<double> matvec(const DenseMatrix& a, std::span<const double> x);

struct DenseEig {
    std::vector<double> values;  // ascending
    DenseMatrix vectors;         // column i pairs with values[i]
};

// Cyclic Jacobi rotations on a symmetric matrix. Deterministic; eigenvalues
// returned ascending with a stable sort, so ties keep sweep order.
// Throws ConvergenceError if the off-diagonal mass does not vanish within
// max_sweeps sweeps.
DenseEig jacobi_eigensystem(DenseMatrix a, int max_sweeps = 64);

// LL^T factorization of a dense SPD matrix, reusable across right-hand sides.
class DenseCholesky {
public:
    explicit DenseCholesky(const DenseMatrix& a);  // throws NotPositiveDefiniteError

    std::vector<double> solve(std::span<const double> b) const;
    int dimension() const { return n_; }

private:
    int n_ = 0;
    DenseMatrix l_;
};

}  // namespace edgeflow
