#include "edgeflow/dense.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "edgeflow/errors.hpp"

namespace edgeflow {

DenseMatrix::DenseMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw DimensionError("negative matrix dimension");
    data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0.0);
}

DenseMatrix DenseMatrix::identity(int n) {
    DenseMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

DenseMatrix DenseMatrix::transposed() const {
    DenseMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

double DenseMatrix::frobenius_norm() const {
    double s = 0.0;
    for (double v : data_) s += v * v;
    return std::sqrt(s);
}

DenseMatrix to_dense(const SparseMatrix& m) {
    DenseMatrix d(m.rows(), m.cols());
    const auto& rp = m.row_ptr();
    const auto& ci = m.col_idx();
    const auto& va = m.values();
    for (int i = 0; i < m.rows(); ++i)
        for (int p = rp[i]; p < rp[i + 1]; ++p) d(i, ci[p]) = va[p];
    return d;
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("multiply: inner dimension mismatch");
    DenseMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

std::vector<double> matvec(const DenseMatrix& a, std::span<const double> x) {
    if (x.size() != static_cast<std::size_t>(a.cols()))
        throw DimensionError("matvec: length mismatch");
    std::vector<double> y(static_cast<std::size_t>(a.rows()), 0.0);
    for (int i = 0; i < a.rows(); ++i) {
        double acc = 0.0;
        for (int j = 0; j < a.cols(); ++j) acc += a(i, j) * x[j];
        y[i] = acc;
    }
    return y;
}

DenseEig jacobi_eigensystem(DenseMatrix a, int max_sweeps) {
    if (a.rows() != a.cols()) throw DimensionError("jacobi: matrix not square");
    const int n = a.rows();
    DenseEig out;
    if (n == 0) {
        out.vectors = DenseMatrix(0, 0);
        return out;
    }

    DenseMatrix v = DenseMatrix::identity(n);
    double norm = a.frobenius_norm();
    const double stop = 1e-15 * std::max(1.0, norm);

    auto offdiag_norm = [&] {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) s += a(i, j) * a(i, j);
        return std::sqrt(2.0 * s);
    };

    int sweep = 0;
    for (; sweep < max_sweeps; ++sweep) {
        if (offdiag_norm() <= stop) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double app = a(p, p);
                const double aqq = a(q, q);
                const double theta = (aqq - app) / (2.0 * apq);
                const double t = (theta >= 0.0)
                                     ? 1.0 / (theta + std::sqrt(1.0 + theta * theta))
                                     : 1.0 / (theta - std::sqrt(1.0 + theta * theta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                for (int k = 0; k < n; ++k) {
                    const double akp = a(k, p);
                    const double akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = a(p, k);
                    const double aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    const double vkp = v(k, p);
                    const double vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }
    if (sweep == max_sweeps && offdiag_norm() > stop)
        throw ConvergenceError("jacobi eigensolver did not converge", sweep);

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return a(i, i) < a(j, j); });

    out.values.resize(static_cast<std::size_t>(n));
    out.vectors = DenseMatrix(n, n);
    for (int j = 0; j < n; ++j) {
        out.values[j] = a(order[j], order[j]);
        for (int i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
    }
    return out;
}

DenseCholesky::DenseCholesky(const DenseMatrix& a) : n_(a.rows()), l_(a.rows(), a.cols()) {
    if (a.rows() != a.cols()) throw DimensionError("cholesky: matrix not square");
    for (int j = 0; j < n_; ++j) {
        double d = a(j, j);
        for (int k = 0; k < j; ++k) d -= l_(j, k) * l_(j, k);
        if (d <= 0.0)
            throw NotPositiveDefiniteError("cholesky pivot " + std::to_string(j) +
                                           " is not positive");
        const double ljj = std::sqrt(d);
        l_(j, j) = ljj;
        for (int i = j + 1; i < n_; ++i) {
            double s = a(i, j);
            for (int k = 0; k < j; ++k) s -= l_(i, k) * l_(j, k);
            l_(i, j) = s / ljj;
        }
    }
}

std::vector<double> DenseCholesky::solve(std::span<const double> b) const {
    if (b.size() != static_cast<std::size_t>(n_))
        throw DimensionError("cholesky solve: length mismatch");
    std::vector<double> x(b.begin(), b.end());
    // forward: L y = b
    for (int i = 0; i < n_; ++i) {
        double s = x[i];
        for (int k = 0; k < i; ++k) s -= l_(i, k) * x[k];
        x[i] = s / l_(i, i);
    }
    // backward: L^T x = y
    for (int i = n_ - 1; i >= 0; --i) {
        double s = x[i];
        for (int k = i + 1; k < n_; ++k) s -= l_(k, i) * x[k];
        x[i] = s / l_(i, i);
    }
    return x;
}

}  // namespace edgeflow
