#include "edgeflow/sparse.hpp"

#include <algorithm>
#include <cmath>

#include "edgeflow/errors.hpp"

namespace edgeflow {

SparseMatrix::SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw DimensionError("negative matrix dimension");
    row_ptr_.assign(static_cast<std::size_t>(rows) + 1, 0);
}

SparseMatrix::SparseMatrix(int rows, int cols, std::vector<int> row_ptr,
                           std::vector<int> col_idx, std::vector<double> values)
    : rows_(rows),
      cols_(cols),
      row_ptr_(std::move(row_ptr)),
      col_idx_(std::move(col_idx)),
      values_(std::move(values)) {}

template <typename T, typename ToDouble>
SparseMatrix SparseMatrix::assemble(int rows, int cols, std::vector<T> entries,
                                    ToDouble to_double) {
    if (rows < 0 || cols < 0) throw DimensionError("negative matrix dimension");
    for (const auto& t : entries) {
        if (t.row < 0 || t.row >= rows || t.col < 0 || t.col >= cols)
            throw DimensionError("triplet index outside matrix dimensions");
    }
    std::sort(entries.begin(), entries.end(), [](const T& a, const T& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });

    std::vector<int> row_ptr(static_cast<std::size_t>(rows) + 1, 0);
    std::vector<int> col_idx;
    std::vector<double> values;
    col_idx.reserve(entries.size());
    values.reserve(entries.size());

    std::size_t i = 0;
    while (i < entries.size()) {
        const int r = entries[i].row;
        const int c = entries[i].col;
        auto acc = entries[i].value;
        ++i;
        while (i < entries.size() && entries[i].row == r && entries[i].col == c) {
            acc += entries[i].value;
            ++i;
        }
        const double v = to_double(acc);
        if (v != 0.0) {
            col_idx.push_back(c);
            values.push_back(v);
            ++row_ptr[static_cast<std::size_t>(r) + 1];
        }
    }
    for (int r = 0; r < rows; ++r) row_ptr[r + 1] += row_ptr[r];
    return SparseMatrix(rows, cols, std::move(row_ptr), std::move(col_idx), std::move(values));
}

SparseMatrix SparseMatrix::from_triplets(int rows, int cols, std::vector<Triplet> entries) {
    return assemble(rows, cols, std::move(entries), [](double v) { return v; });
}

SparseMatrix SparseMatrix::from_int_triplets(int rows, int cols,
                                             std::vector<IntTriplet> entries) {
    return assemble(rows, cols, std::move(entries),
                    [](std::int64_t v) { return static_cast<double>(v); });
}

SparseMatrix SparseMatrix::identity(int n) {
    std::vector<IntTriplet> t;
    t.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) t.push_back({i, i, 1});
    return from_int_triplets(n, n, std::move(t));
}

SparseMatrix SparseMatrix::linear_combination(std::span<const double> coeffs,
                                              std::span<const SparseMatrix* const> mats) {
    if (coeffs.size() != mats.size())
        throw DimensionError("linear_combination: coefficient/matrix count mismatch");
    if (mats.empty()) throw DimensionError("linear_combination: empty input");
    const int r = mats[0]->rows();
    const int c = mats[0]->cols();
    std::vector<Triplet> all;
    for (std::size_t k = 0; k < mats.size(); ++k) {
        const SparseMatrix& m = *mats[k];
        if (m.rows() != r || m.cols() != c)
            throw DimensionError("linear_combination: dimension mismatch");
        if (coeffs[k] == 0.0) continue;
        for (int i = 0; i < m.rows(); ++i) {
            for (int p = m.row_ptr_[i]; p < m.row_ptr_[i + 1]; ++p) {
                all.push_back({i, m.col_idx_[p], coeffs[k] * m.values_[p]});
            }
        }
    }
    return from_triplets(r, c, std::move(all));
}

SparseMatrix SparseMatrix::transposed() const {
    std::vector<Triplet> t;
    t.reserve(values_.size());
    for (int i = 0; i < rows_; ++i) {
        for (int p = row_ptr_[i]; p < row_ptr_[i + 1]; ++p) {
            t.push_back({col_idx_[p], i, values_[p]});
        }
    }
    return from_triplets(cols_, rows_, std::move(t));
}

bool SparseMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    return *this == transposed();
}

std::vector<Triplet> SparseMatrix::triplets() const {
    std::vector<Triplet> t;
    t.reserve(values_.size());
    for (int i = 0; i < rows_; ++i) {
        for (int p = row_ptr_[i]; p < row_ptr_[i + 1]; ++p) {
            t.push_back({i, col_idx_[p], values_[p]});
        }
    }
    return t;
}

std::vector<double> SparseMatrix::diagonal() const {
    const int n = std::min(rows_, cols_);
    std::vector<double> d(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
        for (int p = row_ptr_[i]; p < row_ptr_[i + 1]; ++p) {
            if (col_idx_[p] == i) d[i] = values_[p];
        }
    }
    return d;
}

double SparseMatrix::frobenius_norm() const {
    double s = 0.0;
    for (double v : values_) s += v * v;
    return std::sqrt(s);
}

double SparseMatrix::at(int row, int col) const {
    if (row < 0 || row >= rows_ || col < 0 || col >= cols_)
        throw DimensionError("at(): index outside matrix");
    for (int p = row_ptr_[row]; p < row_ptr_[row + 1]; ++p) {
        if (col_idx_[p] == col) return values_[p];
    }
    return 0.0;
}

}  // namespace edgeflow
