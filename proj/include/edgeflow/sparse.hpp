#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace edgeflow {

struct Triplet {
    int row = 0;
    int col = 0;
    double value = 0.0;
};

// Integer triplets are used while assembling the structural operators
// (incidence, Laplacians, line-graph matrices). Accumulation happens in
// 64-bit integers, so cancellation is exact and a zero is really a zero.
struct IntTriplet {
    int row = 0;
    int col = 0;
    std::int64_t value = 0;
};

// Sparse real matrix in CSR form. Entries are stored sorted by (row, col)
// with no explicit zeros, so two matrices with equal entries compare equal
// and serialized output is byte-stable. Immutable after construction.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(int rows, int cols);

    // Duplicate triplets are summed; entries that sum to exactly zero are dropped.
    static SparseMatrix from_triplets(int rows, int cols, std::vector<Triplet> entries);
    static SparseMatrix from_int_triplets(int rows, int cols, std::vector<IntTriplet> entries);
    static SparseMatrix identity(int n);

    // sum_i coeffs[i] * mats[i]; all matrices must share dimensions.
    static SparseMatrix linear_combination(std::span<const double> coeffs,
                                           std::span<const SparseMatrix* const> mats);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::size_t nonzeros() const { return values_.size(); }

    const std::vector<int>& row_ptr() const { return row_ptr_; }
    const std::vector<int>& col_idx() const { return col_idx_; }
    const std::vector<double>& values() const { return values_; }

    SparseMatrix transposed() const;

    // Exact test: square, and entry (i,j) == entry (j,i) for every stored entry.
    bool is_symmetric() const;

    std::vector<Triplet> triplets() const;  // sorted by (row, col)
    std::vector<double> diagonal() const;
    double frobenius_norm() const;

    double at(int row, int col) const;  // 0.0 when not stored

    bool operator==(const SparseMatrix& other) const = default;

private:
    SparseMatrix(int rows, int cols, std::vector<int> row_ptr, std::vector<int> col_idx,
                 std::vector<double> values);

    template <typename T, typename ToDouble>
    static SparseMatrix assemble(int rows, int cols, std::vector<T> entries, ToDouble to_double);

    int rows_ = 0;
    int cols_ = 0;
    std::vector<int> row_ptr_ = {0};
    std::vector<int> col_idx_;
    std::vector<double> values_;
};

}  // namespace edgeflow
