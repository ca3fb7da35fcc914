#ifndef KOSZULKIT_SPARSE_HPP
#define KOSZULKIT_SPARSE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "koszulkit/field.hpp"

namespace koszulkit {

/// Sparse rational vector: (column, nonzero value) pairs sorted by column.
using SparseVecQ = std::vector<std::pair<std::uint32_t, mpq_class>>;

/// Drops zeros, sorts by column, merges duplicate columns.
SparseVecQ normalize_sparse_vec(SparseVecQ v);

/// Sparse rational matrix in canonical coordinate form: entries sorted by
/// (row, col), no duplicates, no stored zeros.
class SparseMatrix {
  public:
    struct Entry {
        std::uint32_t row;
        std::uint32_t col;
        mpq_class value;
    };

    SparseMatrix() = default;
    SparseMatrix(std::uint32_t rows, std::uint32_t cols) : rows_(rows), cols_(cols) {}

    std::uint32_t rows() const { return rows_; }
    std::uint32_t cols() const { return cols_; }
    const std::vector<Entry>& entries() const { return entries_; }

    /// Accumulates a coefficient; call finalize() before use.
    void add(std::uint32_t row, std::uint32_t col, mpq_class value);
    void add_row(std::uint32_t row, const SparseVecQ& v);

    /// Sorts, merges duplicates, drops zeros, validates index ranges.
    void finalize();

    SparseVecQ row(std::uint32_t r) const;
    std::vector<SparseVecQ> row_vectors() const;
    SparseMatrix transpose() const;

    static SparseMatrix identity(std::uint32_t n);
    static SparseMatrix from_rows(const std::vector<SparseVecQ>& rows, std::uint32_t cols);

    bool operator==(const SparseMatrix& other) const;

  private:
    std::uint32_t rows_ = 0;
    std::uint32_t cols_ = 0;
    std::vector<Entry> entries_;
    bool finalized_ = true;
};

/// Small dense rational matrix; used for metrics and representation
/// candidates, not for the elimination kernel.
class DenseQ {
  public:
    DenseQ() = default;
    DenseQ(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    mpq_class& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const mpq_class& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;

    static DenseQ identity(std::size_t n);
    DenseQ operator*(const DenseQ& rhs) const;
    DenseQ operator-(const DenseQ& rhs) const;
    bool operator==(const DenseQ& rhs) const { return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_; }

    /// Inverse via Gauss-Jordan; throws InputError when singular.
    DenseQ inverse() const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<mpq_class> data_;
};

}  // namespace koszulkit

#endif
