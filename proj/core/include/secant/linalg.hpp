#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "secant/error.hpp"
#include "secant/scalar.hpp"

namespace secant {

/// Row-major dense matrix over an exact scalar type.
template <class F>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, const F& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<F> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw InvalidInput("DenseMatrix: entry count does not match dimensions");
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  F& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<const F> entries() const { return data_; }
  std::span<const F> row(std::size_t i) const { return std::span<const F>(data_).subspan(i * cols_, cols_); }

  DenseMatrix transpose() const {
    std::vector<F> t;
    t.reserve(data_.size());
    for (std::size_t j = 0; j < cols_; ++j) {
      for (std::size_t i = 0; i < rows_; ++i) t.push_back((*this)(i, j));
    }
    return DenseMatrix(cols_, rows_, std::move(t));
  }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> data_;
};

/// Exact rank over Q: denominators are cleared row by row, then fraction-free
/// (Bareiss) elimination runs over Z.
std::size_t rank(const DenseMatrix<Rational>& m);
/// Rank over F_p by ordinary Gaussian elimination.
std::size_t rank(const DenseMatrix<ModP>& m);
/// Bareiss determinant of a square integer-valued rational matrix.
Rational determinant(const DenseMatrix<Rational>& m);

/// A sparse row: strictly increasing column indices with nonzero residues.
using SparseRow = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

/// Rows over F_p sharing a column universe [0, columns).
class SparseRowSet {
 public:
  SparseRowSet(std::size_t columns, std::uint32_t prime);

  /// Sorts, merges duplicates and drops zeros before storing.
  void add_row(SparseRow row);

  std::size_t columns() const { return columns_; }
  std::uint32_t prime() const { return prime_; }
  std::size_t row_count() const { return rows_.size(); }
  const std::vector<SparseRow>& rows() const { return rows_; }

 private:
  std::size_t columns_;
  std::uint32_t prime_;
  std::vector<SparseRow> rows_;
};

/// Incremental echelon form over F_p. Pivots are the first nonzero column
/// of each reduced row, so the pivot set depends only on row order.
class SparseEchelon {
 public:
  explicit SparseEchelon(std::uint32_t prime);

  /// Reduces the row against existing pivots; returns true if it enlarged the span.
  bool insert(SparseRow row);
  std::size_t rank() const { return pivots_.size(); }
  /// Pivot columns in insertion order.
  std::vector<std::uint32_t> pivot_columns() const;

 private:
  Residues field_;
  // Pivot column -> row normalized to leading coefficient 1.
  std::unordered_map<std::uint32_t, SparseRow> pivots_;
  std::vector<std::uint32_t> insertion_order_;
};

/// dim span(rows) over F_p.
std::size_t row_space_dimension(const SparseRowSet& rows, std::uint32_t prime);

}  // namespace secant
