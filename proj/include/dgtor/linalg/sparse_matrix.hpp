#pragma once

#include "dgtor/linalg/sparse_vector.hpp"

#include <vector>

namespace dgtor {

struct MatrixEntry {
  Index row;
  Index col;
  Integer value;
};

/// Dense integer matrix used for transforms and small eliminations.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static IntegerMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  IntegerMatrix operator*(const IntegerMatrix& other) const;
  bool operator==(const IntegerMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Integer matrix stored by columns; each column is a SparseVector of row indices.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}
  /// Duplicate (row, col) pairs are summed; zero results are dropped.
  static SparseMatrix from_entries(std::size_t rows, std::size_t cols, const std::vector<MatrixEntry>& entries);
  static SparseMatrix from_columns(std::size_t rows, std::vector<SparseVector> columns);
  static SparseMatrix from_dense(const IntegerMatrix& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  const SparseVector& column(Index c) const { return columns_[c]; }
  const std::vector<SparseVector>& columns() const { return columns_; }
  std::vector<MatrixEntry> entries() const;
  Integer at(Index r, Index c) const { return columns_[c].coefficient(r); }
  bool is_zero() const;

  SparseVector apply(const SparseVector& v) const;
  SparseMatrix operator*(const SparseMatrix& other) const;
  SparseMatrix reduced(const CoefficientRing& ring) const;
  SparseMatrix transpose() const;
  IntegerMatrix to_dense() const;
  bool operator==(const SparseMatrix& other) const;

 private:
  std::size_t rows_ = 0;
  std::vector<SparseVector> columns_;
};

}  // namespace dgtor
