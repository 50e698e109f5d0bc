#include "dgtor/linalg/sparse_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace dgtor {

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix dimensions do not match");
  IntegerMatrix r(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        const Integer& b = other(k, j);
        if (b != 0) r(i, j) += a * b;
      }
    }
  }
  return r;
}

SparseMatrix SparseMatrix::from_entries(std::size_t rows, std::size_t cols, const std::vector<MatrixEntry>& entries) {
  std::vector<std::vector<Term>> cols_terms(cols);
  for (const auto& e : entries) {
    if (e.row >= rows || e.col >= cols) throw std::out_of_range("matrix entry out of range");
    cols_terms[e.col].push_back({e.row, e.value});
  }
  SparseMatrix m(rows, cols);
  for (std::size_t c = 0; c < cols; ++c) m.columns_[c] = SparseVector::from_terms(std::move(cols_terms[c]));
  return m;
}

SparseMatrix SparseMatrix::from_columns(std::size_t rows, std::vector<SparseVector> columns) {
  SparseMatrix m;
  m.rows_ = rows;
  for (const auto& c : columns) {
    if (!c.is_zero() && c.max_index() >= rows) throw std::out_of_range("column entry out of range");
  }
  m.columns_ = std::move(columns);
  return m;
}

SparseMatrix SparseMatrix::from_dense(const IntegerMatrix& d) {
  SparseMatrix m(d.rows(), d.cols());
  for (std::size_t c = 0; c < d.cols(); ++c) {
    std::vector<Term> t;
    for (std::size_t r = 0; r < d.rows(); ++r) {
      if (d(r, c) != 0) t.push_back({r, d(r, c)});
    }
    m.columns_[c] = SparseVector::from_terms(std::move(t));
  }
  return m;
}

std::vector<MatrixEntry> SparseMatrix::entries() const {
  std::vector<MatrixEntry> out;
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    for (const auto& t : columns_[c]) out.push_back({t.index, c, t.coeff});
  }
  std::sort(out.begin(), out.end(), [](const MatrixEntry& a, const MatrixEntry& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  return out;
}

bool SparseMatrix::is_zero() const {
  for (const auto& c : columns_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

SparseVector SparseMatrix::apply(const SparseVector& v) const {
  VectorAccumulator acc;
  for (const auto& t : v) {
    if (t.index >= columns_.size()) throw std::out_of_range("vector index out of range");
    acc.add(columns_[t.index], t.coeff);
  }
  return acc.take();
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& other) const {
  if (cols() != other.rows()) throw std::invalid_argument("matrix dimensions do not match");
  SparseMatrix r(rows_, other.cols());
  for (std::size_t c = 0; c < other.cols(); ++c) r.columns_[c] = apply(other.columns_[c]);
  return r;
}

SparseMatrix SparseMatrix::reduced(const CoefficientRing& ring) const {
  SparseMatrix r = *this;
  for (auto& c : r.columns_) c = c.reduced(ring);
  return r;
}

SparseMatrix SparseMatrix::transpose() const {
  std::vector<MatrixEntry> t;
  for (const auto& e : entries()) t.push_back({e.col, e.row, e.value});
  return from_entries(cols(), rows_, t);
}

IntegerMatrix SparseMatrix::to_dense() const {
  IntegerMatrix d(rows_, cols());
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    for (const auto& t : columns_[c]) d(t.index, c) = t.coeff;
  }
  return d;
}

bool SparseMatrix::operator==(const SparseMatrix& other) const {
  return rows_ == other.rows_ && columns_ == other.columns_;
}

}  // namespace dgtor
