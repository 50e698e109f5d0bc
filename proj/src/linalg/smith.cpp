#include "dgtor/linalg/smith.hpp"

#include <utility>

namespace dgtor {
namespace {

Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

// Elimination state: m = left * original * right, with the inverses kept in
// step so that original = left_inverse * m * right_inverse.
class SmithEngine {
 public:
  SmithEngine(const IntegerMatrix& m, bool track_inverses)
      : m_(m), rows_(m.rows()), cols_(m.cols()), track_(track_inverses) {
    left_ = IntegerMatrix::identity(rows_);
    right_ = IntegerMatrix::identity(cols_);
    if (track_) {
      left_inv_ = IntegerMatrix::identity(rows_);
      right_inv_ = IntegerMatrix::identity(cols_);
    }
  }

  void run() {
    std::size_t limit = std::min(rows_, cols_);
    for (std::size_t t = 0; t < limit; ++t) {
      if (!move_min_to(t)) break;
      while (true) {
        bool clean = clear_row_and_column(t);
        if (!clean) {
          move_min_to(t);
          continue;
        }
        // Pivot must divide every remaining entry.
        std::size_t bad_row = rows_;
        for (std::size_t i = t + 1; i < rows_ && bad_row == rows_; ++i) {
          for (std::size_t j = t + 1; j < cols_; ++j) {
            if (m_(i, j) != 0 && m_(i, j) % m_(t, t) != 0) {
              bad_row = i;
              break;
            }
          }
        }
        if (bad_row == rows_) break;
        add_row(t, bad_row, 1);
      }
      if (m_(t, t) < 0) negate_row(t);
      divisors_.push_back(m_(t, t));
    }
  }

  IntegerMatrix left_, right_, left_inv_, right_inv_;
  std::vector<Integer> divisors_;

 private:
  // Minimal |entry| in the trailing submatrix, ties to lowest row then column.
  bool move_min_to(std::size_t t) {
    std::size_t best_r = rows_, best_c = cols_;
    Integer best;
    for (std::size_t i = t; i < rows_; ++i) {
      for (std::size_t j = t; j < cols_; ++j) {
        const Integer& v = m_(i, j);
        if (v == 0) continue;
        Integer a = abs_value(v);
        if (best_r == rows_ || a < best) {
          best = a;
          best_r = i;
          best_c = j;
          if (best == 1) goto found;
        }
      }
    }
    if (best_r == rows_) return false;
  found:
    if (best_r != t) swap_rows(t, best_r);
    if (best_c != t) swap_cols(t, best_c);
    return true;
  }

  bool clear_row_and_column(std::size_t t) {
    bool clean = true;
    const Integer pivot = m_(t, t);
    for (std::size_t i = t + 1; i < rows_; ++i) {
      if (m_(i, t) == 0) continue;
      Integer q = m_(i, t) / pivot;
      if (q != 0) add_row(i, t, -q);
      if (m_(i, t) != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < cols_; ++j) {
      if (m_(t, j) == 0) continue;
      Integer q = m_(t, j) / pivot;
      if (q != 0) add_col(j, t, -q);
      if (m_(t, j) != 0) clean = false;
    }
    return clean;
  }

  // row_dst += c * row_src
  void add_row(std::size_t dst, std::size_t src, const Integer& c) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (m_(src, j) != 0) m_(dst, j) += c * m_(src, j);
    }
    for (std::size_t j = 0; j < rows_; ++j) {
      if (left_(src, j) != 0) left_(dst, j) += c * left_(src, j);
    }
    if (track_) {
      // inverse: col_src -= c * col_dst
      for (std::size_t i = 0; i < rows_; ++i) {
        if (left_inv_(i, dst) != 0) left_inv_(i, src) -= c * left_inv_(i, dst);
      }
    }
  }

  // col_dst += c * col_src
  void add_col(std::size_t dst, std::size_t src, const Integer& c) {
    for (std::size_t i = 0; i < rows_; ++i) {
      if (m_(i, src) != 0) m_(i, dst) += c * m_(i, src);
    }
    for (std::size_t i = 0; i < cols_; ++i) {
      if (right_(i, src) != 0) right_(i, dst) += c * right_(i, src);
    }
    if (track_) {
      // inverse: row_src -= c * row_dst
      for (std::size_t j = 0; j < cols_; ++j) {
        if (right_inv_(dst, j) != 0) right_inv_(src, j) -= c * right_inv_(dst, j);
      }
    }
  }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols_; ++j) std::swap(m_(a, j), m_(b, j));
    for (std::size_t j = 0; j < rows_; ++j) std::swap(left_(a, j), left_(b, j));
    if (track_) {
      for (std::size_t i = 0; i < rows_; ++i) std::swap(left_inv_(i, a), left_inv_(i, b));
    }
  }

  void swap_cols(std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < rows_; ++i) std::swap(m_(i, a), m_(i, b));
    for (std::size_t i = 0; i < cols_; ++i) std::swap(right_(i, a), right_(i, b));
    if (track_) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(right_inv_(a, j), right_inv_(b, j));
    }
  }

  void negate_row(std::size_t t) {
    for (std::size_t j = 0; j < cols_; ++j) m_(t, j) = -m_(t, j);
    for (std::size_t j = 0; j < rows_; ++j) left_(t, j) = -left_(t, j);
    if (track_) {
      for (std::size_t i = 0; i < rows_; ++i) left_inv_(i, t) = -left_inv_(i, t);
    }
  }

  IntegerMatrix m_;
  std::size_t rows_, cols_;
  bool track_;
};

}  // namespace

SmithForm smith_normal_form(const SparseMatrix& m) {
  SmithEngine e(m.to_dense(), false);
  e.run();
  return SmithForm{std::move(e.left_), std::move(e.right_), std::move(e.divisors_)};
}

SmithDecomposition smith_decomposition(const IntegerMatrix& m) {
  SmithEngine e(m, true);
  e.run();
  return SmithDecomposition{std::move(e.left_), std::move(e.left_inv_), std::move(e.right_), std::move(e.right_inv_),
                            std::move(e.divisors_)};
}

std::optional<std::vector<Integer>> solve_integer(const IntegerMatrix& a, const std::vector<Integer>& b) {
  // a = L^-1 D R^-1, so a x = b  <=>  D (R^-1 x) = L b.
  SmithDecomposition s = smith_decomposition(a);
  std::vector<Integer> lb(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.rows(); ++k) {
      if (s.left(i, k) != 0) lb[i] += s.left(i, k) * b[k];
    }
  }
  std::vector<Integer> w(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i < s.divisors.size()) {
      if (lb[i] % s.divisors[i] != 0) return std::nullopt;
      w[i] = lb[i] / s.divisors[i];
    } else if (lb[i] != 0) {
      return std::nullopt;
    }
  }
  std::vector<Integer> x(a.cols());
  for (std::size_t i = 0; i < a.cols(); ++i) {
    for (std::size_t k = 0; k < s.divisors.size(); ++k) {
      if (s.right(i, k) != 0) x[i] += s.right(i, k) * w[k];
    }
  }
  return x;
}

}  // namespace dgtor
