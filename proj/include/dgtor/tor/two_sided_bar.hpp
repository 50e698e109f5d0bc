#pragma once

#include "dgtor/bar/bar.hpp"

#include <unordered_map>

namespace dgtor {

class TwoSidedBar;
using TsbPtr = std::shared_ptr<const TwoSidedBar>;

/// B(X, A, Y) = X (x) BA (x) Y for algebra maps X <- A -> Y. The cell
/// x (x) [a1|...|ap] (x) y has word length p and total degree
/// |x| + sum(|ai| - 1) + |y|. Besides the internal differentials,
///   d contains   (-1)^{|x|} x phi(a1) (x) [a2|...|ap] (x) y
///          and  -(-1)^{|x| + |[a1|...|a(p-1)]|} x (x) [a1|...|a(p-1)] (x) phi(ap) y.
class TwoSidedBar {
 public:
  struct Cell {
    Index x;
    Index word;
    Index y;
  };

  /// `left` is A -> X and `right` is A -> Y. A must be connected with no
  /// elements in degree 1 and X, Y connected (NotOneConnected); both maps
  /// must be DGA maps (NotAChainMap). A negative cutoff means the largest
  /// one the inputs support; an explicit cutoff needs X and Y through it
  /// and A one degree further (CutoffTooSmall).
  static TsbPtr make(const AlgebraMorphism& left, const AlgebraMorphism& right, int cutoff = -1);

  const AlgebraMorphism& left_map() const { return left_; }
  const AlgebraMorphism& right_map() const { return right_; }
  const AlgebraPtr& left() const { return left_.target; }
  const AlgebraPtr& base() const { return left_.source; }
  const AlgebraPtr& right() const { return right_.target; }
  const BarPtr& bar() const { return bar_; }
  const BasisPtr& basis() const { return complex_.basis; }
  const ChainComplex& complex() const { return complex_; }
  int cutoff() const { return complex_.basis->cutoff(); }

  const Cell& cell(Index i) const { return cells_[i]; }
  int length(Index i) const { return static_cast<int>(bar_->word(cells_[i].word).size()); }
  const std::vector<int>& lengths() const { return lengths_; }
  std::optional<Index> find(Index x, Index word, Index y) const;
  /// x (x) w (x) y for vectors in X, BA and Y; terms above the cutoff are dropped.
  SparseVector element(const SparseVector& x, const SparseVector& w, const SparseVector& y) const;
  /// True when X, A and Y all have zero differential, so that the
  /// differential lowers the word length by exactly one.
  bool has_zero_differentials() const { return zero_differentials_; }

 private:
  AlgebraMorphism left_, right_;
  BarPtr bar_;
  ChainComplex complex_;
  std::vector<Cell> cells_;
  std::vector<int> lengths_;
  std::unordered_map<std::uint64_t, Index> index_;
  std::uint64_t stride_w_ = 0, stride_x_ = 0;
  bool zero_differentials_ = false;
};

inline TsbPtr two_sided_bar(const AlgebraMorphism& left, const AlgebraMorphism& right, int cutoff = -1) {
  return TwoSidedBar::make(left, right, cutoff);
}

}  // namespace dgtor
