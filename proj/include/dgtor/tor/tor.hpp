#pragma once

#include "dgtor/tor/two_sided_bar.hpp"

namespace dgtor {

/// A complex computing Tor: cells graded by total degree, each carrying a
/// homological degree p. When `bigraded` is set the differential sends
/// cells of length p to cells of length p - 1 only. `product` is an
/// optional chain-level multiplication on cells.
struct TorComplex {
  ChainComplex complex;
  std::vector<int> length;
  bool bigraded = false;
  Multiplication product;
};

/// Homology of one bigraded piece; `cells` lists the global indices in the
/// order used by `group`. p is -1 for an ungraded piece.
struct TorPiece {
  int p = -1;
  HomologyGroup group;
  std::vector<Index> cells;
};

/// Tor in one total degree, as the direct sum of its pieces. Generators are
/// listed piece by piece, each piece in the order of its HomologyGroup.
class TorGroup {
 public:
  TorGroup() = default;
  TorGroup(int degree, std::vector<TorPiece> pieces);

  int degree() const { return degree_; }
  const std::vector<TorPiece>& pieces() const { return pieces_; }
  std::size_t rank() const { return generators_.size(); }
  const std::vector<SparseVector>& generators() const { return generators_; }
  const std::vector<Integer>& orders() const { return orders_; }
  /// Homological degree of each generator (-1 when ungraded).
  const std::vector<int>& generator_length() const { return generator_length_; }
  ModuleSummary summary() const;
  /// Throws NotACycle.
  Coordinates coordinates(const SparseVector& cycle) const;
  Coordinates normalize(Coordinates c) const { return reduce_coordinates(std::move(c), orders_); }
  SparseVector cycle_of(const Coordinates& c) const;

 private:
  int degree_ = 0;
  std::vector<TorPiece> pieces_;
  std::vector<SparseVector> generators_;
  std::vector<Integer> orders_;
  std::vector<int> generator_length_;
  std::vector<std::size_t> offset_;
  std::unordered_map<Index, std::pair<std::size_t, Index>> where_;  // cell -> (piece, local index)
};

class BigradedTor;
using TorPtr = std::shared_ptr<const BigradedTor>;

/// Tor in total degrees 0 .. cutoff - 1, split by homological degree when
/// the complex is bigraded.
class BigradedTor {
 public:
  /// `max_degree` (if nonnegative) limits the computed degrees.
  static TorPtr compute(TorComplex c, const CoefficientRing& ring, TsbPtr bar = nullptr, int max_degree = -1);

  const CoefficientRing& ring() const { return ring_; }
  bool bigraded() const { return complex_.bigraded; }
  const TorComplex& complex() const { return complex_; }
  const BasisPtr& basis() const { return complex_.complex.basis; }
  /// The two-sided bar this was computed from, if any.
  const TsbPtr& bar() const { return bar_; }
  /// Highest computed total degree.
  int max_degree() const { return static_cast<int>(degrees_.size()) - 1; }
  /// Throws CutoffTooSmall for degrees that were not computed.
  const TorGroup& degree(int n) const;
  /// Tor^{p,q}, of total degree q - p. Throws std::logic_error when not bigraded.
  ModuleSummary bidegree(int p, int q) const;
  /// Number of cyclic summands per total degree (the dimension over a field).
  std::vector<std::size_t> ranks() const;
  /// Cell 0 is taken to be the unit cycle.
  Coordinates unit() const;

 private:
  CoefficientRing ring_ = CoefficientRing::integers();
  TorComplex complex_;
  TsbPtr bar_;
  std::vector<TorGroup> degrees_;
};

/// Tor_A(X, Y) through the two-sided bar, bigraded when the inputs have zero differential.
TorPtr tor_bigraded(const TsbPtr& bar, const CoefficientRing& ring, int max_degree = -1);

}  // namespace dgtor
