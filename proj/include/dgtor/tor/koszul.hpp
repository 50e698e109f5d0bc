#pragma once

#include "dgtor/algebra/free_gca.hpp"
#include "dgtor/tor/tor.hpp"

namespace dgtor {

class KoszulComplex;
using KoszulPtr = std::shared_ptr<const KoszulComplex>;

/// X (x) Y (x) Lambda[e_g] for a polynomial algebra A = k[g], with e_g of
/// total degree |g| - 1 and d e_g = phi_X(g) (x) 1 - 1 (x) phi_Y(g). It
/// computes Tor_A(X, Y) because the Koszul resolution is free over A.
class KoszulComplex {
 public:
  struct Cell {
    Index x;
    Index y;
    std::uint32_t mask;  // bit k set when e_k is present
  };

  /// Throws OddGeneratorInBase for exterior generators of A and
  /// CutoffTooSmall when X or Y stop below the cutoff.
  static KoszulPtr make(const FreeGcaPtr& base, const AlgebraMorphism& left, const AlgebraMorphism& right,
                        int cutoff = -1);

  const FreeGcaPtr& base() const { return base_; }
  const BasisPtr& basis() const { return complex_.complex.basis; }
  const TorComplex& tor_complex() const { return complex_; }
  const Cell& cell(Index i) const { return cells_[i]; }
  std::optional<Index> find(Index x, Index y, std::uint32_t mask) const;

 private:
  FreeGcaPtr base_;
  AlgebraMorphism left_, right_;
  TorComplex complex_;
  std::vector<Cell> cells_;
  std::vector<int> weight_;  // |e_k|
  std::unordered_map<std::uint64_t, Index> index_;
  std::uint64_t stride_ = 0;
};

/// Tor_A(X, Y) through the Koszul complex, with its product.
TorPtr koszul_oracle(const FreeGcaPtr& base, const AlgebraMorphism& left, const AlgebraMorphism& right,
                     const CoefficientRing& ring, int max_degree = -1);

}  // namespace dgtor
