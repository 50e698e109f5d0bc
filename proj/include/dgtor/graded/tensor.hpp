#pragma once

#include "dgtor/graded/graded_map.hpp"

#include <unordered_map>

namespace dgtor {

class TensorBasis;
using TensorPtr = std::shared_ptr<const TensorBasis>;

/// Basis of pairs x (x) y with |x| + |y| <= cutoff, ordered by total degree
/// and then by (index of x, index of y).
class TensorBasis {
 public:
  /// Throws CutoffMismatch unless both factors share a cutoff.
  static TensorPtr make(BasisPtr left, BasisPtr right);

  const BasisPtr& basis() const { return basis_; }
  const BasisPtr& left() const { return left_; }
  const BasisPtr& right() const { return right_; }

  std::optional<Index> index(Index a, Index b) const;
  std::pair<Index, Index> factors(Index i) const { return factors_[i]; }

 private:
  BasisPtr left_, right_, basis_;
  std::vector<std::pair<Index, Index>> factors_;
  std::unordered_map<std::uint64_t, Index> index_;
};

/// x (x) y as a vector in the tensor basis (dropping pairs above the cutoff).
SparseVector tensor_vectors(const TensorBasis& t, const SparseVector& x, const SparseVector& y);

/// (f (x) g)(x (x) y) = (-1)^{|g||x|} f(x) (x) g(y).
GradedMap tensor_maps(const GradedMap& f, const GradedMap& g, const TensorPtr& source, const TensorPtr& target);

}  // namespace dgtor
