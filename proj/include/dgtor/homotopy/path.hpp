#pragma once

#include "dgtor/algebra/homotopy_checks.hpp"

namespace dgtor {

/// Cochains on a subdivided interval with n edges: vertices w0..wn are
/// orthogonal idempotents summing to the unit, edges e1..en of degree 1
/// satisfy w(j-1) ej = ej = ej wj, all other products vanish, and
/// d w0 = -e1, d wi = ei - e(i+1), d wn = en. Not augmented.
/// For n = 1 the basis is {v0, v1, e}; for n = 2 it is the pullback of two
/// copies over an endpoint, named (v0,0), (v1,v0), (0,v1), (e,0), (0,e).
AlgebraPtr quiver_algebra(int edges, int cutoff);
inline AlgebraPtr interval_algebra(int cutoff) { return quiver_algebra(1, cutoff); }

class PathObject;
using PathPtr = std::shared_ptr<const PathObject>;

/// k + (K (x) A-bar) for K the algebra of an interval with n edges:
/// n = 1 is the path object, n = 2 the double-path object and n = 3 the
/// triple-path object. Products are (k (x) a)(k' (x) b) = (-1)^{|a||k'|} kk' (x) ab.
class PathObject {
 public:
  static PathPtr make(const AlgebraPtr& a, int edges = 1);

  const AlgebraPtr& base() const { return base_; }
  const AlgebraPtr& algebra() const { return algebra_; }
  const AlgebraPtr& quiver() const { return quiver_; }
  int edges() const { return edges_; }

  Index vertex(int i) const { return static_cast<Index>(i); }
  Index edge(int j) const { return static_cast<Index>(edges_ + j); }
  /// Basis index of k (x) a for a in the augmentation ideal.
  std::optional<Index> index(Index k, Index a) const;
  std::pair<Index, Index> factors(Index i) const { return factors_[i]; }
  /// sum_i coeffs of k (x) v for v in the augmentation ideal (unit components dropped).
  SparseVector pair(Index k, const SparseVector& v) const;

  /// Evaluation at vertex i: unit to unit, wi (x) a to a, the rest to zero.
  AlgebraMorphism projection(int i) const;
  /// Restriction to edge j as a map onto the path object `p`.
  AlgebraMorphism segment(int j, const PathPtr& p) const;
  /// The constant paths a -> sum_i wi (x) a.
  AlgebraMorphism section() const;

 private:
  AlgebraPtr base_, algebra_, quiver_;
  int edges_ = 1;
  std::vector<std::pair<Index, Index>> factors_;  // entry 0 is unused
  std::unordered_map<std::uint64_t, Index> index_;
};

inline PathPtr path_object(const AlgebraPtr& a) { return PathObject::make(a, 1); }
inline PathPtr double_path(const AlgebraPtr& a) { return PathObject::make(a, 2); }
inline PathPtr triple_path(const AlgebraPtr& a) { return PathObject::make(a, 3); }

/// a -> v0 (x) f0(a) - e (x) h(a) + v1 (x) f1(a). Throws InvalidHomotopy
/// when `validate` is set and the homotopy fails its axioms.
AlgebraMorphism right_homotopy(const DgaHomotopy& h, const PathPtr& p, bool validate = true);

/// r : PA (x) PA -> D(A (x) A), induced by the quotient of I (x) I onto the
/// double interval.
struct SquareToDouble {
  PathPtr path;         // PA
  TensorAlgebra square; // PA (x) PA
  TensorAlgebra base;   // A (x) A
  PathPtr target;       // D(A (x) A)
  AlgebraMorphism map;
};
SquareToDouble square_to_double(const AlgebraPtr& a);

}  // namespace dgtor
