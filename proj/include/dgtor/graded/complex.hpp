#pragma once

#include "dgtor/graded/tensor.hpp"
#include "dgtor/linalg/homology.hpp"

#include <functional>

namespace dgtor {

/// Cochain complex: the differential has degree +1.
struct ChainComplex {
  BasisPtr basis;
  GradedMap differential;

  /// Throws DegreeMismatch unless the differential is an endomorphism of degree 1.
  static ChainComplex make(BasisPtr basis, GradedMap differential);
  /// True when d o d vanishes on every tracked element.
  bool squares_to_zero() const;
};

struct TensorComplex {
  ChainComplex complex;
  TensorPtr tensor;
};

/// d(x (x) y) = dx (x) y + (-1)^{|x|} x (x) dy.
TensorComplex tensor(const ChainComplex& a, const ChainComplex& b);

/// d(f) = d_A f - (-1)^{|f|} f d_C for f : C -> A.
GradedMap hom_differential(const GradedMap& f, const ChainComplex& source, const ChainComplex& target);

struct TensorTerm {
  Index left;
  Index right;
  Integer coeff;
};
using Comultiplication = std::function<std::vector<TensorTerm>(Index)>;
using Multiplication = std::function<SparseVector(Index, Index)>;

/// Bilinear extension of a multiplication on basis elements.
SparseVector multiply_vectors(const Multiplication& mu, const SparseVector& a, const SparseVector& b);

/// (f cup g)(c) = sum (-1)^{|g||c'|} f(c') g(c'') over the terms c' (x) c'' of delta(c).
GradedMap cup(const GradedMap& f, const GradedMap& g, const Comultiplication& delta, const Multiplication& mu);

/// Homology groups in degrees 0 .. min(max_degree, cutoff - 1). The top
/// tracked degree is excluded because its outgoing differential is not
/// known; asking for it throws CutoffTooSmall.
std::vector<HomologyGroup> complex_homology(const ChainComplex& c, const CoefficientRing& ring, int max_degree);
std::vector<HomologyGroup> complex_homology(const ChainComplex& c, const CoefficientRing& ring);

/// Homology in a single degree. Generators and coordinates use indices
/// local to that degree.
HomologyGroup homology_in_degree(const ChainComplex& c, const CoefficientRing& ring, int degree);

/// Restriction of a vector to degree q, reindexed locally, and back.
SparseVector to_local(const GradedBasis& b, int q, const SparseVector& v);
SparseVector to_global(const GradedBasis& b, int q, const SparseVector& v);

/// Matrix of the map induced by a degree-0 chain map on homology in
/// degree q: entry [i][j] is coordinate i of the image of generator j.
std::vector<Coordinates> induced_on_homology(const GradedMap& f, const HomologyGroup& source,
                                             const HomologyGroup& target, int q);

/// True when f induces isomorphisms H^q(source) -> H^q(target) for every
/// q <= max_degree: the groups have the same invariants and every target
/// generator is hit.
bool is_quasi_isomorphism(const GradedMap& f, const ChainComplex& source, const ChainComplex& target,
                          const CoefficientRing& ring, int max_degree);

}  // namespace dgtor
