#pragma once

#include "dgtor/tor/tor_map.hpp"

#include <array>
#include <map>

namespace dgtor {

/// Products of homology generators: table[{n1, i, n2, j}] holds the
/// coordinates in degree n1 + n2 of generator i of degree n1 times
/// generator j of degree n2, for n1 + n2 within the tracked range.
struct RingStructure {
  TorPtr tor;
  int max_degree = 0;
  Coordinates unit;
  std::map<std::array<std::size_t, 4>, Coordinates> table;

  const Coordinates& product(int n1, Index i, int n2, Index j) const;
  /// Bilinear extension to arbitrary classes.
  Coordinates multiply(int n1, const Coordinates& a, int n2, const Coordinates& b) const;
};

/// Structure constants of a chain-level product on the cells of tor's complex.
RingStructure ring_structure(const TorPtr& tor, const Multiplication& chain_product);

/// Unitality, graded commutativity ab = (-1)^{|a||b|} ba and associativity
/// on every tracked pair and triple of generators.
CheckReport check_ring_axioms(const RingStructure& r);

/// Describes the first entry where the two tables differ on their common range.
std::optional<std::string> first_difference(const RingStructure& a, const RingStructure& b);

/// Tor_{A1}(X1, Y1) (x) Tor_{A2}(X2, Y2) -> Tor_{A1 (x) A2}(X1 (x) X2, Y1 (x) Y2),
/// interleaving bar words by shuffles.
struct ExteriorProduct {
  TorPtr left;
  TorPtr right;
  TensorAlgebra x, a, y;
  TsbPtr bar;
  TorPtr target;

  /// Image of the tensor of two cells in the target two-sided bar.
  SparseVector on_cells(Index c1, Index c2) const;
  Coordinates apply(int n1, const Coordinates& a1, int n2, const Coordinates& a2) const;
};

/// Throws CutoffMismatch unless both sides share the ring and the cutoff.
ExteriorProduct exterior_product(const TorPtr& t1, const TorPtr& t2);

/// Exterior product followed by Tor_mu(mu, mu), evaluated on cells without
/// building the two-sided bar of the tensor squares. Throws NotCommutative.
RingStructure classical_product(const TorPtr& tor);

/// The shuffle product on B(X, A, Y) computed directly. Throws NotCommutative.
RingStructure shuffle_product(const TorPtr& tor);

/// The product carried by the complex itself (the Koszul oracle).
RingStructure oracle_product(const TorPtr& tor);

/// The product on Tor_{OBA}(OBX, OBY) assembled from the exterior product,
/// Tor_gamma inverted on homology, Tor_{O nabla} and the Phi = B mu leg
/// with constant right homotopies, transported to Tor_A(X, Y) along the
/// counits. Tracks degrees below `cutoff`; throws CutoffTooLarge above 4.
RingStructure pipeline_product_smoke(const TorPtr& tor, int cutoff = 4);

}  // namespace dgtor
