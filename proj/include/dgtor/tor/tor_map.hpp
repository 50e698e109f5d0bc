#pragma once

#include "dgtor/algebra/homotopy_checks.hpp"
#include "dgtor/tor/tor.hpp"

namespace dgtor {

/// A map of Tor groups by total degree: matrices[n][r][c] is coordinate r
/// of the image of source generator c in degree n.
struct TorMap {
  TorPtr source;
  TorPtr target;
  std::vector<std::vector<Coordinates>> matrices;

  int max_degree() const { return static_cast<int>(matrices.size()) - 1; }
  Coordinates apply(int n, const Coordinates& c) const;
  /// True when every degree is an isomorphism: equal invariants and every
  /// target generator is hit.
  bool is_isomorphism() const;
  bool operator==(const TorMap& other) const { return matrices == other.matrices; }
};

/// x (x) [a1|...|ap] (x) y -> u(x) (x) [f a1|...|f ap] (x) v(y).
GradedMap two_sided_bar_map(const TwoSidedBar& source, const TwoSidedBar& target, const AlgebraMorphism& f,
                            const AlgebraMorphism& u, const AlgebraMorphism& v);

/// The map on Tor induced by a chain map between the underlying complexes.
TorMap induced_tor_map(const GradedMap& chain, const TorPtr& source, const TorPtr& target);

/// Tor_f(u, v) for f : A' -> A, u : X' -> X, v : Y' -> Y. Throws
/// SquaresDoNotCommute unless u phi_X' = phi_X f and v phi_Y' = phi_Y f.
TorMap tor_map(const TorPtr& source, const TorPtr& target, const AlgebraMorphism& f, const AlgebraMorphism& u,
               const AlgebraMorphism& v);

/// g o f. Throws std::invalid_argument if the Tors do not match.
TorMap compose(const TorMap& g, const TorMap& f);

/// Some class mapping to c in degree n; throws std::domain_error if none exists.
Coordinates preimage(const TorMap& m, int n, const Coordinates& c);

/// Tor_f(u, v; h_X, h_Y) = Tor_f(pi1, pi1) o Tor_id(pi0, pi0)^-1 o Tor_id(u, v),
/// through the right homotopies A' -> PX and A' -> PY. The homotopies go
/// from u phi_X' to phi_X f and from v phi_Y' to phi_Y f; throws
/// InvalidHomotopy otherwise.
TorMap tor_map_with_homotopy(const TorPtr& source, const TorPtr& target, const AlgebraMorphism& f,
                             const AlgebraMorphism& u, const AlgebraMorphism& v, const DgaHomotopy& h_x,
                             const DgaHomotopy& h_y);

}  // namespace dgtor
