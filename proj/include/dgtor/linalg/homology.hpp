#pragma once

#include "dgtor/linalg/coefficient_ring.hpp"
#include "dgtor/linalg/sparse_matrix.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace dgtor {

/// ker(d_out) / im(d_in) as a direct sum of cyclic modules.
///
/// `generators` lists representative cycles: first one per torsion factor
/// (in the order of `torsion`), then one per free summand. Over a prime
/// field the entries are residues in [0, p); over the rationals they are
/// scaled to be integral.
struct ModuleSummary {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;
  std::vector<SparseVector> generators;

  std::size_t rank() const { return free_rank + torsion.size(); }
  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
};

/// Homology coordinates. Integral except over the rationals.
using Coordinates = std::vector<Rational>;

/// Homology at one spot of a three-term sequence, with the data needed to
/// express further cycles in the chosen generators.
class HomologyGroup {
 public:
  HomologyGroup() = default;
  /// Throws CompositionNotZero if d_out * d_in != 0 over `ring`.
  static HomologyGroup compute(const SparseMatrix& d_in, const SparseMatrix& d_out, const CoefficientRing& ring);

  const ModuleSummary& summary() const;
  const CoefficientRing& ring() const;
  std::size_t chain_dimension() const;
  std::size_t rank() const { return summary().rank(); }

  /// Order of each generator: the invariant factor for torsion classes,
  /// p over F_p, and 0 for free classes over Z or Q.
  std::vector<Integer> orders() const;

  /// Throws NotACycle if d_out * cycle != 0.
  Coordinates coordinates(const SparseVector& cycle) const;

  /// Reduces each coordinate modulo the order of its generator.
  Coordinates normalize(Coordinates c) const;

  /// The cycle sum_i c_i * generator_i (coordinates must be integral).
  SparseVector cycle_of(const Coordinates& c) const;

  struct Impl;

 private:
  std::shared_ptr<const Impl> impl_;
};

ModuleSummary homology_at(const SparseMatrix& d_in, const SparseMatrix& d_out, const CoefficientRing& ring);

Coordinates coordinates_in_homology(const SparseVector& cycle, const SparseMatrix& d_in, const SparseMatrix& d_out,
                                    const CoefficientRing& ring);

/// Reduces a coordinate vector modulo per-entry orders (0 = no reduction).
Coordinates reduce_coordinates(Coordinates c, const std::vector<Integer>& orders);

/// Finds x with sum_j a[i][j] x_j = b_i modulo moduli[i] (0 = exact).
/// Over a prime field all arithmetic is mod p; over the rationals it is exact.
std::optional<Coordinates> solve_modular_system(const std::vector<Coordinates>& a, const Coordinates& b,
                                                const std::vector<Integer>& moduli, const CoefficientRing& ring);

}  // namespace dgtor
