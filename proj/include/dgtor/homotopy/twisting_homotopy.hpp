#pragma once

#include "dgtor/algebra/homotopy_checks.hpp"
#include "dgtor/bar/bar.hpp"

namespace dgtor {

/// Degree 0 map x : C -> A with e x = e, x(1) = 1 and
/// d(x) = t0 cup x - x cup t1.
struct TwistingHomotopy {
  TwistingCochain t0;
  TwistingCochain t1;
  GradedMap x;
};

inline CheckReport check(const TwistingHomotopy& h, int max_degree = -1) {
  return check_tc_homotopy(h.x, h.t0, h.t1, max_degree);
}

/// eta e : t -> t.
TwistingHomotopy constant_homotopy(const TwistingCochain& t);

/// Two-sided cup inverse sum_l (eta e - x)^l, which terminates on each
/// element below its cocompleteness witness. Throws InvalidHomotopy
/// unless x(1) = 1.
GradedMap cup_inverse(const GradedMap& x, const DgCoalgebra& c, const DgAlgebra& a);

/// x01 cup x12 : t0 -> t2. Throws EndpointMismatch.
TwistingHomotopy compose_twisting_homotopies(const TwistingHomotopy& x01, const TwistingHomotopy& x12);
/// The cup inverse as a homotopy t1 -> t0.
TwistingHomotopy invert(const TwistingHomotopy& x);

/// Moves t0 along a degree 0 map x with x(1) = 1 and e x = e:
/// t1 = x^{-1} cup (t0 cup x - d(x)), so that x : t0 -> t1.
TwistingHomotopy gauge_transform(const TwistingCochain& t0, const GradedMap& x);

/// x = eta e + h t_C for a homotopy between maps out of a cobar
/// construction. Throws SourceNotCobar.
TwistingHomotopy dga_homotopy_to_twisting(const DgaHomotopy& h, const CobarPtr& cobar);

/// The homotopy between the extensions of t0 and t1 with
/// h<c1;...;cl> = sum_i (-1)^{|<c1..c(i-1)>|} f0<c1..c(i-1)> (x - eta e)(ci) f1<c(i+1)..cl>.
DgaHomotopy twisting_to_dga_homotopy(const TwistingHomotopy& x, const CobarPtr& cobar);

}  // namespace dgtor
