#pragma once

#include "dgtor/algebra/dg_algebra.hpp"

namespace dgtor {

/// h : A' -> A of degree -1 between DGA maps f0, f1 : A' -> A, with
/// e h = 0, h(1) = 0, d h + h d = f0 - f1 and
/// h(ab) = (-1)^{|a|} f0(a) h(b) + h(a) f1(b).
struct DgaHomotopy {
  AlgebraMorphism f0;
  AlgebraMorphism f1;
  GradedMap h;
};

/// Axiom names: "counit", "unit", "d(h) = f0 - f1", "derivation".
CheckReport check_homotopy(const DgaHomotopy& cand, int max_degree = -1);

/// j : C -> C' of degree -1 between DGC maps g0, g1, with e j = 0,
/// j(1) = 0, d(j) = g1 - g0 and
/// Delta j(c) = sum (-1)^{|c'|} g0(c') (x) j(c'') + j(c') (x) g1(c'').
/// Axiom names: "counit", "unit", "d(j) = g1 - g0", "coderivation".
CheckReport check_dgc_homotopy(const GradedMap& j, const CoalgebraMorphism& g0, const CoalgebraMorphism& g1,
                               int max_degree = -1);

/// x : C -> A of degree 0 between twisting cochains t0, t1, with e x = e,
/// x(1) = 1 and d(x) = t0 cup x - x cup t1.
/// Axiom names: "counit", "unit", "d(x) = t0 cup x - x cup t1".
CheckReport check_tc_homotopy(const GradedMap& x, const TwistingCochain& t0, const TwistingCochain& t1,
                              int max_degree = -1);

}  // namespace dgtor
