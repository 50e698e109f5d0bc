#include "dgtor/algebra/homotopy_checks.hpp"

#include <map>

namespace dgtor {

CheckReport check_homotopy(const DgaHomotopy& cand, int max_degree) {
  CheckReport r;
  const DgAlgebra& src = *cand.f0.source;
  const DgAlgebra& tgt = *cand.f0.target;
  const GradedBasis& b = *src.basis();
  if (cand.h.degree() != -1) r.fail("degree -1", "h");
  const int limit = check_limit(max_degree, std::min(src.cutoff(), tgt.cutoff()));
  if (!cand.h.image(0).is_zero()) r.fail("unit", b.name(0));
  GradedMap dh = hom_differential(cand.h, src.complex(), tgt.complex());
  for (Index x = 0; x < b.size() && b.degree(x) <= limit; ++x) {
    const SparseVector& hx = cand.h.image(x);
    if (tgt.augmentation(hx) != 0) r.fail("counit", b.name(x));
    if (b.degree(x) < src.cutoff()) {
      SparseVector diff = cand.f0.map.image(x) - cand.f1.map.image(x);
      if (!(dh.image(x) == diff)) r.fail("d(h) = f0 - f1", b.name(x));
    }
    for (Index y = 0; y < b.end_of(limit - b.degree(x)); ++y) {
      SparseVector lhs = cand.h.apply(src.multiply(x, y));
      SparseVector rhs = tgt.multiply(cand.f0.map.image(x), cand.h.image(y)).scaled(sign_power(b.degree(x)));
      rhs += tgt.multiply(hx, cand.f1.map.image(y));
      if (!(lhs == rhs)) r.fail("derivation", "(" + b.name(x) + ", " + b.name(y) + ")");
    }
  }
  return r;
}

CheckReport check_dgc_homotopy(const GradedMap& j, const CoalgebraMorphism& g0, const CoalgebraMorphism& g1,
                               int max_degree) {
  CheckReport r;
  const DgCoalgebra& src = *g0.source;
  const DgCoalgebra& tgt = *g0.target;
  const GradedBasis& b = *src.basis();
  if (j.degree() != -1) r.fail("degree -1", "j");
  const int limit = check_limit(max_degree, std::min(src.cutoff(), tgt.cutoff()));
  if (!j.image(0).is_zero()) r.fail("unit", b.name(0));
  GradedMap dj = hom_differential(j, src.complex(), tgt.complex());
  using Pairs = std::map<std::pair<Index, Index>, Integer>;
  auto add = [](Pairs& p, const SparseVector& u, const SparseVector& v, const Integer& s) {
    for (const auto& a : u) {
      for (const auto& c : v) {
        auto& slot = p[{a.index, c.index}];
        slot += s * a.coeff * c.coeff;
        if (slot == 0) p.erase({a.index, c.index});
      }
    }
  };
  for (Index x = 0; x < b.size() && b.degree(x) <= limit; ++x) {
    if (tgt.counit(j.image(x)) != 0) r.fail("counit", b.name(x));
    if (b.degree(x) < src.cutoff()) {
      if (!(dj.image(x) == g1.map.image(x) - g0.map.image(x))) r.fail("d(j) = g1 - g0", b.name(x));
    }
    Pairs lhs, rhs;
    for (const auto& t : j.image(x)) {
      for (const auto& u : tgt.diagonal(t.index)) {
        add(lhs, SparseVector::unit(u.left), SparseVector::unit(u.right), t.coeff * u.coeff);
      }
    }
    for (const auto& u : src.diagonal(x)) {
      add(rhs, g0.map.image(u.left), j.image(u.right), u.coeff * sign_power(b.degree(u.left)));
      add(rhs, j.image(u.left), g1.map.image(u.right), u.coeff);
    }
    if (lhs != rhs) r.fail("coderivation", b.name(x));
  }
  return r;
}

CheckReport check_tc_homotopy(const GradedMap& x, const TwistingCochain& t0, const TwistingCochain& t1,
                              int max_degree) {
  CheckReport r;
  const DgCoalgebra& c = *t0.source;
  const DgAlgebra& a = *t0.target;
  const GradedBasis& b = *c.basis();
  if (x.degree() != 0) r.fail("degree 0", "x");
  const int limit = check_limit(max_degree, c.cutoff() - 1);
  if (!(x.image(0) == a.unit())) r.fail("unit", b.name(0));
  GradedMap dx = hom_differential(x, c.complex(), a.complex());
  GradedMap rhs = cup(t0.map, x, c, a) - cup(x, t1.map, c, a);
  for (Index i = 0; i < b.size() && b.degree(i) <= limit + 1 && b.degree(i) <= c.cutoff(); ++i) {
    if (a.augmentation(x.image(i)) != (i == 0 ? 1 : 0)) r.fail("counit", b.name(i));
    if (b.degree(i) <= limit && !(dx.image(i) == rhs.image(i))) r.fail("d(x) = t0 cup x - x cup t1", b.name(i));
  }
  return r;
}

}  // namespace dgtor
