#include "dgtor/homotopy/twisting_homotopy.hpp"

#include "dgtor/core/errors.hpp"

namespace dgtor {

TwistingHomotopy constant_homotopy(const TwistingCochain& t) {
  return {t, t, unit_counit(*t.source, *t.target)};
}

GradedMap cup_inverse(const GradedMap& x, const DgCoalgebra& c, const DgAlgebra& a) {
  if (x.degree() != 0 || !(x.image(0) == a.unit())) {
    throw InvalidHomotopy("cup_inverse needs a degree 0 map sending the coaugmentation to the unit");
  }
  const GradedMap unit = unit_counit(c, a);
  const GradedMap y = unit - x;
  GradedMap power = unit;
  GradedMap sum = unit;
  // y vanishes on the coaugmentation, so y^l kills elements of witness <= l
  for (int l = 1; l < c.max_witness(); ++l) {
    power = cup(power, y, c, a);
    if (power.is_zero()) break;
    sum = sum + power;
  }
  return sum;
}

TwistingHomotopy compose_twisting_homotopies(const TwistingHomotopy& x01, const TwistingHomotopy& x12) {
  if (x01.t1.source != x12.t0.source || x01.t1.target != x12.t0.target || !(x01.t1.map == x12.t0.map)) {
    throw EndpointMismatch("the first homotopy does not end where the second starts");
  }
  return {x01.t0, x12.t1, cup(x01.x, x12.x, *x01.t0.source, *x01.t0.target)};
}

TwistingHomotopy invert(const TwistingHomotopy& x) {
  return {x.t1, x.t0, cup_inverse(x.x, *x.t0.source, *x.t0.target)};
}

TwistingHomotopy gauge_transform(const TwistingCochain& t0, const GradedMap& x) {
  const DgCoalgebra& c = *t0.source;
  const DgAlgebra& a = *t0.target;
  GradedMap inverse = cup_inverse(x, c, a);
  GradedMap dx = hom_differential(x, c.complex(), a.complex());
  GradedMap t1 = cup(inverse, cup(t0.map, x, c, a) - dx, c, a);
  return {t0, TwistingCochain{t0.source, t0.target, std::move(t1)}, x};
}

TwistingHomotopy dga_homotopy_to_twisting(const DgaHomotopy& h, const CobarPtr& cobar) {
  if (h.f0.source != cobar->algebra() || h.f1.source != cobar->algebra()) {
    throw SourceNotCobar("the homotopy is not defined on the given cobar construction");
  }
  const GradedMap& tc = cobar->twisting().map;
  const CoalgebraPtr& c = cobar->base();
  const AlgebraPtr& a = h.f0.target;
  TwistingCochain t0{c, a, compose(h.f0.map, tc)};
  TwistingCochain t1{c, a, compose(h.f1.map, tc)};
  GradedMap x = unit_counit(*c, *a) + compose(h.h, tc);
  return {std::move(t0), std::move(t1), std::move(x)};
}

DgaHomotopy twisting_to_dga_homotopy(const TwistingHomotopy& x, const CobarPtr& cobar) {
  if (x.t0.source != cobar->base() || x.t1.source != cobar->base()) {
    throw SourceNotCobar("the twisting cochains are not defined on the base of the cobar construction");
  }
  AlgebraMorphism f0 = extend_from_cobar(x.t0, cobar);
  AlgebraMorphism f1 = extend_from_cobar(x.t1, cobar);
  const DgAlgebra& a = *x.t0.target;
  const GradedBasis& cb = *cobar->base()->basis();
  const GradedMap xbar = x.x - unit_counit(*cobar->base(), a);
  GradedMap h = GradedMap::from_function(cobar->basis(), a.basis(), -1, [&](Index i) {
    const Word& w = cobar->word(i);
    // suffix[k] = t1(c_k) ... t1(c_l)
    std::vector<SparseVector> suffix(w.size() + 1);
    suffix[w.size()] = a.unit();
    for (std::size_t k = w.size(); k-- > 0;) suffix[k] = a.multiply(x.t1.map.image(w[k]), suffix[k + 1]);
    SparseVector prefix = a.unit();
    long long degree = 0;
    SparseVector out;
    for (std::size_t k = 0; k < w.size(); ++k) {
      SparseVector term = a.multiply(a.multiply(prefix, xbar.image(w[k])), suffix[k + 1]);
      out.add_scaled(term, sign_power(degree));
      prefix = a.multiply(prefix, x.t0.map.image(w[k]));
      degree += cb.degree(w[k]) + 1;
    }
    return out;
  });
  return {std::move(f0), std::move(f1), std::move(h)};
}

}  // namespace dgtor
