#pragma once

#include "algebra_support.hpp"
#include "dgtor/tor/koszul.hpp"
#include "dgtor/tor/product.hpp"

namespace dgtor::testing {

/// X <- A -> Y between free graded-commutative algebras, with maps given by
/// generator images.
struct TestSpan {
  FreeGcaPtr x, a, y;
  AlgebraMorphism left, right;
};

inline TestSpan make_span(const std::vector<GeneratorSpec>& x, const std::vector<GeneratorSpec>& a,
                          const std::vector<GeneratorSpec>& y, const std::map<std::string, std::string>& left,
                          const std::map<std::string, std::string>& right, int cutoff,
                          CoefficientRing ring = CoefficientRing::integers()) {
  TestSpan s;
  s.x = build_free_gca({x, ring, cutoff, ""});
  s.a = build_free_gca({a, ring, cutoff, ""});
  s.y = build_free_gca({y, ring, cutoff, ""});
  s.left = evaluate_morphism(left, s.a, s.x);
  s.right = evaluate_morphism(right, s.a, s.y);
  return s;
}

/// Tor through degree `max_degree` (algebras are built two degrees higher).
inline TorPtr bar_tor(const TestSpan& s, const CoefficientRing& ring, int max_degree = -1) {
  return tor_bigraded(two_sided_bar(s.left, s.right), ring, max_degree);
}

inline TorPtr oracle_tor(const TestSpan& s, const CoefficientRing& ring, int max_degree) {
  return koszul_oracle(s.a, s.left, s.right, ring, max_degree);
}

/// Homotopy f0 ~ f1 out of a free gca with zero differential, from its
/// values on generators, extended by h(g m) = (-1)^{|g|} f0(g) h(m) + h(g) f1(m).
inline DgaHomotopy homotopy_from_generators(const FreeGcaPtr& source, const AlgebraMorphism& f0,
                                            const AlgebraMorphism& f1, const std::vector<SparseVector>& values) {
  const FreeGca& g = *source;
  const DgAlgebra& t = *f0.target;
  std::vector<SparseVector> images(g.basis()->size());
  for (Index m = 1; m < images.size(); ++m) {
    FreeGca::Exponents e = g.exponents(m);
    std::size_t k = 0;
    while (e[k] == 0) ++k;
    --e[k];
    Index rest = *g.monomial(e);
    if (rest == 0) {
      images[m] = values[k];
      continue;
    }
    Index gen = g.generator(g.presentation().generators[k].name);
    Integer sigma = g.algebra()->multiply(gen, rest).coefficient(m);
    int sign = sign_power(g.basis()->degree(gen));
    SparseVector v = t.multiply(f0.map.image(gen), images[rest]).scaled(sign) + t.multiply(images[gen], f1.map.image(rest));
    images[m] = v.scaled(sigma);
  }
  return {f0, f1, GradedMap::from_images(g.basis(), t.basis(), -1, std::move(images))};
}

/// k[v] (x) Lambda[w] (x) k[rest] with dv = w, on a free gca whose first two
/// generators are v (even) and w. Rationally acyclic in the first two factors.
inline AlgebraPtr polynomial_contraction(const FreeGcaPtr& base) {
  const FreeGca& g = *base;
  GradedMap d = GradedMap::from_function(base->basis(), base->basis(), 1, [&](Index m) {
    auto e = g.exponents(m);
    if (e[0] == 0 || e[1] == 1) return SparseVector();
    int n = e[0];
    e[0] -= 1;
    e[1] = 1;
    auto k = g.monomial(e);
    return k ? SparseVector::unit(*k, n) : SparseVector();
  });
  const AlgebraPtr& a = base->algebra();
  return DgAlgebra::make({"C(" + a->name() + ")", a->basis(), d,
                          [base](Index x, Index y) { return base->algebra()->multiply(x, y); }, a->unit(), true});
}

inline bool same_bigraded_groups(const BigradedTor& a, const BigradedTor& b) {
  if (a.max_degree() != b.max_degree()) return false;
  for (int n = 0; n <= a.max_degree(); ++n) {
    for (int p = 0; p <= 2 * n + 2; ++p) {
      ModuleSummary x = a.bidegree(p, n + p), y = b.bidegree(p, n + p);
      if (x.free_rank != y.free_rank || x.torsion != y.torsion) return false;
    }
  }
  return true;
}

}  // namespace dgtor::testing
