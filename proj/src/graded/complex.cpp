#include "dgtor/graded/complex.hpp"

#include "dgtor/core/errors.hpp"

namespace dgtor {

ChainComplex ChainComplex::make(BasisPtr basis, GradedMap differential) {
  if (differential.degree() != 1 || !same_basis(differential.source(), basis) ||
      !same_basis(differential.target(), basis)) {
    throw DegreeMismatch("differential must be a degree +1 endomorphism of the basis");
  }
  return ChainComplex{std::move(basis), std::move(differential)};
}

bool ChainComplex::squares_to_zero() const { return compose(differential, differential).is_zero(); }

TensorComplex tensor(const ChainComplex& a, const ChainComplex& b) {
  TensorPtr t = TensorBasis::make(a.basis, b.basis);
  GradedMap d = GradedMap::from_function(t->basis(), t->basis(), 1, [&](Index i) {
    auto [x, y] = t->factors(i);
    SparseVector first = tensor_vectors(*t, a.differential.image(x), SparseVector::unit(y));
    SparseVector second = tensor_vectors(*t, SparseVector::unit(x), b.differential.image(y));
    first.add_scaled(second, sign_power(a.basis->degree(x)));
    return first;
  });
  return TensorComplex{ChainComplex{t->basis(), std::move(d)}, t};
}

GradedMap hom_differential(const GradedMap& f, const ChainComplex& source, const ChainComplex& target) {
  GradedMap left = compose(target.differential, f);
  GradedMap right = compose(f, source.differential);
  return left - right.scaled(sign_power(f.degree()));
}

SparseVector multiply_vectors(const Multiplication& mu, const SparseVector& a, const SparseVector& b) {
  VectorAccumulator acc;
  for (const auto& x : a) {
    for (const auto& y : b) acc.add(mu(x.index, y.index), x.coeff * y.coeff);
  }
  return acc.take();
}

GradedMap cup(const GradedMap& f, const GradedMap& g, const Comultiplication& delta, const Multiplication& mu) {
  if (!same_basis(f.source(), g.source()) || !same_basis(f.target(), g.target())) {
    throw std::invalid_argument("cup: maps must share source and target");
  }
  const auto& c = *f.source();
  return GradedMap::from_function(f.source(), f.target(), f.degree() + g.degree(), [&](Index i) {
    VectorAccumulator acc;
    for (const auto& term : delta(i)) {
      const SparseVector& fa = f.image(term.left);
      if (fa.is_zero()) continue;
      const SparseVector& gb = g.image(term.right);
      if (gb.is_zero()) continue;
      Integer coeff = term.coeff * sign_power(static_cast<long long>(g.degree()) * c.degree(term.left));
      acc.add(multiply_vectors(mu, fa, gb), coeff);
    }
    return acc.take();
  });
}

HomologyGroup homology_in_degree(const ChainComplex& c, const CoefficientRing& ring, int degree) {
  if (degree >= c.basis->cutoff()) {
    throw CutoffTooSmall("homology in degree " + std::to_string(degree) + " needs a complex tracked past degree " +
                         std::to_string(degree) + " (cutoff is " + std::to_string(c.basis->cutoff()) + ")");
  }
  if (degree < 0) return HomologyGroup{};
  return HomologyGroup::compute(c.differential.block(degree - 1), c.differential.block(degree), ring);
}

std::vector<HomologyGroup> complex_homology(const ChainComplex& c, const CoefficientRing& ring, int max_degree) {
  std::vector<HomologyGroup> out;
  for (int q = 0; q <= max_degree; ++q) out.push_back(homology_in_degree(c, ring, q));
  return out;
}

std::vector<HomologyGroup> complex_homology(const ChainComplex& c, const CoefficientRing& ring) {
  return complex_homology(c, ring, c.basis->cutoff() - 1);
}

SparseVector to_local(const GradedBasis& b, int q, const SparseVector& v) {
  const Index lo = b.begin_of(q), hi = b.end_of(q);
  std::vector<Term> terms;
  for (const auto& t : v) {
    if (t.index >= lo && t.index < hi) terms.push_back({t.index - lo, t.coeff});
  }
  return SparseVector::from_terms(std::move(terms));
}

SparseVector to_global(const GradedBasis& b, int q, const SparseVector& v) {
  const Index lo = b.begin_of(q);
  std::vector<Term> terms;
  for (const auto& t : v) terms.push_back({t.index + lo, t.coeff});
  return SparseVector::from_terms(std::move(terms));
}

std::vector<Coordinates> induced_on_homology(const GradedMap& f, const HomologyGroup& source,
                                             const HomologyGroup& target, int q) {
  if (f.degree() != 0) throw DegreeMismatch("induced_on_homology needs a degree 0 map");
  const auto& gens = source.summary().generators;
  std::vector<Coordinates> rows(target.summary().rank(), Coordinates(gens.size()));
  for (std::size_t j = 0; j < gens.size(); ++j) {
    SparseVector image = to_local(*f.target(), q, f.apply(to_global(*f.source(), q, gens[j])));
    Coordinates c = target.coordinates(image);
    for (std::size_t i = 0; i < c.size(); ++i) rows[i][j] = c[i];
  }
  return rows;
}

bool is_quasi_isomorphism(const GradedMap& f, const ChainComplex& source, const ChainComplex& target,
                          const CoefficientRing& ring, int max_degree) {
  for (int q = 0; q <= max_degree; ++q) {
    HomologyGroup hs = homology_in_degree(source, ring, q);
    HomologyGroup ht = homology_in_degree(target, ring, q);
    if (hs.summary().free_rank != ht.summary().free_rank || hs.summary().torsion != ht.summary().torsion) {
      return false;
    }
    std::vector<Coordinates> m = induced_on_homology(f, hs, ht, q);
    std::vector<Integer> moduli = ht.orders();
    for (std::size_t k = 0; k < m.size(); ++k) {
      Coordinates e(m.size(), Rational(0));
      e[k] = 1;
      if (!solve_modular_system(m, e, moduli, ring)) return false;
    }
  }
  return true;
}

}  // namespace dgtor
