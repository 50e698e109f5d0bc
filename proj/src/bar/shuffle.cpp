#include "dgtor/bar/bar.hpp"

#include "dgtor/core/errors.hpp"

#include <functional>

namespace dgtor {

Nabla shuffle_nabla(const BarPtr& b1, const BarPtr& b2) {
  if (b1->cutoff() != b2->cutoff()) throw CutoffMismatch("shuffle_nabla needs bars with equal cutoffs");
  TensorCoalgebra source = coalgebra_tensor(b1->coalgebra(), b2->coalgebra());
  TensorAlgebra algebra = algebra_tensor(b1->base(), b2->base());
  BarPtr target = bar(algebra.algebra, b1->cutoff());
  const GradedBasis& g1 = *b1->base()->basis();
  const GradedBasis& g2 = *b2->base()->basis();

  GradedMap m = GradedMap::from_function(source.coalgebra->basis(), target->basis(), 0, [&](Index i) {
    auto [x, y] = source.tensor->factors(i);
    const Word& u = b1->word(x);
    const Word& v = b2->word(y);
    std::vector<int> rest(u.size() + 1, 0);  // rest[k] = sum of weights of u[k..]
    for (std::size_t k = u.size(); k-- > 0;) rest[k] = rest[k + 1] + g1.degree(u[k]) - 1;
    VectorAccumulator acc;
    Word w;
    std::function<void(std::size_t, std::size_t, long long)> rec = [&](std::size_t p, std::size_t q, long long sign) {
      if (p == u.size() && q == v.size()) {
        if (auto j = target->find(w)) acc.add(*j, sign_power(sign));
        return;
      }
      if (p < u.size()) {
        w.push_back(*algebra.index(u[p], 0));
        rec(p + 1, q, sign);
        w.pop_back();
      }
      if (q < v.size()) {
        w.push_back(*algebra.index(0, v[q]));
        rec(p, q + 1, sign + static_cast<long long>(g2.degree(v[q]) - 1) * rest[p]);
        w.pop_back();
      }
    };
    rec(0, 0, 0);
    return acc.take();
  });
  CoalgebraMorphism map{source.coalgebra, target->coalgebra(), std::move(m)};
  return {std::move(source), std::move(algebra), std::move(target), std::move(map)};
}

Gamma shuffle_gamma(const CobarPtr& o1, const CobarPtr& o2) {
  if (o1->cutoff() != o2->cutoff()) throw CutoffMismatch("shuffle_gamma needs cobars with equal cutoffs");
  TensorCoalgebra coalgebra = coalgebra_tensor(o1->base(), o2->base());
  CobarPtr source = cobar(coalgebra.coalgebra, o1->cutoff());
  TensorAlgebra target = algebra_tensor(o1->algebra(), o2->algebra());
  const DgAlgebra& t = *target.algebra;

  std::vector<SparseVector> generator(coalgebra.coalgebra->basis()->size());
  for (Index i = 1; i < generator.size(); ++i) {
    auto [c, d] = coalgebra.tensor->factors(i);
    if (d == 0) {
      if (auto k = o1->find(Word{c})) generator[i] = target.pair(SparseVector::unit(*k), SparseVector::unit(0));
    } else if (c == 0) {
      if (auto k = o2->find(Word{d})) generator[i] = target.pair(SparseVector::unit(0), SparseVector::unit(*k));
    }
  }
  GradedMap m = GradedMap::from_function(source->basis(), t.basis(), 0, [&](Index i) {
    SparseVector v = t.unit();
    for (Index c : source->word(i)) v = t.multiply(v, generator[c]);
    return v;
  });
  AlgebraMorphism map{source->algebra(), target.algebra, std::move(m)};
  return {std::move(coalgebra), std::move(source), std::move(target), std::move(map)};
}

ShcStructure shc_structure_cdga(const AlgebraPtr& a, const CoefficientRing& ring, int cutoff) {
  CheckReport r = check_commutative(*a, ring);
  if (!r.ok()) throw NotCommutative(r.describe());
  TensorAlgebra square = algebra_tensor(a, a);
  BarPtr target = bar(a, cutoff);
  BarPtr source = bar(square.algebra, target->cutoff());
  CoalgebraMorphism phi = bar_of_morphism(multiplication_map(square), source, target);
  return {std::move(square), std::move(source), std::move(target), std::move(phi)};
}

}  // namespace dgtor
