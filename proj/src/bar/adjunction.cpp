#include "dgtor/bar/bar.hpp"

#include "dgtor/core/errors.hpp"

#include <map>

namespace dgtor {

CoalgebraMorphism bar_of_morphism(const AlgebraMorphism& f, const BarPtr& source, const BarPtr& target) {
  if (f.source != source->base() || f.target != target->base()) {
    throw std::invalid_argument("bar_of_morphism: bars do not match the morphism");
  }
  GradedMap m = GradedMap::from_function(source->basis(), target->basis(), 0, [&](Index i) {
    const Word& w = source->word(i);
    if (w.empty()) return SparseVector::unit(0);
    std::vector<SparseVector> letters;
    for (Index a : w) letters.push_back(f.map.image(a));
    return target->word_vector(letters);
  });
  return {source->coalgebra(), target->coalgebra(), std::move(m)};
}

AlgebraMorphism cobar_of_morphism(const CoalgebraMorphism& g, const CobarPtr& source, const CobarPtr& target) {
  if (g.source != source->base() || g.target != target->base()) {
    throw std::invalid_argument("cobar_of_morphism: cobars do not match the morphism");
  }
  GradedMap m = GradedMap::from_function(source->basis(), target->basis(), 0, [&](Index i) {
    const Word& w = source->word(i);
    if (w.empty()) return SparseVector::unit(0);
    std::vector<SparseVector> letters;
    for (Index c : w) letters.push_back(g.map.image(c));
    return target->word_vector(letters);
  });
  return {source->algebra(), target->algebra(), std::move(m)};
}

namespace {

void require_twisting(const TwistingCochain& t) {
  CheckReport r = check_twisting_cochain(t);
  if (!r.ok()) throw InvalidTwistingCochain(r.describe());
}

}  // namespace

CoalgebraMorphism lift_to_bar(const TwistingCochain& t, const BarPtr& target) {
  if (t.target != target->base()) throw std::invalid_argument("lift_to_bar: bar of a different algebra");
  require_twisting(t);
  const DgCoalgebra& c = *t.source;
  GradedMap m = GradedMap::from_function(c.basis(), target->basis(), 0, [&](Index i) {
    if (i == 0) return SparseVector::unit(0);
    VectorAccumulator acc;
    // tuples of the iterated reduced diagonal, split at the last factor
    std::map<Word, Integer> current{{Word{i}, 1}};
    while (!current.empty()) {
      std::map<Word, Integer> next;
      for (const auto& [tuple, coeff] : current) {
        std::vector<SparseVector> letters;
        for (Index x : tuple) letters.push_back(t.map.image(x));
        acc.add(target->word_vector(letters), coeff);
        for (const auto& term : c.reduced_diagonal(tuple.back())) {
          Word w(tuple.begin(), tuple.end() - 1);
          w.push_back(term.left);
          w.push_back(term.right);
          auto& slot = next[w];
          slot += coeff * term.coeff;
          if (slot == 0) next.erase(w);
        }
      }
      current = std::move(next);
    }
    return acc.take();
  });
  return {t.source, target->coalgebra(), std::move(m)};
}

AlgebraMorphism extend_from_cobar(const TwistingCochain& t, const CobarPtr& source) {
  if (t.source != source->base()) throw std::invalid_argument("extend_from_cobar: cobar of a different coalgebra");
  require_twisting(t);
  const DgAlgebra& a = *t.target;
  GradedMap m = GradedMap::from_function(source->basis(), a.basis(), 0, [&](Index i) {
    SparseVector v = a.unit();
    for (Index c : source->word(i)) v = a.multiply(v, t.map.image(c));
    return v;
  });
  return {source->algebra(), t.target, std::move(m)};
}

AdjunctionUnit adjunction_unit(const CoalgebraPtr& c) {
  CobarPtr o = cobar(c);
  BarPtr b = bar(o->algebra(), c->cutoff());
  CoalgebraMorphism map = lift_to_bar(o->twisting(), b);
  return {o, b, std::move(map)};
}

AdjunctionCounit adjunction_counit(const AlgebraPtr& a) {
  BarPtr b = bar(a);
  CobarPtr o = cobar(b->coalgebra(), a->cutoff());
  AlgebraMorphism map = extend_from_cobar(b->twisting(), o);
  return {b, o, std::move(map)};
}

}  // namespace dgtor
