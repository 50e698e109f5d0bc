#include "dgtor/bar/bar.hpp"

#include "dgtor/core/errors.hpp"
#include "words.hpp"

namespace dgtor {

BarPtr BarConstruction::make(const AlgebraPtr& a, int cutoff) {
  if (!a->augmented()) throw NotOneConnected("bar construction needs an augmented algebra");
  const GradedBasis& ab = *a->basis();
  if (ab.size_in_degree(0) != 1 || ab.size_in_degree(1) != 0) {
    throw NotOneConnected("algebra '" + a->name() + "' has elements of degree 0 or 1 in its augmentation ideal");
  }
  if (cutoff < 0) cutoff = a->cutoff() - 1;
  if (a->cutoff() < cutoff + 1) {
    throw CutoffTooSmall("bar words up to degree " + std::to_string(cutoff) + " need the algebra through degree " +
                         std::to_string(cutoff + 1));
  }

  auto b = std::make_shared<BarConstruction>();
  b->base_ = a;
  std::vector<Index> letters;
  std::vector<int> weight(ab.size(), 0);
  for (Index i = 1; i < ab.size(); ++i) {
    weight[i] = ab.degree(i) - 1;
    if (weight[i] <= cutoff) letters.push_back(i);
  }
  std::vector<Word> words = detail::enumerate_words(letters, weight, cutoff);
  std::vector<GradedBasis::Element> els;
  els.reserve(words.size());
  for (const auto& w : words) {
    std::string name = "[";
    int degree = 0;
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (k) name += "|";
      name += ab.name(w[k]);
      degree += weight[w[k]];
    }
    els.push_back({name + "]", degree});
  }
  std::vector<Index> pos;
  BasisPtr basis = GradedBasis::make(std::move(els), cutoff, &pos);
  auto table = std::make_shared<WordTable>();
  table->words.resize(words.size());
  for (Index k = 0; k < words.size(); ++k) {
    table->index.emplace(words[k], pos[k]);
    table->words[pos[k]] = std::move(words[k]);
  }
  b->table_ = table;
  const WordTable* self = table.get();
  GradedMap d = GradedMap::from_function(basis, basis, 1, [&](Index i) {
    const Word& w = self->words[i];
    VectorAccumulator acc;
    long long e = 0;  // e(i-1)
    for (std::size_t k = 0; k < w.size(); ++k) {
      Word w2 = w;
      for (const auto& t : a->differential().image(w[k])) {
        if (t.index == 0) continue;
        w2[k] = t.index;
        if (auto j = self->find(w2)) acc.add(*j, t.coeff * sign_power(e + 1));
      }
      e += weight[w[k]];
      if (k + 1 < w.size()) {
        Word w3(w.begin(), w.begin() + k);
        w3.push_back(0);
        w3.insert(w3.end(), w.begin() + k + 2, w.end());
        for (const auto& t : a->multiply(w[k], w[k + 1])) {
          if (t.index == 0) continue;
          w3[k] = t.index;
          if (auto j = self->find(w3)) acc.add(*j, t.coeff * sign_power(e));
        }
      }
    }
    return acc.take();
  });

  Comultiplication delta = [table](Index i) {
    const WordTable* self = table.get();
    const Word& w = self->words[i];
    std::vector<TensorTerm> out;
    for (std::size_t k = 0; k <= w.size(); ++k) {
      out.push_back({*self->find(Word(w.begin(), w.begin() + k)), *self->find(Word(w.begin() + k, w.end())), 1});
    }
    return out;
  };
  std::vector<int> witness(basis->size());
  for (Index i = 0; i < witness.size(); ++i) witness[i] = static_cast<int>(table->words[i].size()) + 1;
  witness[0] = 1;
  b->coalgebra_ = DgCoalgebra::make({"B(" + a->name() + ")", basis, std::move(d), delta, std::move(witness)});

  GradedMap t = GradedMap::from_function(basis, a->basis(), 1, [&](Index i) {
    const Word& w = self->words[i];
    return w.size() == 1 ? SparseVector::unit(w[0]) : SparseVector();
  });
  b->twisting_ = TwistingCochain{b->coalgebra_, a, std::move(t)};
  return b;
}

SparseVector BarConstruction::word_vector(const std::vector<SparseVector>& letters) const {
  VectorAccumulator acc;
  detail::expand_word(letters, [&](const Word& w, const Integer& c) {
    if (auto j = find(w)) acc.add(*j, c);
  });
  return acc.take();
}

// ---------------------------------------------------------------- cobar

CobarPtr CobarConstruction::make(const CoalgebraPtr& c, int cutoff) {
  const GradedBasis& cb = *c->basis();
  if (cb.size_in_degree(0) != 1) throw ValidationError("cobar construction needs the coideal in degrees >= 1");
  if (cutoff < 0) cutoff = c->cutoff() + 1;
  if (c->cutoff() < cutoff - 1) {
    throw CutoffTooSmall("cobar words up to degree " + std::to_string(cutoff) + " need the coalgebra through degree " +
                         std::to_string(cutoff - 1));
  }

  auto o = std::make_shared<CobarConstruction>();
  o->base_ = c;
  std::vector<Index> letters;
  std::vector<int> weight(cb.size(), 0);
  for (Index i = 1; i < cb.size(); ++i) {
    weight[i] = cb.degree(i) + 1;
    if (weight[i] <= cutoff) letters.push_back(i);
  }
  std::vector<Word> words = detail::enumerate_words(letters, weight, cutoff);
  std::vector<GradedBasis::Element> els;
  els.reserve(words.size());
  for (const auto& w : words) {
    std::string name = "<";
    int degree = 0;
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (k) name += ";";
      name += cb.name(w[k]);
      degree += weight[w[k]];
    }
    els.push_back({w.empty() ? std::string("1") : name + ">", degree});
  }
  std::vector<Index> pos;
  BasisPtr basis = GradedBasis::make(std::move(els), cutoff, &pos);
  auto table = std::make_shared<WordTable>();
  table->words.resize(words.size());
  for (Index k = 0; k < words.size(); ++k) {
    table->index.emplace(words[k], pos[k]);
    table->words[pos[k]] = std::move(words[k]);
  }
  o->table_ = table;
  const WordTable* self = table.get();
  GradedMap d = GradedMap::from_function(basis, basis, 1, [&](Index i) {
    const Word& w = self->words[i];
    VectorAccumulator acc;
    long long delta = 0;  // degree of the letters before position k
    for (std::size_t k = 0; k < w.size(); ++k) {
      const int s = sign_power(delta);
      Word w2 = w;
      for (const auto& t : c->differential().image(w[k])) {
        if (t.index == 0) continue;
        w2[k] = t.index;
        if (auto j = self->find(w2)) acc.add(*j, -s * t.coeff);
      }
      Word w3(w.begin(), w.begin() + k);
      w3.push_back(0);
      w3.push_back(0);
      w3.insert(w3.end(), w.begin() + k + 1, w.end());
      for (const auto& t : c->reduced_diagonal(w[k])) {
        w3[k] = t.left;
        w3[k + 1] = t.right;
        if (auto j = self->find(w3)) acc.add(*j, s * sign_power(cb.degree(t.left)) * t.coeff);
      }
      delta += weight[w[k]];
    }
    return acc.take();
  });

  Multiplication product = [table](Index x, Index y) {
    const WordTable* self = table.get();
    Word w = self->words[x];
    const Word& v = self->words[y];
    w.insert(w.end(), v.begin(), v.end());
    auto j = self->find(w);
    return j ? SparseVector::unit(*j) : SparseVector();
  };
  o->algebra_ = DgAlgebra::make({"Ω(" + c->name() + ")", basis, std::move(d), product, SparseVector::unit(0), true});

  GradedMap t = GradedMap::from_function(c->basis(), basis, 1, [&](Index i) {
    if (i == 0) return SparseVector();
    auto j = self->find(Word{i});
    return j ? SparseVector::unit(*j) : SparseVector();
  });
  o->twisting_ = TwistingCochain{c, o->algebra_, std::move(t)};
  return o;
}

SparseVector CobarConstruction::word_vector(const std::vector<SparseVector>& letters) const {
  VectorAccumulator acc;
  detail::expand_word(letters, [&](const Word& w, const Integer& c) {
    if (auto j = find(w)) acc.add(*j, c);
  });
  return acc.take();
}

}  // namespace dgtor
