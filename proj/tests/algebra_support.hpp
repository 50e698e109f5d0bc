#pragma once

#include "dgtor/algebra/dg_algebra.hpp"

#include <map>

namespace dgtor::testing {

/// Tensor coalgebra on letters of the given positive degrees with
/// deconcatenation and zero differential.
inline CoalgebraPtr word_coalgebra(const std::vector<int>& letters, int cutoff, const std::string& prefix = "c") {
  std::vector<std::vector<int>> words{{}}, frontier{{}};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& w : frontier) {
      int d = 0;
      for (int l : w) d += letters[l];
      for (int l = 0; l < static_cast<int>(letters.size()); ++l) {
        if (d + letters[l] > cutoff) continue;
        auto w2 = w;
        w2.push_back(l);
        next.push_back(w2);
        words.push_back(w2);
      }
    }
    frontier = std::move(next);
  }
  std::vector<GradedBasis::Element> els;
  for (const auto& w : words) {
    std::string name = w.empty() ? "1" : "";
    int d = 0;
    for (int l : w) {
      name += prefix + std::to_string(l);
      d += letters[l];
    }
    els.push_back({name, d});
  }
  std::vector<Index> pos;
  BasisPtr basis = GradedBasis::make(els, cutoff, &pos);
  auto index = std::make_shared<std::map<std::vector<int>, Index>>();
  auto word_of = std::make_shared<std::vector<std::vector<int>>>(words.size());
  for (Index k = 0; k < words.size(); ++k) {
    (*index)[words[k]] = pos[k];
    (*word_of)[pos[k]] = words[k];
  }
  Comultiplication delta = [index, word_of](Index i) {
    const auto& w = (*word_of)[i];
    std::vector<TensorTerm> out;
    for (std::size_t k = 0; k <= w.size(); ++k) {
      out.push_back({index->at(std::vector<int>(w.begin(), w.begin() + k)),
                     index->at(std::vector<int>(w.begin() + k, w.end())), 1});
    }
    return out;
  };
  return DgCoalgebra::make({"T(" + prefix + ")", basis, GradedMap(basis, basis, 1), delta, {}});
}

}  // namespace dgtor::testing

#include "dgtor/algebra/free_gca.hpp"

namespace dgtor::testing {

inline FreeGcaPtr free_gca(std::vector<GeneratorSpec> gens, int cutoff,
                           CoefficientRing ring = CoefficientRing::integers()) {
  return build_free_gca({std::move(gens), ring, cutoff, ""});
}

/// Lambda[y] (x) k[x] with |x| = |y| + 1 and dy = x, on top of a free gca
/// whose first two generators are y and x. The result is acyclic.
inline AlgebraPtr koszul_pair(const FreeGcaPtr& base) {
  const FreeGca& g = *base;
  GradedMap d = GradedMap::from_function(base->basis(), base->basis(), 1, [&](Index m) {
    auto e = g.exponents(m);
    if (e[0] == 0) return SparseVector();
    e[0] = 0;
    e[1] += 1;
    auto k = g.monomial(e);
    return k ? SparseVector::unit(*k) : SparseVector();
  });
  const AlgebraPtr& a = base->algebra();
  return DgAlgebra::make({"K(" + a->name() + ")", a->basis(), d,
                          [base](Index x, Index y) { return base->algebra()->multiply(x, y); }, a->unit(), true});
}

}  // namespace dgtor::testing
