#pragma once

#include "dgtor/bar/bar.hpp"

#include <functional>

namespace dgtor::detail {

/// Words in `letters` with sum of weights at most `budget`, by length and
/// then lexicographically in letter order.
inline std::vector<Word> enumerate_words(const std::vector<Index>& letters, const std::vector<int>& weight,
                                         int budget) {
  std::vector<Word> out{Word{}};
  std::vector<std::pair<Word, int>> frontier{{Word{}, 0}};
  while (!frontier.empty()) {
    std::vector<std::pair<Word, int>> next;
    for (const auto& [w, used] : frontier) {
      for (Index l : letters) {
        if (used + weight[l] > budget) continue;
        Word w2 = w;
        w2.push_back(l);
        out.push_back(w2);
        next.emplace_back(std::move(w2), used + weight[l]);
      }
    }
    frontier = std::move(next);
  }
  return out;
}

/// Expands a multilinear word, calling `emit(word, coefficient)` for every
/// choice of nonunit basis letters.
inline void expand_word(const std::vector<SparseVector>& letters,
                        const std::function<void(const Word&, const Integer&)>& emit) {
  Word w(letters.size());
  std::function<void(std::size_t, const Integer&)> rec = [&](std::size_t k, const Integer& c) {
    if (k == letters.size()) {
      emit(w, c);
      return;
    }
    for (const auto& t : letters[k]) {
      if (t.index == 0) continue;
      w[k] = t.index;
      rec(k + 1, c * t.coeff);
    }
  };
  rec(0, Integer(1));
}

}  // namespace dgtor::detail
