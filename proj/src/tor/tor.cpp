#include "dgtor/tor/tor.hpp"

#include "dgtor/core/errors.hpp"

#include <algorithm>
#include <map>

namespace dgtor {

TorGroup::TorGroup(int degree, std::vector<TorPiece> pieces) : degree_(degree), pieces_(std::move(pieces)) {
  for (std::size_t k = 0; k < pieces_.size(); ++k) {
    const TorPiece& piece = pieces_[k];
    offset_.push_back(generators_.size());
    for (Index l = 0; l < piece.cells.size(); ++l) where_[piece.cells[l]] = {k, l};
    std::vector<Integer> ord = piece.group.orders();
    const auto& gens = piece.group.summary().generators;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      VectorAccumulator acc;
      for (const auto& t : gens[g]) acc.add(piece.cells[t.index], t.coeff);
      generators_.push_back(acc.take());
      orders_.push_back(ord[g]);
      generator_length_.push_back(piece.p);
    }
  }
}

ModuleSummary TorGroup::summary() const {
  ModuleSummary s;
  for (std::size_t g = 0; g < orders_.size(); ++g) {
    if (orders_[g] == 0) ++s.free_rank;
  }
  for (const auto& piece : pieces_) {
    const auto& t = piece.group.summary().torsion;
    s.torsion.insert(s.torsion.end(), t.begin(), t.end());
  }
  std::sort(s.torsion.begin(), s.torsion.end());
  s.generators = generators_;
  return s;
}

Coordinates TorGroup::coordinates(const SparseVector& cycle) const {
  std::vector<std::vector<Term>> split(pieces_.size());
  for (const auto& t : cycle) {
    auto it = where_.find(t.index);
    if (it == where_.end()) throw NotACycle("vector has terms outside total degree " + std::to_string(degree_));
    split[it->second.first].push_back({it->second.second, t.coeff});
  }
  Coordinates out;
  for (std::size_t k = 0; k < pieces_.size(); ++k) {
    Coordinates c = pieces_[k].group.coordinates(SparseVector::from_terms(std::move(split[k])));
    out.insert(out.end(), c.begin(), c.end());
  }
  return normalize(std::move(out));
}

SparseVector TorGroup::cycle_of(const Coordinates& c) const {
  if (c.size() != generators_.size()) throw std::invalid_argument("coordinate vector has the wrong length");
  VectorAccumulator acc;
  for (std::size_t g = 0; g < c.size(); ++g) {
    if (denominator(c[g]) != 1) throw std::invalid_argument("cycle_of needs integral coordinates");
    acc.add(generators_[g], numerator(c[g]));
  }
  return acc.take();
}

namespace {

// Matrix of d restricted to `from` cells, with rows indexed by position in `to`.
SparseMatrix restricted(const GradedMap& d, const std::vector<Index>& from, const std::vector<Index>& to,
                        const std::unordered_map<Index, Index>& position, const std::vector<int>& length, int p) {
  std::vector<SparseVector> cols;
  cols.reserve(from.size());
  for (Index c : from) {
    std::vector<Term> terms;
    for (const auto& t : d.image(c)) {
      auto it = position.find(t.index);
      if (it == position.end() || length[t.index] != p) throw std::logic_error("differential leaves the expected bidegree");
      terms.push_back({it->second, t.coeff});
    }
    cols.push_back(SparseVector::from_terms(std::move(terms)));
  }
  return SparseMatrix::from_columns(to.size(), std::move(cols));
}

}  // namespace

TorPtr BigradedTor::compute(TorComplex c, const CoefficientRing& ring, TsbPtr bar, int max_degree) {
  auto tor = std::shared_ptr<BigradedTor>(new BigradedTor());
  tor->ring_ = ring;
  tor->bar_ = std::move(bar);
  tor->complex_ = std::move(c);
  const ChainComplex& cx = tor->complex_.complex;
  const GradedBasis& b = *cx.basis;
  int top = b.cutoff() - 1;
  if (max_degree >= 0) {
    if (max_degree > top) {
      throw CutoffTooSmall("Tor in degree " + std::to_string(max_degree) + " needs cells through degree " +
                           std::to_string(max_degree + 1));
    }
    top = max_degree;
  }

  if (!tor->complex_.bigraded) {
    for (int n = 0; n <= top; ++n) {
      TorPiece piece{-1, homology_in_degree(cx, ring, n), {}};
      for (Index i = b.begin_of(n); i < b.end_of(n); ++i) piece.cells.push_back(i);
      std::vector<TorPiece> pieces;
      if (!piece.cells.empty()) pieces.push_back(std::move(piece));
      tor->degrees_.emplace_back(n, std::move(pieces));
    }
    return tor;
  }

  // cells grouped by (total degree, length)
  const auto& length = tor->complex_.length;
  std::map<std::pair<int, int>, std::vector<Index>> blocks;
  std::unordered_map<Index, Index> position;
  for (int n = 0; n <= std::min(top + 1, b.cutoff()); ++n) {
    for (Index i = b.begin_of(n); i < b.end_of(n); ++i) {
      auto& blk = blocks[{n, length[i]}];
      position[i] = blk.size();
      blk.push_back(i);
    }
  }
  static const std::vector<Index> none;
  auto block = [&](int n, int p) -> const std::vector<Index>& {
    auto it = blocks.find({n, p});
    return it == blocks.end() ? none : it->second;
  };
  for (int n = 0; n <= top; ++n) {
    std::vector<TorPiece> pieces;
    for (const auto& [key, cells] : blocks) {
      if (key.first != n) continue;
      int p = key.second;
      SparseMatrix d_in = restricted(cx.differential, block(n - 1, p + 1), cells, position, length, p);
      SparseMatrix d_out = restricted(cx.differential, cells, block(n + 1, p - 1), position, length, p - 1);
      pieces.push_back({p, HomologyGroup::compute(d_in, d_out, ring), cells});
    }
    tor->degrees_.emplace_back(n, std::move(pieces));
  }
  return tor;
}

const TorGroup& BigradedTor::degree(int n) const {
  if (n < 0 || n > max_degree()) {
    throw CutoffTooSmall("Tor in degree " + std::to_string(n) + " was not computed (tracked through " +
                         std::to_string(max_degree()) + ")");
  }
  return degrees_[n];
}

ModuleSummary BigradedTor::bidegree(int p, int q) const {
  if (!bigraded()) throw std::logic_error("Tor was computed by total degree only");
  const TorGroup& g = degree(q - p);
  for (const auto& piece : g.pieces()) {
    if (piece.p != p) continue;
    ModuleSummary s = piece.group.summary();
    for (auto& v : s.generators) {
      VectorAccumulator acc;
      for (const auto& t : v) acc.add(piece.cells[t.index], t.coeff);
      v = acc.take();
    }
    return s;
  }
  return {};
}

std::vector<std::size_t> BigradedTor::ranks() const {
  std::vector<std::size_t> out;
  for (const auto& g : degrees_) out.push_back(g.rank());
  return out;
}

Coordinates BigradedTor::unit() const { return degree(0).coordinates(SparseVector::unit(0)); }

TorPtr tor_bigraded(const TsbPtr& bar, const CoefficientRing& ring, int max_degree) {
  TorComplex c{bar->complex(), bar->lengths(), bar->has_zero_differentials(), {}};
  return BigradedTor::compute(std::move(c), ring, bar, max_degree);
}

}  // namespace dgtor
