#include "dgtor/tor/two_sided_bar.hpp"

#include "dgtor/core/errors.hpp"

namespace dgtor {

namespace {

void require_connected(const DgAlgebra& a) {
  if (!a.augmented() || a.basis()->size_in_degree(0) != 1) {
    throw NotOneConnected("algebra '" + a.name() + "' is not connected");
  }
}

void require_morphism(const AlgebraMorphism& f, int max_degree) {
  CheckReport r = check_algebra_morphism(f, max_degree);
  if (!r.ok()) throw NotAChainMap(f.source->name() + " -> " + f.target->name() + ": " + r.describe());
}

}  // namespace

TsbPtr TwoSidedBar::make(const AlgebraMorphism& left, const AlgebraMorphism& right, int cutoff) {
  if (left.source != right.source) throw std::invalid_argument("two_sided_bar: maps have different sources");
  const DgAlgebra& x = *left.target;
  const DgAlgebra& a = *left.source;
  const DgAlgebra& y = *right.target;
  require_connected(x);
  require_connected(y);
  require_connected(a);
  if (cutoff < 0) cutoff = std::min({x.cutoff(), y.cutoff(), a.cutoff() - 1});
  if (x.cutoff() < cutoff || y.cutoff() < cutoff) {
    throw CutoffTooSmall("B(X, A, Y) through degree " + std::to_string(cutoff) + " needs X and Y through that degree");
  }
  require_morphism(left, cutoff);
  require_morphism(right, cutoff);

  auto t = std::shared_ptr<TwoSidedBar>(new TwoSidedBar());
  t->left_ = left;
  t->right_ = right;
  t->bar_ = BarConstruction::make(left.source, cutoff);
  t->zero_differentials_ = x.has_zero_differential() && a.has_zero_differential() && y.has_zero_differential();
  const GradedBasis& bx = *x.basis();
  const GradedBasis& by = *y.basis();
  const GradedBasis& bw = *t->bar_->basis();
  t->stride_w_ = by.size();
  t->stride_x_ = bw.size() * by.size();

  std::vector<GradedBasis::Element> names;
  for (int n = 0; n <= cutoff; ++n) {
    for (int dx = 0; dx <= n; ++dx) {
      for (Index i = bx.begin_of(dx); i < bx.end_of(dx); ++i) {
        for (int dw = 0; dx + dw <= n; ++dw) {
          for (Index w = bw.begin_of(dw); w < bw.end_of(dw); ++w) {
            int dy = n - dx - dw;
            for (Index j = by.begin_of(dy); j < by.end_of(dy); ++j) {
              t->index_.emplace(i * t->stride_x_ + w * t->stride_w_ + j, t->cells_.size());
              t->cells_.push_back({i, w, j});
              t->lengths_.push_back(static_cast<int>(t->bar_->word(w).size()));
              names.push_back({bx.name(i) + "⊗" + bw.name(w) + "⊗" + by.name(j), n});
            }
          }
        }
      }
    }
  }
  BasisPtr basis = GradedBasis::make(std::move(names), cutoff);

  const TwoSidedBar& self = *t;
  const GradedMap& dw = t->bar_->coalgebra()->differential();
  GradedMap d = GradedMap::from_function(basis, basis, 1, [&](Index c) {
    const Cell& k = self.cells_[c];
    const Word& w = self.bar_->word(k.word);
    const int deg_x = bx.degree(k.x), deg_w = bw.degree(k.word);
    const SparseVector ux = SparseVector::unit(k.x), uw = SparseVector::unit(k.word), uy = SparseVector::unit(k.y);
    SparseVector out = self.element(x.differential().image(k.x), uw, uy);
    out.add_scaled(self.element(ux, dw.image(k.word), uy), sign_power(deg_x));
    out.add_scaled(self.element(ux, uw, y.differential().image(k.y)), sign_power(deg_x + deg_w));
    if (!w.empty()) {
      SparseVector xa = x.multiply(ux, left.map.image(w.front()));
      if (auto rest = self.bar_->find(Word(w.begin() + 1, w.end()))) {
        out.add_scaled(self.element(xa, SparseVector::unit(*rest), uy), sign_power(deg_x));
      }
      Word head(w.begin(), w.end() - 1);
      SparseVector ay = y.multiply(right.map.image(w.back()), uy);
      if (auto front = self.bar_->find(head)) {
        out.add_scaled(self.element(ux, SparseVector::unit(*front), ay), -sign_power(deg_x + bw.degree(*front)));
      }
    }
    return out;
  });
  t->complex_ = ChainComplex::make(basis, std::move(d));
  return t;
}

std::optional<Index> TwoSidedBar::find(Index x, Index word, Index y) const {
  auto it = index_.find(x * stride_x_ + word * stride_w_ + y);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SparseVector TwoSidedBar::element(const SparseVector& x, const SparseVector& w, const SparseVector& y) const {
  VectorAccumulator acc;
  for (const auto& a : x)
    for (const auto& b : w)
      for (const auto& c : y)
        if (auto k = find(a.index, b.index, c.index)) acc.add(*k, a.coeff * b.coeff * c.coeff);
  return acc.take();
}

}  // namespace dgtor
