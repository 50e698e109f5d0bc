#include "dgtor/tor/koszul.hpp"

#include "dgtor/core/errors.hpp"

#include <bit>

namespace dgtor {

KoszulPtr KoszulComplex::make(const FreeGcaPtr& base, const AlgebraMorphism& left, const AlgebraMorphism& right,
                              int cutoff) {
  if (left.source != base->algebra() || right.source != base->algebra()) {
    throw std::invalid_argument("koszul complex: maps must start at the given polynomial algebra");
  }
  const auto& gens = base->presentation().generators;
  for (const auto& g : gens) {
    if (g.degree % 2 != 0 && !g.polynomial) {
      throw OddGeneratorInBase("generator '" + g.name + "' is exterior; the Koszul resolution is not free");
    }
  }
  if (gens.size() > 30) throw std::invalid_argument("koszul complex supports at most 30 generators");
  const DgAlgebra& x = *left.target;
  const DgAlgebra& y = *right.target;
  if (cutoff < 0) cutoff = std::min(x.cutoff(), y.cutoff());
  if (x.cutoff() < cutoff || y.cutoff() < cutoff) {
    throw CutoffTooSmall("Koszul complex through degree " + std::to_string(cutoff) + " needs X and Y through it");
  }

  auto k = std::shared_ptr<KoszulComplex>(new KoszulComplex());
  k->base_ = base;
  k->left_ = left;
  k->right_ = right;
  const std::uint32_t masks = 1u << gens.size();
  for (const auto& g : gens) k->weight_.push_back(g.degree - 1);
  k->stride_ = masks;
  const GradedBasis& bx = *x.basis();
  const GradedBasis& by = *y.basis();
  auto mask_degree = [&](std::uint32_t m) {
    int s = 0;
    for (std::size_t g = 0; g < gens.size(); ++g)
      if (m >> g & 1u) s += k->weight_[g];
    return s;
  };

  std::vector<GradedBasis::Element> names;
  std::vector<int> length;
  for (int n = 0; n <= cutoff; ++n) {
    for (std::uint32_t m = 0; m < masks; ++m) {
      int de = mask_degree(m);
      for (int dx = 0; dx + de <= n; ++dx) {
        int dy = n - de - dx;
        for (Index i = bx.begin_of(dx); i < bx.end_of(dx); ++i) {
          for (Index j = by.begin_of(dy); j < by.end_of(dy); ++j) {
            k->index_.emplace((i * by.size() + j) * k->stride_ + m, k->cells_.size());
            k->cells_.push_back({i, j, m});
            std::string name = bx.name(i) + "⊗" + by.name(j);
            for (std::size_t g = 0; g < gens.size(); ++g)
              if (m >> g & 1u) name += "⊗e_" + gens[g].name;
            names.push_back({std::move(name), n});
            length.push_back(std::popcount(m));
          }
        }
      }
    }
  }
  BasisPtr basis = GradedBasis::make(std::move(names), cutoff);

  // shared with the product so that it outlives this object
  struct Shared {
    AlgebraPtr x, y;
    std::vector<Cell> cells;
    std::vector<int> weight;
    std::unordered_map<std::uint64_t, Index> index;
    std::uint64_t stride, ysize;
    std::optional<Index> find(Index i, Index j, std::uint32_t m) const {
      auto it = index.find((i * ysize + j) * stride + m);
      if (it == index.end()) return std::nullopt;
      return it->second;
    }
    int edeg(std::uint32_t m) const {
      int s = 0;
      for (std::size_t g = 0; g < weight.size(); ++g)
        if (m >> g & 1u) s += weight[g];
      return s;
    }
    // e_S e_T as (sign, mask), or sign 0 when they overlap
    std::pair<int, std::uint32_t> merge(std::uint32_t s, std::uint32_t t) const {
      if (s & t) return {0, 0};
      long long e = 0;
      for (std::size_t a = 0; a < weight.size(); ++a) {
        if (!(s >> a & 1u)) continue;
        for (std::size_t b = 0; b < a; ++b)
          if (t >> b & 1u) e += static_cast<long long>(weight[a]) * weight[b];
      }
      return {sign_power(e), s | t};
    }
    // sum of x' (x) y' (x) e_m over the products of the given vectors
    void emit(VectorAccumulator& acc, const SparseVector& xv, const SparseVector& yv, std::uint32_t m,
              const Integer& c) const {
      for (const auto& a : xv)
        for (const auto& b : yv)
          if (auto idx = find(a.index, b.index, m)) acc.add(*idx, c * a.coeff * b.coeff);
    }
  };
  auto sh = std::make_shared<Shared>();
  sh->x = left.target;
  sh->y = right.target;
  sh->cells = k->cells_;
  sh->weight = k->weight_;
  sh->index = k->index_;
  sh->stride = k->stride_;
  sh->ysize = by.size();

  std::vector<SparseVector> phi_x, phi_y;
  for (const auto& g : gens) {
    Index gi = base->generator(g.name);
    phi_x.push_back(left.map.image(gi));
    phi_y.push_back(right.map.image(gi));
  }
  GradedMap d = GradedMap::from_function(basis, basis, 1, [&](Index c) {
    const Cell& cell = sh->cells[c];
    const int deg_x = bx.degree(cell.x), deg_y = by.degree(cell.y);
    const SparseVector ux = SparseVector::unit(cell.x), uy = SparseVector::unit(cell.y);
    VectorAccumulator acc;
    sh->emit(acc, x.differential().image(cell.x), uy, cell.mask, 1);
    sh->emit(acc, ux, y.differential().image(cell.y), cell.mask, sign_power(deg_x));
    long long before = 0;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      if (!(cell.mask >> g & 1u)) continue;
      std::uint32_t rest = cell.mask & ~(1u << g);
      const int dg = gens[g].degree;
      int s = sign_power(deg_x + deg_y + before + static_cast<long long>(dg) * before);
      // (x (x) y)(a (x) 1) = (-1)^{|y||a|} xa (x) y
      sh->emit(acc, x.multiply(ux, phi_x[g]), uy, rest, s * sign_power(static_cast<long long>(deg_y) * dg));
      sh->emit(acc, ux, y.multiply(uy, phi_y[g]), rest, -s);
      before += k->weight_[g];
    }
    return acc.take();
  });

  Multiplication product = [sh](Index a, Index b) {
    const Cell& p = sh->cells[a];
    const Cell& q = sh->cells[b];
    auto [s, m] = sh->merge(p.mask, q.mask);
    if (s == 0) return SparseVector();
    const int dx2 = sh->x->basis()->degree(q.x), dy1 = sh->y->basis()->degree(p.y);
    const int dy2 = sh->y->basis()->degree(q.y);
    const int e1 = sh->edeg(p.mask);
    long long e = static_cast<long long>(dx2) * (dy1 + e1) + static_cast<long long>(dy2) * e1;
    VectorAccumulator acc;
    sh->emit(acc, sh->x->multiply(p.x, q.x), sh->y->multiply(p.y, q.y), m, s * sign_power(e));
    return acc.take();
  };

  bool zero = x.has_zero_differential() && y.has_zero_differential();
  k->complex_ = TorComplex{ChainComplex::make(basis, std::move(d)), std::move(length), zero, std::move(product)};
  return k;
}

std::optional<Index> KoszulComplex::find(Index x, Index y, std::uint32_t mask) const {
  auto it = index_.find((x * right_.target->basis()->size() + y) * stride_ + mask);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

TorPtr koszul_oracle(const FreeGcaPtr& base, const AlgebraMorphism& left, const AlgebraMorphism& right,
                     const CoefficientRing& ring, int max_degree) {
  int cutoff = max_degree >= 0 ? max_degree + 1 : -1;
  KoszulPtr k = KoszulComplex::make(base, left, right, cutoff);
  return BigradedTor::compute(k->tor_complex(), ring, nullptr, max_degree);
}

}  // namespace dgtor
