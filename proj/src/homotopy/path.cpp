#include "dgtor/homotopy/path.hpp"

#include "dgtor/core/errors.hpp"

namespace dgtor {
namespace {

std::vector<std::string> quiver_names(int n) {
  if (n == 1) return {"v0", "v1", "e"};
  if (n == 2) return {"(v0,0)", "(v1,v0)", "(0,v1)", "(e,0)", "(0,e)"};
  std::vector<std::string> out;
  for (int i = 0; i <= n; ++i) out.push_back("w" + std::to_string(i));
  for (int j = 1; j <= n; ++j) out.push_back("e" + std::to_string(j));
  return out;
}

std::string factor_name(const std::string& s) {
  return s.find("⊗") == std::string::npos ? s : "(" + s + ")";
}

}  // namespace

AlgebraPtr quiver_algebra(int n, int cutoff) {
  if (n < 1) throw std::invalid_argument("an interval needs at least one edge");
  if (cutoff < 1) throw CutoffTooSmall("interval algebras need cutoff at least 1");
  auto names = quiver_names(n);
  std::vector<GradedBasis::Element> els;
  for (int i = 0; i <= 2 * n; ++i) els.push_back({names[i], i <= n ? 0 : 1});
  BasisPtr basis = GradedBasis::make(els, cutoff);
  auto edge = [n](int j) { return static_cast<Index>(n + j); };
  std::vector<SparseVector> d(basis->size());
  d[0] = SparseVector::unit(edge(1), -1);
  for (int i = 1; i < n; ++i) d[i] = SparseVector::unit(edge(i)) - SparseVector::unit(edge(i + 1));
  d[n] = SparseVector::unit(edge(n));
  Multiplication product = [n](Index x, Index y) {
    const Index nn = static_cast<Index>(n);
    const bool xv = x <= nn, yv = y <= nn;
    if (xv && yv) return x == y ? SparseVector::unit(x) : SparseVector();
    if (xv && !yv) return x + 1 == y - nn ? SparseVector::unit(y) : SparseVector();
    if (!xv && yv) return x - nn == y ? SparseVector::unit(x) : SparseVector();
    return SparseVector();
  };
  VectorAccumulator unit;
  for (int i = 0; i <= n; ++i) unit.add(static_cast<Index>(i), 1);
  std::string name = n == 1 ? "I" : "I" + std::to_string(n);
  return DgAlgebra::make(
      {name, basis, GradedMap::from_images(basis, basis, 1, std::move(d)), product, unit.take(), false});
}

PathPtr PathObject::make(const AlgebraPtr& a, int edges) {
  if (!a->augmented()) throw std::invalid_argument("path objects need an augmented algebra");
  auto p = std::make_shared<PathObject>();
  p->base_ = a;
  p->edges_ = edges;
  p->quiver_ = quiver_algebra(edges, std::max(1, a->cutoff()));
  const GradedBasis& kb = *p->quiver_->basis();
  const GradedBasis& ab = *a->basis();

  std::vector<GradedBasis::Element> els{{"1", 0}};
  std::vector<std::pair<Index, Index>> created{{0, 0}};
  for (Index k = 0; k < kb.size(); ++k) {
    for (Index x = 1; x < ab.size(); ++x) {
      int degree = kb.degree(k) + ab.degree(x);
      if (degree > a->cutoff()) continue;
      els.push_back({factor_name(kb.name(k)) + "⊗" + factor_name(ab.name(x)), degree});
      created.emplace_back(k, x);
    }
  }
  std::vector<Index> pos;
  BasisPtr basis = GradedBasis::make(std::move(els), a->cutoff(), &pos);
  p->factors_.resize(created.size());
  for (Index i = 0; i < created.size(); ++i) {
    p->factors_[pos[i]] = created[i];
    if (i > 0) p->index_[created[i].first * ab.size() + created[i].second] = pos[i];
  }

  struct Table {
    AlgebraPtr a, k;
    std::vector<std::pair<Index, Index>> factors;
    std::unordered_map<std::uint64_t, Index> index;
  };
  auto table = std::make_shared<Table>(Table{a, p->quiver_, p->factors_, p->index_});
  Multiplication product = [table](Index x, Index y) {
    if (x == 0) return SparseVector::unit(y);
    if (y == 0) return SparseVector::unit(x);
    auto [k1, a1] = table->factors[x];
    auto [k2, a2] = table->factors[y];
    SparseVector kk = table->k->multiply(k1, k2);
    if (kk.is_zero()) return SparseVector();
    SparseVector ab = table->a->multiply(a1, a2);
    const int sign = sign_power(static_cast<long long>(table->a->basis()->degree(a1)) * table->k->basis()->degree(k2));
    VectorAccumulator acc;
    const std::size_t n = table->a->basis()->size();
    for (const auto& s : kk) {
      for (const auto& t : ab) {
        if (t.index == 0) continue;
        auto it = table->index.find(s.index * n + t.index);
        if (it != table->index.end()) acc.add(it->second, sign * s.coeff * t.coeff);
      }
    }
    return acc.take();
  };

  const PathObject* self = p.get();
  GradedMap d = GradedMap::from_function(basis, basis, 1, [&](Index i) {
    if (i == 0) return SparseVector();
    auto [k, x] = self->factors_[i];
    SparseVector out;
    for (const auto& s : p->quiver_->differential().image(k)) out += self->pair(s.index, SparseVector::unit(x, s.coeff));
    out += self->pair(k, a->differential().image(x)).scaled(sign_power(kb.degree(k)));
    return out;
  });
  p->algebra_ = DgAlgebra::make({(edges == 1 ? "P(" : edges == 2 ? "D(" : edges == 3 ? "T(" : "P" + std::to_string(edges) + "(") +
                                     a->name() + ")",
                                 basis, std::move(d), product, SparseVector::unit(0), true});
  return p;
}

std::optional<Index> PathObject::index(Index k, Index a) const {
  auto it = index_.find(k * base_->basis()->size() + a);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SparseVector PathObject::pair(Index k, const SparseVector& v) const {
  VectorAccumulator acc;
  for (const auto& t : v) {
    if (t.index == 0) continue;
    if (auto i = index(k, t.index)) acc.add(*i, t.coeff);
  }
  return acc.take();
}

AlgebraMorphism PathObject::projection(int i) const {
  GradedMap m = GradedMap::from_function(algebra_->basis(), base_->basis(), 0, [&](Index j) {
    if (j == 0) return SparseVector::unit(0);
    auto [k, x] = factors_[j];
    return k == vertex(i) ? SparseVector::unit(x) : SparseVector();
  });
  return {algebra_, base_, std::move(m)};
}

AlgebraMorphism PathObject::segment(int j, const PathPtr& p) const {
  if (p->edges() != 1 || p->base() != base_) throw std::invalid_argument("segment needs the path object of the base");
  GradedMap m = GradedMap::from_function(algebra_->basis(), p->algebra()->basis(), 0, [&](Index i) {
    if (i == 0) return SparseVector::unit(0);
    auto [k, x] = factors_[i];
    SparseVector ex = SparseVector::unit(x);
    if (k == vertex(j - 1)) return p->pair(p->vertex(0), ex);
    if (k == vertex(j)) return p->pair(p->vertex(1), ex);
    if (k == edge(j)) return p->pair(p->edge(1), ex);
    return SparseVector();
  });
  return {algebra_, p->algebra(), std::move(m)};
}

AlgebraMorphism PathObject::section() const {
  GradedMap m = GradedMap::from_function(base_->basis(), algebra_->basis(), 0, [&](Index x) {
    if (x == 0) return SparseVector::unit(0);
    SparseVector out;
    for (int i = 0; i <= edges_; ++i) out += pair(vertex(i), SparseVector::unit(x));
    return out;
  });
  return {base_, algebra_, std::move(m)};
}

AlgebraMorphism right_homotopy(const DgaHomotopy& h, const PathPtr& p, bool validate) {
  if (p->edges() != 1 || p->base() != h.f0.target) throw std::invalid_argument("right_homotopy: path object mismatch");
  if (validate) {
    CheckReport r = check_homotopy(h);
    if (!r.ok()) throw InvalidHomotopy(r.describe());
  }
  const AlgebraPtr& src = h.f0.source;
  GradedMap m = GradedMap::from_function(src->basis(), p->algebra()->basis(), 0, [&](Index i) {
    if (i == 0) return SparseVector::unit(0);
    SparseVector out = p->pair(p->vertex(0), h.f0.map.image(i));
    out -= p->pair(p->edge(1), h.h.image(i));
    out += p->pair(p->vertex(1), h.f1.map.image(i));
    return out;
  });
  return {src, p->algebra(), std::move(m)};
}

SquareToDouble square_to_double(const AlgebraPtr& a) {
  PathPtr p = path_object(a);
  TensorAlgebra square = algebra_tensor(p->algebra(), p->algebra());
  TensorAlgebra base = algebra_tensor(a, a);
  PathPtr target = double_path(base.algebra);
  const GradedBasis& ab = *a->basis();
  const GradedBasis& ib = *p->quiver()->basis();

  // r^I on I (x) I; indices of the interval are v0 = 0, v1 = 1, e = 2
  auto r_interval = [&](Index alpha, Index beta) -> std::optional<Index> {
    if (alpha == 0 && beta == 0) return target->vertex(0);
    if (alpha == 2 && beta == 0) return target->edge(1);
    if (alpha == 1 && beta == 0) return target->vertex(1);
    if (alpha == 1 && beta == 2) return target->edge(2);
    if (alpha == 1 && beta == 1) return target->vertex(2);
    return std::nullopt;
  };
  // an element of PA as terms (interval element, algebra element)
  auto expand = [&](Index i) -> std::vector<std::pair<Index, Index>> {
    if (i == 0) return {{0, 0}, {1, 0}};
    return {p->factors(i)};
  };
  GradedMap m = GradedMap::from_function(square.algebra->basis(), target->algebra()->basis(), 0, [&](Index i) {
    auto [x, y] = square.tensor->factors(i);
    if (x == 0 && y == 0) return SparseVector::unit(0);
    VectorAccumulator acc;
    for (auto [alpha, s] : expand(x)) {
      for (auto [beta, t] : expand(y)) {
        auto k = r_interval(alpha, beta);
        if (!k) continue;
        auto st = base.index(s, t);
        if (!st) continue;
        auto j = target->index(*k, *st);
        if (j) acc.add(*j, sign_power(static_cast<long long>(ab.degree(s)) * ib.degree(beta)));
      }
    }
    return acc.take();
  });
  AlgebraMorphism map{square.algebra, target->algebra(), std::move(m)};
  return {std::move(p), std::move(square), std::move(base), std::move(target), std::move(map)};
}

}  // namespace dgtor
