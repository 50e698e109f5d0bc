#include "dgtor/tor/tor_map.hpp"

#include "dgtor/core/errors.hpp"
#include "dgtor/homotopy/path.hpp"

#include <algorithm>

namespace dgtor {

Coordinates TorMap::apply(int n, const Coordinates& c) const {
  const auto& m = matrices.at(n);
  Coordinates out(m.size());
  for (std::size_t r = 0; r < m.size(); ++r) {
    Rational s = 0;
    for (std::size_t j = 0; j < c.size(); ++j) s += m[r][j] * c[j];
    out[r] = s;
  }
  return target->degree(n).normalize(std::move(out));
}

namespace {

bool same_invariants(const TorGroup& a, const TorGroup& b) {
  ModuleSummary x = a.summary(), y = b.summary();
  return x.free_rank == y.free_rank && x.torsion == y.torsion;
}

}  // namespace

bool TorMap::is_isomorphism() const {
  for (int n = 0; n <= max_degree(); ++n) {
    const TorGroup& s = source->degree(n);
    const TorGroup& t = target->degree(n);
    if (!same_invariants(s, t)) return false;
    for (std::size_t k = 0; k < t.rank(); ++k) {
      Coordinates e(t.rank(), 0);
      e[k] = 1;
      if (!solve_modular_system(matrices[n], e, t.orders(), target->ring())) return false;
    }
  }
  return true;
}

GradedMap two_sided_bar_map(const TwoSidedBar& source, const TwoSidedBar& target, const AlgebraMorphism& f,
                            const AlgebraMorphism& u, const AlgebraMorphism& v) {
  if (f.source != source.base() || f.target != target.base() || u.source != source.left() ||
      u.target != target.left() || v.source != source.right() || v.target != target.right()) {
    throw std::invalid_argument("two_sided_bar_map: maps do not match the two-sided bars");
  }
  const BarConstruction& bs = *source.bar();
  const BarConstruction& bt = *target.bar();
  return GradedMap::from_function(source.basis(), target.basis(), 0, [&](Index c) {
    const auto& cell = source.cell(c);
    const Word& w = bs.word(cell.word);
    SparseVector fw;
    if (w.empty()) {
      fw = SparseVector::unit(0);
    } else {
      std::vector<SparseVector> letters;
      for (Index a : w) letters.push_back(f.map.image(a));
      fw = bt.word_vector(letters);
    }
    return target.element(u.map.image(cell.x), fw, v.map.image(cell.y));
  });
}

TorMap induced_tor_map(const GradedMap& chain, const TorPtr& source, const TorPtr& target) {
  TorMap m{source, target, {}};
  int top = std::min(source->max_degree(), target->max_degree());
  for (int n = 0; n <= top; ++n) {
    const TorGroup& s = source->degree(n);
    const TorGroup& t = target->degree(n);
    std::vector<Coordinates> mat(t.rank(), Coordinates(s.rank(), 0));
    for (std::size_t j = 0; j < s.rank(); ++j) {
      Coordinates c = t.coordinates(chain.apply(s.generators()[j]).reduced(target->ring()));
      for (std::size_t r = 0; r < c.size(); ++r) mat[r][j] = c[r];
    }
    m.matrices.push_back(std::move(mat));
  }
  return m;
}

namespace {

void require_square(const AlgebraMorphism& top, const AlgebraMorphism& side, const AlgebraMorphism& bottom,
                    const AlgebraMorphism& f, const CoefficientRing& ring, const char* which) {
  // side o top == bottom o f
  GradedMap a = compose(side.map, top.map).reduced(ring);
  GradedMap b = compose(bottom.map, f.map).reduced(ring);
  if (!(a == b)) throw SquaresDoNotCommute(std::string("the ") + which + " square does not commute");
}

}  // namespace

TorMap tor_map(const TorPtr& source, const TorPtr& target, const AlgebraMorphism& f, const AlgebraMorphism& u,
               const AlgebraMorphism& v) {
  if (!source->bar() || !target->bar()) throw std::invalid_argument("tor_map needs Tor computed by two-sided bars");
  const TwoSidedBar& s = *source->bar();
  const TwoSidedBar& t = *target->bar();
  require_square(s.left_map(), u, t.left_map(), f, target->ring(), "left");
  require_square(s.right_map(), v, t.right_map(), f, target->ring(), "right");
  return induced_tor_map(two_sided_bar_map(s, t, f, u, v), source, target);
}

TorMap compose(const TorMap& g, const TorMap& f) {
  if (f.target != g.source) throw std::invalid_argument("compose: Tor maps do not match");
  TorMap m{f.source, g.target, {}};
  int top = std::min(f.max_degree(), g.max_degree());
  for (int n = 0; n <= top; ++n) {
    std::size_t cols = f.source->degree(n).rank();
    std::vector<Coordinates> mat(g.target->degree(n).rank(), Coordinates(cols, 0));
    for (std::size_t j = 0; j < cols; ++j) {
      Coordinates c(cols, 0);
      c[j] = 1;
      Coordinates img = g.apply(n, f.apply(n, c));
      for (std::size_t r = 0; r < img.size(); ++r) mat[r][j] = img[r];
    }
    m.matrices.push_back(std::move(mat));
  }
  return m;
}

Coordinates preimage(const TorMap& m, int n, const Coordinates& c) {
  auto x = solve_modular_system(m.matrices.at(n), c, m.target->degree(n).orders(), m.target->ring());
  if (!x) throw std::domain_error("class has no preimage in degree " + std::to_string(n));
  return m.source->degree(n).normalize(std::move(*x));
}

namespace {

void require_homotopy(const DgaHomotopy& h, const GradedMap& f0, const GradedMap& f1, const CoefficientRing& ring,
                      const char* which) {
  CheckReport r = check_homotopy(h);
  if (!r.ok()) throw InvalidHomotopy(std::string(which) + ": " + r.describe());
  if (!(h.f0.map.reduced(ring) == f0.reduced(ring)) || !(h.f1.map.reduced(ring) == f1.reduced(ring))) {
    throw InvalidHomotopy(std::string(which) + ": endpoints do not match the square");
  }
}

}  // namespace

TorMap tor_map_with_homotopy(const TorPtr& source, const TorPtr& target, const AlgebraMorphism& f,
                             const AlgebraMorphism& u, const AlgebraMorphism& v, const DgaHomotopy& h_x,
                             const DgaHomotopy& h_y) {
  if (!source->bar() || !target->bar()) throw std::invalid_argument("tor_map needs Tor computed by two-sided bars");
  const TwoSidedBar& s = *source->bar();
  const TwoSidedBar& t = *target->bar();
  const CoefficientRing& ring = target->ring();
  require_homotopy(h_x, compose(u.map, s.left_map().map), compose(t.left_map().map, f.map), ring, "left homotopy");
  require_homotopy(h_y, compose(v.map, s.right_map().map), compose(t.right_map().map, f.map), ring,
                   "right homotopy");
  const int cutoff = std::min(s.cutoff(), t.cutoff());
  const int top = std::min(source->max_degree(), target->max_degree());
  const AlgebraPtr& a1 = s.base();

  // B(X, A', Y) through u phi_X' and v phi_Y'
  AlgebraMorphism uphi = compose(u, s.left_map());
  AlgebraMorphism vphi = compose(v, s.right_map());
  TsbPtr b1 = two_sided_bar(uphi, vphi, cutoff);
  TorPtr t1 = tor_bigraded(b1, ring, top);
  AlgebraMorphism id = AlgebraMorphism::identity(a1);
  TorMap m1 = induced_tor_map(two_sided_bar_map(s, *b1, id, u, v), source, t1);

  // B(PX, A', PY) through the right homotopies
  PathPtr px = path_object(t.left());
  PathPtr py = path_object(t.right());
  TsbPtr b2 = two_sided_bar(right_homotopy(h_x, px), right_homotopy(h_y, py), cutoff);
  TorPtr t2 = tor_bigraded(b2, ring, top);
  TorMap m2 = induced_tor_map(two_sided_bar_map(*b2, *b1, id, px->projection(0), py->projection(0)), t2, t1);
  TorMap m3 = induced_tor_map(two_sided_bar_map(*b2, t, f, px->projection(1), py->projection(1)), t2, target);

  TorMap out{source, target, {}};
  for (int n = 0; n <= top; ++n) {
    std::size_t cols = source->degree(n).rank();
    std::vector<Coordinates> mat(target->degree(n).rank(), Coordinates(cols, 0));
    for (std::size_t j = 0; j < cols; ++j) {
      Coordinates c(cols, 0);
      c[j] = 1;
      Coordinates img = m3.apply(n, preimage(m2, n, m1.apply(n, c)));
      for (std::size_t r = 0; r < img.size(); ++r) mat[r][j] = img[r];
    }
    out.matrices.push_back(std::move(mat));
  }
  return out;
}

}  // namespace dgtor
