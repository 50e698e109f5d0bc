#include "dgtor/tor/product.hpp"

#include "dgtor/core/errors.hpp"

#include <functional>
#include <sstream>

namespace dgtor {

const Coordinates& RingStructure::product(int n1, Index i, int n2, Index j) const {
  auto it = table.find({static_cast<std::size_t>(n1), i, static_cast<std::size_t>(n2), j});
  if (it == table.end()) throw CutoffTooSmall("product outside the tracked range");
  return it->second;
}

Coordinates RingStructure::multiply(int n1, const Coordinates& a, int n2, const Coordinates& b) const {
  const TorGroup& g = tor->degree(n1 + n2);
  Coordinates out(g.rank(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      const Coordinates& p = product(n1, i, n2, j);
      for (std::size_t k = 0; k < p.size(); ++k) out[k] += a[i] * b[j] * p[k];
    }
  }
  return g.normalize(std::move(out));
}

namespace {

struct PairHash {
  std::size_t operator()(const std::pair<Index, Index>& p) const noexcept {
    return std::hash<Index>()(p.first) * 0x9e3779b97f4a7c15ULL ^ std::hash<Index>()(p.second);
  }
};

}  // namespace

RingStructure ring_structure(const TorPtr& tor, const Multiplication& chain_product) {
  RingStructure r{tor, tor->max_degree(), tor->unit(), {}};
  const CoefficientRing& ring = tor->ring();
  std::unordered_map<std::pair<Index, Index>, SparseVector, PairHash> cache;
  auto cell_product = [&](Index a, Index b) -> const SparseVector& {
    auto it = cache.find({a, b});
    if (it != cache.end()) return it->second;
    return cache.emplace(std::make_pair(a, b), chain_product(a, b)).first->second;
  };
  const int top = tor->max_degree();
  for (int n1 = 0; n1 <= top; ++n1) {
    for (int n2 = 0; n1 + n2 <= top; ++n2) {
      const TorGroup& g1 = tor->degree(n1);
      const TorGroup& g2 = tor->degree(n2);
      const TorGroup& g = tor->degree(n1 + n2);
      for (Index i = 0; i < g1.rank(); ++i) {
        for (Index j = 0; j < g2.rank(); ++j) {
          VectorAccumulator acc;
          for (const auto& s : g1.generators()[i])
            for (const auto& t : g2.generators()[j]) acc.add(cell_product(s.index, t.index), s.coeff * t.coeff);
          r.table[{static_cast<std::size_t>(n1), i, static_cast<std::size_t>(n2), j}] =
              g.coordinates(acc.take().reduced(ring));
        }
      }
    }
  }
  return r;
}

CheckReport check_ring_axioms(const RingStructure& r) {
  CheckReport rep;
  const TorPtr& tor = r.tor;
  const int top = r.max_degree;
  auto basis_vector = [&](int n, Index i) {
    Coordinates c(tor->degree(n).rank(), 0);
    c[i] = 1;
    return tor->degree(n).normalize(std::move(c));
  };
  auto name = [](int n, Index i) { return "g" + std::to_string(n) + "_" + std::to_string(i); };
  for (int n = 0; n <= top; ++n) {
    for (Index i = 0; i < tor->degree(n).rank(); ++i) {
      Coordinates e = basis_vector(n, i);
      if (r.multiply(0, r.unit, n, e) != e || r.multiply(n, e, 0, r.unit) != e) rep.fail("unit", name(n, i));
    }
  }
  for (int n1 = 0; n1 <= top; ++n1) {
    for (int n2 = 0; n1 + n2 <= top; ++n2) {
      const TorGroup& g = tor->degree(n1 + n2);
      for (Index i = 0; i < tor->degree(n1).rank(); ++i) {
        for (Index j = 0; j < tor->degree(n2).rank(); ++j) {
          Coordinates ab = r.product(n1, i, n2, j);
          Coordinates ba = r.product(n2, j, n1, i);
          for (auto& c : ba) c *= sign_power(static_cast<long long>(n1) * n2);
          if (ab != g.normalize(ba)) rep.fail("graded commutativity", name(n1, i) + " * " + name(n2, j));
        }
      }
    }
  }
  for (int n1 = 0; n1 <= top; ++n1) {
    for (int n2 = 0; n1 + n2 <= top; ++n2) {
      for (int n3 = 0; n1 + n2 + n3 <= top; ++n3) {
        for (Index i = 0; i < tor->degree(n1).rank(); ++i) {
          for (Index j = 0; j < tor->degree(n2).rank(); ++j) {
            for (Index k = 0; k < tor->degree(n3).rank(); ++k) {
              Coordinates left = r.multiply(n1 + n2, r.product(n1, i, n2, j), n3, basis_vector(n3, k));
              Coordinates right = r.multiply(n1, basis_vector(n1, i), n2 + n3, r.product(n2, j, n3, k));
              if (left != right) rep.fail("associativity", name(n1, i) + " * " + name(n2, j) + " * " + name(n3, k));
            }
          }
        }
      }
    }
  }
  return rep;
}

std::optional<std::string> first_difference(const RingStructure& a, const RingStructure& b) {
  if (a.unit != b.unit) return "unit classes differ";
  const std::size_t top = static_cast<std::size_t>(std::min(a.max_degree, b.max_degree));
  for (const auto& [key, value] : a.table) {
    if (key[0] + key[2] > top) continue;
    auto it = b.table.find(key);
    if (it == b.table.end() || it->second != value) {
      std::ostringstream s;
      s << "product of generator " << key[1] << " in degree " << key[0] << " with generator " << key[3]
        << " in degree " << key[2];
      return s.str();
    }
  }
  return std::nullopt;
}

namespace {

using Letter = std::pair<int, Index>;  // (side, letter)

// (x1 (x) w1 (x) y1) (x) (x2 (x) w2 (x) y2) -> +-(x1 (x) x2) (x) nabla(w1 (x) w2) (x) (y1 (x) y2)
void exterior_cells(const TwoSidedBar& b1, Index c1, const TwoSidedBar& b2, Index c2,
                    const std::function<void(Index, Index, const std::vector<Letter>&, Index, Index, int)>& emit) {
  const auto& k1 = b1.cell(c1);
  const auto& k2 = b2.cell(c2);
  const Word& u = b1.bar()->word(k1.word);
  const Word& v = b2.bar()->word(k2.word);
  const GradedBasis& ga1 = *b1.base()->basis();
  const GradedBasis& ga2 = *b2.base()->basis();
  const int dx2 = b2.left()->basis()->degree(k2.x);
  const int dw1 = b1.bar()->basis()->degree(k1.word), dw2 = b2.bar()->basis()->degree(k2.word);
  const int dy1 = b1.right()->basis()->degree(k1.y);
  const long long outer = static_cast<long long>(dx2) * (dw1 + dy1) + static_cast<long long>(dy1) * dw2;

  std::vector<int> rest(u.size() + 1, 0);
  for (std::size_t k = u.size(); k-- > 0;) rest[k] = rest[k + 1] + ga1.degree(u[k]) - 1;
  std::vector<Letter> w;
  std::function<void(std::size_t, std::size_t, long long)> rec = [&](std::size_t p, std::size_t q, long long sign) {
    if (p == u.size() && q == v.size()) {
      emit(k1.x, k2.x, w, k1.y, k2.y, sign_power(sign));
      return;
    }
    if (p < u.size()) {
      w.push_back({0, u[p]});
      rec(p + 1, q, sign);
      w.pop_back();
    }
    if (q < v.size()) {
      w.push_back({1, v[q]});
      rec(p, q + 1, sign + static_cast<long long>(ga2.degree(v[q]) - 1) * rest[p]);
      w.pop_back();
    }
  };
  rec(0, 0, outer);
}

void require_commutative(const TwoSidedBar& b, const CoefficientRing& ring) {
  for (const AlgebraPtr& z : {b.left(), b.base(), b.right()}) {
    CheckReport r = check_commutative(*z, ring, std::min(b.cutoff() + 1, z->cutoff()));
    if (!r.ok()) throw NotCommutative("algebra '" + z->name() + "': " + r.describe());
  }
}

const TwoSidedBar& require_bar(const TorPtr& tor) {
  if (!tor->bar()) throw std::invalid_argument("product needs Tor computed by a two-sided bar");
  return *tor->bar();
}

}  // namespace

SparseVector ExteriorProduct::on_cells(Index c1, Index c2) const {
  const TwoSidedBar& b1 = *left->bar();
  const TwoSidedBar& b2 = *right->bar();
  VectorAccumulator acc;
  exterior_cells(b1, c1, b2, c2, [&](Index x1, Index x2, const std::vector<Letter>& w, Index y1, Index y2, int s) {
    auto xi = x.index(x1, x2);
    auto yi = y.index(y1, y2);
    if (!xi || !yi) return;
    Word word;
    for (auto [side, l] : w) {
      auto li = side == 0 ? a.index(l, 0) : a.index(0, l);
      if (!li) return;
      word.push_back(*li);
    }
    auto wi = bar->bar()->find(word);
    if (!wi) return;
    if (auto c = bar->find(*xi, *wi, *yi)) acc.add(*c, s);
  });
  return acc.take();
}

Coordinates ExteriorProduct::apply(int n1, const Coordinates& a1, int n2, const Coordinates& a2) const {
  SparseVector z1 = left->degree(n1).cycle_of(a1);
  SparseVector z2 = right->degree(n2).cycle_of(a2);
  VectorAccumulator acc;
  for (const auto& s : z1)
    for (const auto& t : z2) acc.add(on_cells(s.index, t.index), s.coeff * t.coeff);
  return target->degree(n1 + n2).coordinates(acc.take().reduced(target->ring()));
}

ExteriorProduct exterior_product(const TorPtr& t1, const TorPtr& t2) {
  const TwoSidedBar& b1 = require_bar(t1);
  const TwoSidedBar& b2 = require_bar(t2);
  if (b1.cutoff() != b2.cutoff() || !(t1->ring() == t2->ring()) || t1->max_degree() != t2->max_degree()) {
    throw CutoffMismatch("exterior product needs Tor over the same ring with the same cutoff");
  }
  ExteriorProduct e;
  e.left = t1;
  e.right = t2;
  e.x = algebra_tensor(b1.left(), b2.left());
  e.a = algebra_tensor(b1.base(), b2.base());
  e.y = algebra_tensor(b1.right(), b2.right());
  e.bar = two_sided_bar(tensor_morphisms(b1.left_map(), b2.left_map(), e.a, e.x),
                        tensor_morphisms(b1.right_map(), b2.right_map(), e.a, e.y), b1.cutoff());
  e.target = tor_bigraded(e.bar, t1->ring(), t1->max_degree());
  return e;
}

RingStructure classical_product(const TorPtr& tor) {
  const TwoSidedBar& b = require_bar(tor);
  require_commutative(b, tor->ring());
  const DgAlgebra& x = *b.left();
  const DgAlgebra& y = *b.right();
  const BarConstruction& bar = *b.bar();
  // Tor_mu(mu, mu) applied to the exterior product of two cells
  return ring_structure(tor, [&](Index c1, Index c2) {
    VectorAccumulator acc;
    exterior_cells(b, c1, b, c2, [&](Index x1, Index x2, const std::vector<Letter>& w, Index y1, Index y2, int s) {
      std::vector<SparseVector> letters;
      for (auto [side, l] : w) letters.push_back(SparseVector::unit(l));
      SparseVector word = w.empty() ? SparseVector::unit(0) : bar.word_vector(letters);
      acc.add(b.element(x.multiply(x1, x2), word, y.multiply(y1, y2)), s);
    });
    return acc.take();
  });
}

RingStructure shuffle_product(const TorPtr& tor) {
  const TwoSidedBar& b = require_bar(tor);
  require_commutative(b, tor->ring());
  const DgAlgebra& x = *b.left();
  const DgAlgebra& y = *b.right();
  const BarConstruction& bar = *b.bar();
  const GradedBasis& ga = *b.base()->basis();
  const GradedBasis& gx = *x.basis();
  const GradedBasis& gy = *y.basis();
  const GradedBasis& gw = *bar.basis();
  return ring_structure(tor, [&](Index c1, Index c2) {
    const auto& k1 = b.cell(c1);
    const auto& k2 = b.cell(c2);
    const Word& u = bar.word(k1.word);
    const Word& v = bar.word(k2.word);
    // Koszul sign of (x u y)(x' v y') -> (x x')(u v)(y y')
    const long long outer = static_cast<long long>(gx.degree(k2.x)) * (gw.degree(k1.word) + gy.degree(k1.y)) +
                            static_cast<long long>(gy.degree(k1.y)) * gw.degree(k2.word);
    SparseVector xx = x.multiply(k1.x, k2.x);
    SparseVector yy = y.multiply(k1.y, k2.y);
    VectorAccumulator words;
    // positions of the letters of u among |u| + |v| slots
    std::vector<bool> from_u(u.size() + v.size(), false);
    std::fill(from_u.begin(), from_u.begin() + static_cast<long>(u.size()), true);
    do {
      Word w;
      long long e = 0;
      std::size_t i = 0, j = 0;
      for (bool take_u : from_u) {
        if (take_u) {
          w.push_back(u[i++]);
        } else {
          // v[j] passes the letters of u not yet placed
          for (std::size_t l = i; l < u.size(); ++l) e += static_cast<long long>(ga.degree(v[j]) - 1) * (ga.degree(u[l]) - 1);
          w.push_back(v[j++]);
        }
      }
      if (auto wi = bar.find(w)) words.add(*wi, sign_power(e));
    } while (std::prev_permutation(from_u.begin(), from_u.end()));
    SparseVector out = b.element(xx, words.take(), yy);
    return sign_power(outer) == 1 ? out : -out;
  });
}

RingStructure oracle_product(const TorPtr& tor) {
  if (!tor->complex().product) throw std::invalid_argument("this Tor carries no chain-level product");
  return ring_structure(tor, tor->complex().product);
}

}  // namespace dgtor

namespace dgtor {

namespace {

// The bar, cobar and shuffle data of one algebra Z of the span.
struct Level {
  AlgebraPtr z;
  BarPtr bz;
  CobarPtr obz;
  Gamma gamma;            // O(BZ (x) BZ) -> OBZ (x) OBZ
  Nabla nabla;            // BZ (x) BZ -> B(Z (x) Z)
  CobarPtr obzz;          // OB(Z (x) Z)
  AlgebraMorphism onabla; // O(BZ (x) BZ) -> OB(Z (x) Z)
  AlgebraMorphism ophi;   // OB(Z (x) Z) -> OBZ
  AlgebraMorphism counit; // OBZ -> Z
};

Level make_level(const AlgebraPtr& z, int c) {
  Level l;
  l.z = z;
  l.bz = bar(z, c);
  l.obz = cobar(l.bz->coalgebra(), c + 1);
  l.gamma = shuffle_gamma(l.obz, l.obz);
  l.nabla = shuffle_nabla(l.bz, l.bz);
  l.obzz = cobar(l.nabla.target->coalgebra(), c + 1);
  if (!same_basis(l.gamma.coalgebra.coalgebra->basis(), l.nabla.source.coalgebra->basis())) {
    throw std::logic_error("tensor coalgebras of the shuffle maps disagree");
  }
  CoalgebraMorphism nab{l.gamma.coalgebra.coalgebra, l.nabla.target->coalgebra(), l.nabla.map.map};
  l.onabla = cobar_of_morphism(nab, l.gamma.source, l.obzz);
  CoalgebraMorphism phi = bar_of_morphism(multiplication_map(l.nabla.algebra), l.nabla.target, l.bz);
  l.ophi = cobar_of_morphism(phi, l.obzz, l.obz);
  l.counit = extend_from_cobar(l.bz->twisting(), l.obz);
  return l;
}

// The images of xi : A -> Z at every level.
struct LevelMaps {
  AlgebraMorphism obxi;      // OBA -> OBZ
  AlgebraMorphism tensored;  // OBA (x) OBA -> OBZ (x) OBZ
  AlgebraMorphism ogamma;    // O(BA (x) BA) -> O(BZ (x) BZ)
  AlgebraMorphism onabla;    // OB(A (x) A) -> OB(Z (x) Z)
};

LevelMaps level_maps(const AlgebraMorphism& xi, const Level& a, const Level& z) {
  LevelMaps m;
  CoalgebraMorphism bxi = bar_of_morphism(xi, a.bz, z.bz);
  m.obxi = cobar_of_morphism(bxi, a.obz, z.obz);
  m.tensored = tensor_morphisms(m.obxi, m.obxi, a.gamma.target, z.gamma.target);
  CoalgebraMorphism bb{a.gamma.coalgebra.coalgebra, z.gamma.coalgebra.coalgebra,
                       tensor_maps(bxi.map, bxi.map, a.gamma.coalgebra.tensor, z.gamma.coalgebra.tensor)};
  m.ogamma = cobar_of_morphism(bb, a.gamma.source, z.gamma.source);
  AlgebraMorphism xx = tensor_morphisms(xi, xi, a.nabla.algebra, z.nabla.algebra);
  m.onabla = cobar_of_morphism(bar_of_morphism(xx, a.nabla.target, z.nabla.target), a.obzz, z.obzz);
  return m;
}

DgaHomotopy constant(const AlgebraMorphism& f) {
  return {f, f, GradedMap(f.source->basis(), f.target->basis(), -1)};
}

}  // namespace

RingStructure pipeline_product_smoke(const TorPtr& tor, int cutoff) {
  if (cutoff > 4) throw CutoffTooLarge("the product pipeline is limited to cutoff 4, got " + std::to_string(cutoff));
  const TwoSidedBar& b = require_bar(tor);
  require_commutative(b, tor->ring());
  const CoefficientRing& ring = tor->ring();
  const int c = cutoff;
  const int top = c - 1;
  if (tor->max_degree() < top) throw CutoffTooSmall("Tor must be tracked through degree " + std::to_string(top));

  Level lx = make_level(b.left(), c), la = make_level(b.base(), c), ly = make_level(b.right(), c);
  LevelMaps mx = level_maps(b.left_map(), la, lx), my = level_maps(b.right_map(), la, ly);

  // Tor_{OBA}(OBX, OBY) and its comparison with Tor_A(X, Y)
  TorPtr t0 = tor_bigraded(two_sided_bar(mx.obxi, my.obxi, c), ring, top);
  TorMap to_a = tor_map(t0, tor, la.counit, lx.counit, ly.counit);

  // exterior product into Tor_{OBA (x) OBA}(OBX (x) OBX, OBY (x) OBY)
  ExteriorProduct ext;
  ext.left = ext.right = t0;
  ext.x = lx.gamma.target;
  ext.a = la.gamma.target;
  ext.y = ly.gamma.target;
  ext.bar = two_sided_bar(mx.tensored, my.tensored, c);
  ext.target = tor_bigraded(ext.bar, ring, top);

  TorPtr tg = tor_bigraded(two_sided_bar(mx.ogamma, my.ogamma, c), ring, top);
  TorMap gamma = tor_map(tg, ext.target, la.gamma.map, lx.gamma.map, ly.gamma.map);
  TorPtr tn = tor_bigraded(two_sided_bar(mx.onabla, my.onabla, c), ring, top);
  TorMap nabla = tor_map(tg, tn, la.onabla, lx.onabla, ly.onabla);
  const TwoSidedBar& bn = *tn->bar();
  TorMap phi = tor_map_with_homotopy(tn, t0, la.ophi, lx.ophi, ly.ophi, constant(compose(lx.ophi, bn.left_map())),
                                     constant(compose(ly.ophi, bn.right_map())));

  RingStructure r{tor, top, tor->unit(), {}};
  for (int n1 = 0; n1 <= top; ++n1) {
    for (int n2 = 0; n1 + n2 <= top; ++n2) {
      const int n = n1 + n2;
      for (Index i = 0; i < tor->degree(n1).rank(); ++i) {
        for (Index j = 0; j < tor->degree(n2).rank(); ++j) {
          Coordinates a(tor->degree(n1).rank(), 0), bb(tor->degree(n2).rank(), 0);
          a[i] = 1;
          bb[j] = 1;
          Coordinates p = ext.apply(n1, preimage(to_a, n1, a), n2, preimage(to_a, n2, bb));
          p = phi.apply(n, nabla.apply(n, preimage(gamma, n, p)));
          r.table[{static_cast<std::size_t>(n1), i, static_cast<std::size_t>(n2), j}] = to_a.apply(n, p);
        }
      }
    }
  }
  return r;
}

}  // namespace dgtor
