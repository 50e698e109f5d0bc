#include "dgtor/algebra/dg_algebra.hpp"

#include "dgtor/core/errors.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

namespace dgtor {
namespace {

using PairKey = std::pair<Index, Index>;
using PairVector = std::map<PairKey, Integer>;

void add_pair(PairVector& v, Index a, Index b, const Integer& c) {
  if (c == 0) return;
  auto& slot = v[{a, b}];
  slot += c;
  if (slot == 0) v.erase({a, b});
}

// sum_k c_k x_k (x) y_k for vectors x, y
void add_tensor(PairVector& v, const SparseVector& x, const SparseVector& y, const Integer& scale) {
  for (const auto& a : x) {
    for (const auto& b : y) add_pair(v, a.index, b.index, scale * a.coeff * b.coeff);
  }
}

std::string pair_name(const GradedBasis& b, Index x, Index y) { return "(" + b.name(x) + ", " + b.name(y) + ")"; }

}  // namespace

// ------------------------------------------------------------------ algebra

AlgebraPtr DgAlgebra::make(Parts parts) {
  if (!parts.basis) throw std::invalid_argument("algebra needs a basis");
  if (parts.differential.degree() != 1 || !same_basis(parts.differential.source(), parts.basis) ||
      !same_basis(parts.differential.target(), parts.basis)) {
    throw DegreeMismatch("algebra differential must be a degree +1 endomorphism");
  }
  if (parts.augmented) {
    if (parts.basis->size() == 0 || parts.basis->degree(0) != 0 || !(parts.unit == SparseVector::unit(0))) {
      throw std::invalid_argument("augmented algebra must have its unit as basis element 0");
    }
  }
  auto a = std::make_shared<DgAlgebra>();
  a->zero_differential_ = parts.differential.is_zero();
  const int cutoff = parts.basis->cutoff();
  BasisPtr basis = parts.basis;
  Multiplication raw = parts.product;
  a->product_ = [basis, raw, cutoff](Index x, Index y) {
    if (basis->degree(x) + basis->degree(y) > cutoff) return SparseVector();
    return raw(x, y);
  };
  a->parts_ = std::move(parts);
  return a;
}

SparseVector DgAlgebra::multiply(const SparseVector& a, const SparseVector& b) const {
  return multiply_vectors(product_, a, b);
}

Integer DgAlgebra::augmentation(const SparseVector& v) const {
  if (!parts_.augmented) throw std::logic_error("algebra '" + parts_.name + "' is not augmented");
  return v.coefficient(0);
}

// ---------------------------------------------------------------- coalgebra

std::vector<int> compute_witnesses(const BasisPtr& basis, const Comultiplication& coproduct, int limit) {
  std::vector<int> out(basis->size(), 1);
  for (Index i = 1; i < basis->size(); ++i) {
    std::map<std::vector<Index>, Integer> current{{{i}, 1}};
    int n = 1;
    while (!current.empty()) {
      if (++n > limit) throw NotCocomplete("element '" + basis->name(i) + "' survives " + std::to_string(limit) +
                                           " iterated reduced diagonals");
      std::map<std::vector<Index>, Integer> next;
      for (const auto& [tuple, c] : current) {
        for (const auto& t : coproduct(tuple[0])) {
          if (t.left == 0 || t.right == 0) continue;
          std::vector<Index> key{t.left, t.right};
          key.insert(key.end(), tuple.begin() + 1, tuple.end());
          auto& slot = next[key];
          slot += c * t.coeff;
          if (slot == 0) next.erase(key);
        }
      }
      current = std::move(next);
    }
    out[i] = n;
  }
  return out;
}

CoalgebraPtr DgCoalgebra::make(Parts parts) {
  if (!parts.basis || parts.basis->size() == 0 || parts.basis->degree(0) != 0) {
    throw std::invalid_argument("coalgebra must have its coaugmentation as basis element 0");
  }
  if (parts.differential.degree() != 1 || !same_basis(parts.differential.source(), parts.basis) ||
      !same_basis(parts.differential.target(), parts.basis)) {
    throw DegreeMismatch("coalgebra differential must be a degree +1 endomorphism");
  }
  if (parts.witness.empty()) {
    parts.witness = compute_witnesses(parts.basis, parts.coproduct, parts.basis->cutoff() + 2);
  }
  if (parts.witness.size() != parts.basis->size()) throw std::invalid_argument("one witness per element is required");
  auto c = std::make_shared<DgCoalgebra>();
  c->parts_ = std::move(parts);
  return c;
}

std::vector<TensorTerm> DgCoalgebra::reduced_diagonal(Index i) const {
  std::vector<TensorTerm> out;
  for (auto& t : parts_.coproduct(i)) {
    if (t.left != 0 && t.right != 0) out.push_back(std::move(t));
  }
  return out;
}

int DgCoalgebra::max_witness() const {
  int m = 1;
  for (int w : parts_.witness) m = std::max(m, w);
  return m;
}

// ---------------------------------------------------------------- morphisms

AlgebraMorphism AlgebraMorphism::identity(const AlgebraPtr& a) { return {a, a, GradedMap::identity(a->basis())}; }

AlgebraMorphism compose(const AlgebraMorphism& g, const AlgebraMorphism& f) {
  return {f.source, g.target, compose(g.map, f.map)};
}

CoalgebraMorphism CoalgebraMorphism::identity(const CoalgebraPtr& c) {
  return {c, c, GradedMap::identity(c->basis())};
}

CoalgebraMorphism compose(const CoalgebraMorphism& g, const CoalgebraMorphism& f) {
  return {f.source, g.target, compose(g.map, f.map)};
}

GradedMap cup(const GradedMap& f, const GradedMap& g, const DgCoalgebra& c, const DgAlgebra& a) {
  return cup(f, g, c.coproduct(), a.product());
}

GradedMap unit_counit(const DgCoalgebra& c, const DgAlgebra& a) {
  SparseVector unit = a.unit();
  return GradedMap::from_function(c.basis(), a.basis(), 0,
                                  [&](Index i) { return i == 0 ? unit : SparseVector(); });
}

// ------------------------------------------------------------------- checks

CheckReport check_dga_axioms(const DgAlgebra& a, int max_degree) {
  CheckReport r;
  const GradedBasis& b = *a.basis();
  const int limit = check_limit(max_degree, a.cutoff());
  const GradedMap& d = a.differential();
  for (Index x = 0; x < b.size() && b.degree(x) <= limit; ++x) {
    SparseVector ex = SparseVector::unit(x);
    if (!(a.multiply(a.unit(), ex) == ex) || !(a.multiply(ex, a.unit()) == ex)) r.fail("unitality", b.name(x));
    if (!d.apply(d.image(x)).is_zero()) r.fail("d^2 = 0", b.name(x));
    if (a.augmented() && b.degree(x) < a.cutoff() && a.augmentation(d.image(x)) != 0) {
      r.fail("augmentation is a chain map", b.name(x));
    }
  }
  if (a.augmented() && a.augmentation(a.unit()) != 1) r.fail("augmentation of unit", "1");
  for (Index x = 0; x < b.size() && b.degree(x) <= limit; ++x) {
    for (Index y = 0; y < b.end_of(limit - b.degree(x)); ++y) {
      SparseVector xy = a.multiply(x, y);
      if (a.augmented() && a.in_ideal(x) && a.in_ideal(y) && a.augmentation(xy) != 0) {
        r.fail("augmentation is multiplicative", pair_name(b, x, y));
      }
      if (b.degree(x) + b.degree(y) < limit) {
        SparseVector lhs = d.apply(xy);
        SparseVector rhs = a.multiply(d.image(x), SparseVector::unit(y));
        rhs.add_scaled(a.multiply(SparseVector::unit(x), d.image(y)), sign_power(b.degree(x)));
        if (!(lhs == rhs)) r.fail("Leibniz rule", pair_name(b, x, y));
      }
      for (Index z = 0; z < b.end_of(limit - b.degree(x) - b.degree(y)); ++z) {
        SparseVector left = a.multiply(xy, SparseVector::unit(z));
        SparseVector right = a.multiply(SparseVector::unit(x), a.multiply(y, z));
        if (!(left == right)) r.fail("associativity", "(" + b.name(x) + ", " + b.name(y) + ", " + b.name(z) + ")");
      }
    }
  }
  return r;
}

CheckReport check_dgc_axioms(const DgCoalgebra& c, int max_degree) {
  CheckReport r;
  const GradedBasis& b = *c.basis();
  const int limit = check_limit(max_degree, c.cutoff());
  const GradedMap& d = c.differential();
  for (Index x = 0; x < b.size() && b.degree(x) <= limit; ++x) {
    auto delta = c.diagonal(x);
    VectorAccumulator left_counit, right_counit;
    for (const auto& t : delta) {
      if (t.left == 0) left_counit.add(t.right, t.coeff);
      if (t.right == 0) right_counit.add(t.left, t.coeff);
    }
    SparseVector ex = SparseVector::unit(x);
    if (!(left_counit.take() == ex) || !(right_counit.take() == ex)) r.fail("counitality", b.name(x));

    std::map<std::array<Index, 3>, Integer> lhs, rhs;
    for (const auto& t : delta) {
      for (const auto& u : c.diagonal(t.left)) {
        auto& s = lhs[{u.left, u.right, t.right}];
        s += t.coeff * u.coeff;
      }
      for (const auto& u : c.diagonal(t.right)) {
        auto& s = rhs[{t.left, u.left, u.right}];
        s += t.coeff * u.coeff;
      }
    }
    std::erase_if(lhs, [](const auto& kv) { return kv.second == 0; });
    std::erase_if(rhs, [](const auto& kv) { return kv.second == 0; });
    if (lhs != rhs) r.fail("coassociativity", b.name(x));

    if (!d.apply(d.image(x)).is_zero()) r.fail("d^2 = 0", b.name(x));
    if (b.degree(x) < c.cutoff()) {
      if (c.counit(d.image(x)) != 0) r.fail("counit is a chain map", b.name(x));
      PairVector dl;
      for (const auto& t : d.image(x)) {
        for (const auto& u : c.diagonal(t.index)) add_pair(dl, u.left, u.right, t.coeff * u.coeff);
      }
      PairVector dr;
      for (const auto& t : delta) {
        add_tensor(dr, d.image(t.left), SparseVector::unit(t.right), t.coeff);
        add_tensor(dr, SparseVector::unit(t.left), d.image(t.right), t.coeff * sign_power(b.degree(t.left)));
      }
      if (dl != dr) r.fail("coderivation", b.name(x));
    }
  }
  if (!d.image(0).is_zero()) r.fail("d of coaugmentation", b.name(0));
  return r;
}

CheckReport check_algebra_morphism(const AlgebraMorphism& f, int max_degree) {
  CheckReport r;
  if (f.map.degree() != 0) r.fail("degree zero", "map");
  const DgAlgebra& s = *f.source;
  const DgAlgebra& t = *f.target;
  const GradedBasis& b = *s.basis();
  const int limit = check_limit(max_degree, std::min(s.cutoff(), t.cutoff()));
  if (!(f.apply(s.unit()) == t.unit())) r.fail("unital", "1");
  for (Index x = 0; x < b.size() && b.degree(x) <= limit; ++x) {
    if (s.augmented() && t.augmented() && t.augmentation(f.map.image(x)) != s.augmentation(SparseVector::unit(x))) {
      r.fail("augmentation-preserving", b.name(x));
    }
    if (b.degree(x) < s.cutoff()) {
      SparseVector lhs = t.differential().apply(f.map.image(x));
      SparseVector rhs = f.apply(s.differential().image(x));
      if (!(lhs == rhs)) r.fail("chain map", b.name(x));
    }
    for (Index y = 0; y < b.end_of(limit - b.degree(x)); ++y) {
      SparseVector lhs = f.apply(s.multiply(x, y));
      SparseVector rhs = t.multiply(f.map.image(x), f.map.image(y));
      if (!(lhs == rhs)) r.fail("multiplicative", pair_name(b, x, y));
    }
  }
  return r;
}

CheckReport check_coalgebra_morphism(const CoalgebraMorphism& g, int max_degree) {
  CheckReport r;
  if (g.map.degree() != 0) r.fail("degree zero", "map");
  const DgCoalgebra& s = *g.source;
  const DgCoalgebra& t = *g.target;
  const GradedBasis& b = *s.basis();
  const int limit = check_limit(max_degree, std::min(s.cutoff(), t.cutoff()));
  if (!(g.map.image(0) == SparseVector::unit(0))) r.fail("coaugmentation-preserving", b.name(0));
  for (Index x = 0; x < b.size() && b.degree(x) <= limit; ++x) {
    if (t.counit(g.map.image(x)) != (x == 0 ? 1 : 0)) r.fail("counital", b.name(x));
    if (b.degree(x) < s.cutoff()) {
      SparseVector lhs = t.differential().apply(g.map.image(x));
      SparseVector rhs = g.apply(s.differential().image(x));
      if (!(lhs == rhs)) r.fail("chain map", b.name(x));
    }
    PairVector lhs, rhs;
    for (const auto& term : g.map.image(x)) {
      for (const auto& u : t.diagonal(term.index)) add_pair(lhs, u.left, u.right, term.coeff * u.coeff);
    }
    for (const auto& u : s.diagonal(x)) add_tensor(rhs, g.map.image(u.left), g.map.image(u.right), u.coeff);
    if (lhs != rhs) r.fail("comultiplicative", b.name(x));
  }
  return r;
}

CheckReport check_twisting_cochain(const TwistingCochain& t, int max_degree) {
  CheckReport r;
  const DgCoalgebra& c = *t.source;
  const DgAlgebra& a = *t.target;
  const GradedBasis& b = *c.basis();
  if (t.map.degree() != 1) r.fail("degree one", "map");
  const int limit = check_limit(max_degree, c.cutoff() - 1);
  if (!t.map.image(0).is_zero()) r.fail("t eta = 0", b.name(0));
  GradedMap dt = hom_differential(t.map, c.complex(), a.complex());
  GradedMap tt = cup(t.map, t.map, c, a);
  for (Index x = 0; x < b.size() && b.degree(x) <= limit; ++x) {
    if (a.augmented() && a.augmentation(t.map.image(x)) != 0) r.fail("e t = 0", b.name(x));
    if (!(dt.image(x) == tt.image(x))) r.fail("d(t) = t cup t", b.name(x));
  }
  return r;
}

CheckReport check_commutative(const DgAlgebra& a, const CoefficientRing& ring, int max_degree) {
  CheckReport r;
  const GradedBasis& b = *a.basis();
  const int limit = check_limit(max_degree, a.cutoff());
  for (Index x = 0; x < b.size() && b.degree(x) <= limit; ++x) {
    for (Index y = x; y < b.end_of(limit - b.degree(x)); ++y) {
      SparseVector diff = a.multiply(x, y);
      diff.add_scaled(a.multiply(y, x), -sign_power(static_cast<long long>(b.degree(x)) * b.degree(y)));
      if (!diff.reduced(ring).is_zero()) r.fail("graded commutativity", pair_name(b, x, y));
    }
  }
  return r;
}

// ------------------------------------------------------------- ground ring

AlgebraPtr ground_algebra(int cutoff) {
  auto basis = GradedBasis::make({{"1", 0}}, cutoff);
  return DgAlgebra::make({"k", basis, GradedMap(basis, basis, 1),
                          [](Index, Index) { return SparseVector::unit(0); }, SparseVector::unit(0), true});
}

CoalgebraPtr ground_coalgebra(int cutoff) {
  auto basis = GradedBasis::make({{"1", 0}}, cutoff);
  return DgCoalgebra::make({"k", basis, GradedMap(basis, basis, 1),
                            [](Index) { return std::vector<TensorTerm>{{0, 0, 1}}; }, {1}});
}

// ----------------------------------------------------------------- tensors

TensorAlgebra algebra_tensor(const AlgebraPtr& a, const AlgebraPtr& b) {
  TensorComplex tc = tensor(a->complex(), b->complex());
  TensorPtr t = tc.tensor;
  Multiplication product = [a, b, t](Index x, Index y) {
    const GradedBasis& ba = *a->basis();
    const GradedBasis& bb = *b->basis();
    auto [x1, x2] = t->factors(x);
    auto [y1, y2] = t->factors(y);
    SparseVector left = a->multiply(x1, y1);
    if (left.is_zero()) return SparseVector();
    SparseVector right = b->multiply(x2, y2);
    if (right.is_zero()) return SparseVector();
    SparseVector v = tensor_vectors(*t, left, right);
    return (static_cast<long long>(bb.degree(x2)) * ba.degree(y1)) % 2 ? -v : v;
  };
  SparseVector unit = tensor_vectors(*t, a->unit(), b->unit());
  AlgebraPtr ab = DgAlgebra::make({a->name() + "⊗" + b->name(), t->basis(), tc.complex.differential, product, unit,
                                   a->augmented() && b->augmented()});
  return TensorAlgebra{ab, t, a, b};
}

AlgebraMorphism interchange(const TensorAlgebra& ab, const TensorAlgebra& ba) {
  if (ab.left != ba.right || ab.right != ba.left) throw std::invalid_argument("interchange: factors do not match");
  const GradedBasis& left = *ab.left->basis();
  const GradedBasis& right = *ab.right->basis();
  GradedMap m = GradedMap::from_function(ab.algebra->basis(), ba.algebra->basis(), 0, [&](Index i) {
    auto [x, y] = ab.tensor->factors(i);
    auto k = ba.index(y, x);
    if (!k) return SparseVector();
    return SparseVector::unit(*k, sign_power(static_cast<long long>(left.degree(x)) * right.degree(y)));
  });
  return {ab.algebra, ba.algebra, std::move(m)};
}

AlgebraMorphism tensor_morphisms(const AlgebraMorphism& f, const AlgebraMorphism& g, const TensorAlgebra& source,
                                 const TensorAlgebra& target) {
  return {source.algebra, target.algebra, tensor_maps(f.map, g.map, source.tensor, target.tensor)};
}

AlgebraMorphism multiplication_map(const TensorAlgebra& aa) {
  if (aa.left != aa.right) throw std::invalid_argument("multiplication_map needs A (x) A");
  const AlgebraPtr& a = aa.left;
  GradedMap m = GradedMap::from_function(aa.algebra->basis(), a->basis(), 0, [&](Index i) {
    auto [x, y] = aa.tensor->factors(i);
    return a->multiply(x, y);
  });
  return {aa.algebra, a, std::move(m)};
}

TensorCoalgebra coalgebra_tensor(const CoalgebraPtr& c, const CoalgebraPtr& d) {
  TensorComplex tc = tensor(c->complex(), d->complex());
  TensorPtr t = tc.tensor;
  Comultiplication coproduct = [c, d, t](Index i) {
    const GradedBasis& bc = *c->basis();
    const GradedBasis& bd = *d->basis();
    auto [x, y] = t->factors(i);
    std::vector<TensorTerm> out;
    auto dx = c->diagonal(x);
    auto dy = d->diagonal(y);
    for (const auto& u : dx) {
      for (const auto& v : dy) {
        auto l = t->index(u.left, v.left);
        auto r = t->index(u.right, v.right);
        if (!l || !r) continue;
        int sign = sign_power(static_cast<long long>(bc.degree(u.right)) * bd.degree(v.left));
        out.push_back({*l, *r, u.coeff * v.coeff * sign});
      }
    }
    return out;
  };
  std::vector<int> witness(t->basis()->size());
  for (Index i = 0; i < witness.size(); ++i) {
    auto [x, y] = t->factors(i);
    witness[i] = c->witness(x) + d->witness(y) - 1;
  }
  CoalgebraPtr cd = DgCoalgebra::make(
      {c->name() + "⊗" + d->name(), t->basis(), tc.complex.differential, coproduct, std::move(witness)});
  return TensorCoalgebra{cd, t, c, d};
}

}  // namespace dgtor
