#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "algebra_support.hpp"
#include "dgtor/bar/bar.hpp"
#include "dgtor/core/errors.hpp"
#include "test_support.hpp"

using namespace dgtor;
using namespace dgtor::testing;

namespace {

const CoefficientRing QQ = CoefficientRing::rationals();

// number of sequences of positive integers i_j with sum(2 i_j - 1) = q
std::size_t compositions(int q) {
  if (q == 0) return 1;
  std::size_t n = 0;
  for (int i = 1; 2 * i - 1 <= q; ++i) n += compositions(q - (2 * i - 1));
  return n;
}

std::vector<std::size_t> ranks(const ChainComplex& c, int max_degree) {
  std::vector<std::size_t> out;
  for (const auto& h : complex_homology(c, QQ, max_degree)) out.push_back(h.rank());
  return out;
}

SparseVector word(const BarPtr& b, std::vector<std::string> letters) {
  Word w;
  for (const auto& l : letters) w.push_back(*b->base()->basis()->find(l));
  return SparseVector::unit(*b->find(w));
}

}  // namespace

TEST_CASE("bar and cobar of the ground ring") {
  BarPtr b = bar(ground_algebra(4));
  CHECK(b->basis()->size() == 1);
  CobarPtr o = cobar(ground_coalgebra(3));
  CHECK(o->basis()->size() == 1);
}

TEST_CASE("bar of a polynomial ring") {
  auto kx = free_gca({{"x", 2}}, 9);
  BarPtr b = bar(kx->algebra(), 3);
  std::vector<std::size_t> dims;
  for (int q = 0; q <= 3; ++q) dims.push_back(b->basis()->size_in_degree(q));
  CHECK(dims == std::vector<std::size_t>{1, 1, 1, 2});

  BarPtr big = bar(kx->algebra());
  CHECK(big->cutoff() == 8);
  for (int q = 0; q <= 8; ++q) CHECK(big->basis()->size_in_degree(q) == compositions(q));
  CHECK(big->coalgebra()->differential().image(0).is_zero());

  // the sign of d[x|x] is forced by d^2 = 0 on [x|x|x]
  const GradedMap& d = big->coalgebra()->differential();
  CHECK(d.image(word(big, {"x", "x"}).terms()[0].index) == word(big, {"x^2"}).scaled(-1));
  SparseVector xxx = word(big, {"x", "x", "x"});
  CHECK(d.apply(xxx) == word(big, {"x^2", "x"}).scaled(-1) + word(big, {"x", "x^2"}));
  CHECK(d.apply(d.apply(xxx)).is_zero());

  // (t cup t)[x|x] = -x^2
  GradedMap tt = cup(big->twisting().map, big->twisting().map, *big->coalgebra(), *kx->algebra());
  CHECK(tt.image(word(big, {"x", "x"}).terms()[0].index) == SparseVector::unit(*kx->basis()->find("x^2"), -1));

  // reduced homology of B(k[x]) is the exterior coalgebra on [x]
  CHECK(ranks(big->coalgebra()->complex(), 7) == std::vector<std::size_t>{1, 1, 0, 0, 0, 0, 0, 0});
  CHECK_THROWS_AS(bar(kx->algebra(), 9), CutoffTooSmall);
  CHECK_THROWS_AS(bar(free_gca({{"z", 1}}, 4)->algebra()), NotOneConnected);
}

TEST_CASE("bar and cobar differentials square to zero") {
  std::mt19937 rng(5);
  std::vector<AlgebraPtr> algebras{koszul_pair(free_gca({{"y", 3}, {"x", 4}}, 10)),
                                   koszul_pair(free_gca({{"y", 3}, {"x", 4}, {"w", 2}}, 9))};
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<GeneratorSpec> gens;
    int n = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < n; ++i) gens.push_back({"g" + std::to_string(i), 2 + static_cast<int>(rng() % 3)});
    algebras.push_back(free_gca(gens, 9)->algebra());
  }
  for (const auto& a : algebras) {
    INFO(a->name());
    REQUIRE(check_dga_axioms(*a).ok());
    BarPtr b = bar(a);
    CHECK(b->coalgebra()->complex().squares_to_zero());
    CheckReport dgc = check_dgc_axioms(*b->coalgebra());
    CHECK_MESSAGE(dgc.ok(), dgc.describe());
    CheckReport tw = check_twisting_cochain(b->twisting());
    CHECK_MESSAGE(tw.ok(), tw.describe());
    for (Index i = 1; i < b->basis()->size(); ++i) CHECK(b->coalgebra()->witness(i) == int(b->word(i).size()) + 1);

    CobarPtr o = cobar(b->coalgebra());
    CHECK(o->algebra()->complex().squares_to_zero());
    CheckReport dga = check_dga_axioms(*o->algebra());
    CHECK_MESSAGE(dga.ok(), dga.describe());
    CHECK(check_twisting_cochain(o->twisting()).ok());
  }
  CoalgebraPtr words = word_coalgebra({1, 2}, 7);
  CobarPtr o = cobar(words);
  CHECK(o->algebra()->complex().squares_to_zero());
  CHECK(check_dga_axioms(*o->algebra()).ok());
  CHECK(check_twisting_cochain(o->twisting()).ok());
}

TEST_CASE("cobar differential on primitives") {
  AlgebraPtr a = koszul_pair(free_gca({{"y", 3}, {"x", 4}}, 8));
  BarPtr b = bar(a);
  CobarPtr o = cobar(b->coalgebra());
  Index y = *b->find({*a->basis()->find("y")});
  Index x = *b->find({*a->basis()->find("x")});
  CHECK(b->coalgebra()->differential().image(y) == SparseVector::unit(x, -1));
  CHECK(o->algebra()->differential().image(*o->find({y})) == SparseVector::unit(*o->find({x})));
}

TEST_CASE("cobar bar counit is a quasi-isomorphism") {
  auto kx = free_gca({{"x", 2}}, 7);
  AdjunctionCounit e = adjunction_counit(kx->algebra());
  CHECK(e.cobar->cutoff() == 7);
  CHECK(check_algebra_morphism(e.map).ok());
  CHECK(ranks(e.cobar->algebra()->complex(), 6) == ranks(kx->algebra()->complex(), 6));
  // the counit carries a generating cycle of each homology group to the monomial
  for (int q = 0; q <= 6; q += 2) {
    HomologyGroup h = homology_in_degree(e.cobar->algebra()->complex(), QQ, q);
    REQUIRE(h.rank() == 1);
    SparseVector image = e.map.apply(h.summary().generators[0]);
    CHECK(image.size() == 1);
  }

  AlgebraPtr k = koszul_pair(free_gca({{"y", 3}, {"x", 4}}, 9));
  AdjunctionCounit ek = adjunction_counit(k);
  CHECK(ranks(ek.cobar->algebra()->complex(), 8) == ranks(k->complex(), 8));
}

TEST_CASE("universal properties of the tautological twisting cochains") {
  auto kx = free_gca({{"x", 2}, {"z", 3}}, 8);
  BarPtr b = bar(kx->algebra());
  CoalgebraMorphism id = lift_to_bar(b->twisting(), b);
  CHECK(id.map == GradedMap::identity(b->basis()));

  CoalgebraPtr c = word_coalgebra({1, 3}, 6);
  CobarPtr o = cobar(c);
  AlgebraMorphism id2 = extend_from_cobar(o->twisting(), o);
  CHECK(id2.map == GradedMap::identity(o->basis()));

  // a nontrivial cochain C -> Lambda[y3] on the word coalgebra in a letter of degree 2
  CoalgebraPtr c2 = word_coalgebra({2}, 8, "a");
  auto ly = free_gca({{"y", 3}, {"w", 4}}, 9);
  GradedMap t = GradedMap::from_function(c2->basis(), ly->basis(), 1, [&](Index i) {
    return c2->basis()->name(i) == "a0" ? SparseVector::unit(ly->generator("y")) : SparseVector();
  });
  TwistingCochain tc{c2, ly->algebra(), t};
  REQUIRE(check_twisting_cochain(tc).ok());

  BarPtr bl = bar(ly->algebra());
  CoalgebraMorphism g = lift_to_bar(tc, bl);
  CHECK(check_coalgebra_morphism(g).ok());
  CHECK(compose(bl->twisting().map, g.map) == t);

  CobarPtr oc = cobar(c2);
  AlgebraMorphism f = extend_from_cobar(tc, oc);
  CHECK(check_algebra_morphism(f).ok());
  CHECK(compose(f.map, oc->twisting().map) == t);

  // uniqueness: perturbing the lift on one element breaks a defining property
  for (Index i = 1; i < c2->basis()->size(); ++i) {
    int q = c2->basis()->degree(i);
    if (bl->basis()->size_in_degree(q) == 0) continue;
    std::vector<SparseVector> images;
    for (Index j = 0; j < c2->basis()->size(); ++j) images.push_back(g.map.image(j));
    images[i] += SparseVector::unit(bl->basis()->begin_of(q));
    CoalgebraMorphism g2{c2, bl->coalgebra(), GradedMap::from_images(c2->basis(), bl->basis(), 0, images)};
    bool broken = !check_coalgebra_morphism(g2).ok() || !(compose(bl->twisting().map, g2.map) == t);
    CHECK(broken);
  }

  auto kz = free_gca({{"x", 2}}, 9);
  CoalgebraPtr c1 = word_coalgebra({1}, 8, "b");
  GradedMap tx = GradedMap::from_function(c1->basis(), kz->basis(), 1, [&](Index i) {
    return c1->basis()->name(i) == "b0" ? SparseVector::unit(kz->generator("x")) : SparseVector();
  });
  CHECK_THROWS_AS(lift_to_bar({c1, kz->algebra(), tx}, bar(kz->algebra())), InvalidTwistingCochain);
  CHECK_THROWS_AS(extend_from_cobar({c1, kz->algebra(), tx}, cobar(c1)), InvalidTwistingCochain);
}

TEST_CASE("adjunction identities") {
  SUBCASE("counit after the tautological cochain of the bar") {
    auto kx = free_gca({{"x", 2}, {"y", 3}}, 7);
    BarPtr b = bar(kx->algebra());
    CobarPtr ob = cobar(b->coalgebra(), kx->cutoff());
    AlgebraMorphism eps = extend_from_cobar(b->twisting(), ob);
    CHECK(compose(eps.map, ob->twisting().map) == b->twisting().map);

    // B(eps) o eta_{BA} = id
    BarPtr bob = bar(ob->algebra(), b->cutoff());
    CoalgebraMorphism eta = lift_to_bar(ob->twisting(), bob);
    CHECK(check_coalgebra_morphism(eta).ok());
    CoalgebraMorphism beps = bar_of_morphism(eps, bob, b);
    CHECK(compose(beps, eta).map == GradedMap::identity(b->basis()));
  }
  SUBCASE("unit before the tautological cochain of the bar") {
    CoalgebraPtr c = word_coalgebra({1, 2}, 5);
    CobarPtr oc = cobar(c);
    BarPtr boc = bar(oc->algebra(), c->cutoff());
    CoalgebraMorphism eta = lift_to_bar(oc->twisting(), boc);
    CHECK(compose(boc->twisting().map, eta.map) == oc->twisting().map);

    // eps_{Omega C} o Omega(eta_C) = id
    CobarPtr oboc = cobar(boc->coalgebra(), oc->cutoff());
    AlgebraMorphism eps = extend_from_cobar(boc->twisting(), oboc);
    AlgebraMorphism oeta = cobar_of_morphism(eta, oc, oboc);
    CHECK(check_algebra_morphism(oeta).ok());
    CHECK(compose(eps, oeta).map == GradedMap::identity(oc->basis()));

    AdjunctionUnit u = adjunction_unit(c);
    CHECK(check_coalgebra_morphism(u.map).ok());
    CHECK(u.map.map == eta.map);
  }
  SUBCASE("induced maps factor through the counit") {
    CoalgebraPtr c = word_coalgebra({2}, 6, "a");
    auto ly = free_gca({{"y", 3}}, 7);
    GradedMap t = GradedMap::from_function(c->basis(), ly->basis(), 1, [&](Index i) {
      return c->basis()->name(i) == "a0" ? SparseVector::unit(ly->generator("y")) : SparseVector();
    });
    CobarPtr oc = cobar(c);
    AlgebraMorphism f = extend_from_cobar({c, ly->algebra(), t}, oc);

    BarPtr boc = bar(oc->algebra(), c->cutoff());
    CoalgebraMorphism eta = lift_to_bar(oc->twisting(), boc);
    BarPtr ba = bar(ly->algebra(), c->cutoff());
    CoalgebraMorphism bf = bar_of_morphism(f, boc, ba);
    CobarPtr oboc = cobar(boc->coalgebra(), oc->cutoff());
    CobarPtr oba = cobar(ba->coalgebra(), oc->cutoff());
    AlgebraMorphism induced = compose(cobar_of_morphism(bf, oboc, oba), cobar_of_morphism(eta, oc, oboc));
    AlgebraMorphism eps = extend_from_cobar(ba->twisting(), oba);
    CHECK(compose(eps, induced).map == f.map);
  }
}

TEST_CASE("bar and cobar are functorial") {
  auto a = free_gca({{"x", 2}, {"y", 3}}, 9);
  auto b = free_gca({{"s", 2}, {"t", 3}, {"u", 5}}, 9);
  auto c = free_gca({{"p", 2}, {"q", 3}}, 9);
  AlgebraMorphism f = evaluate_morphism({{"x", "2*s"}, {"y", "t"}}, a, b);
  AlgebraMorphism g = evaluate_morphism({{"s", "p - 3*p"}, {"t", "q"}, {"u", "p*q"}}, b, c);
  BarPtr ba = bar(a->algebra()), bb = bar(b->algebra()), bc = bar(c->algebra());
  CoalgebraMorphism bf = bar_of_morphism(f, ba, bb), bg = bar_of_morphism(g, bb, bc);
  CHECK(check_coalgebra_morphism(bf).ok());
  CHECK(bar_of_morphism(compose(g, f), ba, bc).map == compose(bg, bf).map);

  CoalgebraPtr w = word_coalgebra({1, 2}, 5, "w");
  CobarPtr ow = cobar(w);
  CoalgebraMorphism idw = CoalgebraMorphism::identity(w);
  CHECK(cobar_of_morphism(idw, ow, ow).map == GradedMap::identity(ow->basis()));
  AlgebraMorphism ob = cobar_of_morphism(bf, cobar(ba->coalgebra()), cobar(bb->coalgebra()));
  CHECK(check_algebra_morphism(ob).ok());
}

TEST_CASE("bar shuffle map") {
  auto a1 = free_gca({{"x", 2}, {"y", 3}}, 8);
  auto a2 = free_gca({{"z", 2}, {"w", 5}}, 8);
  BarPtr b1 = bar(a1->algebra()), b2 = bar(a2->algebra());
  Nabla n = shuffle_nabla(b1, b2);
  CheckReport r = check_coalgebra_morphism(n.map);
  CHECK_MESSAGE(r.ok(), r.describe());

  // t nabla = t (x) eta e + eta e (x) t
  const GradedBasis& src = *n.source.coalgebra->basis();
  for (Index i = 0; i < src.size(); ++i) {
    auto [x, y] = n.source.tensor->factors(i);
    SparseVector lhs = n.target->twisting().map.apply(n.map.map.image(i));
    SparseVector rhs;
    if (y == 0) rhs += n.algebra.pair(b1->twisting().map.image(x), SparseVector::unit(0));
    if (x == 0) rhs += n.algebra.pair(SparseVector::unit(0), b2->twisting().map.image(y));
    CHECK(lhs == rhs);
  }

  // [x|x] (x) [z|z]: six shuffles, one of them [1z|x1|x1|1z]
  Index xx = *b1->find({1, 1}), zz = *b2->find({1, 1});
  auto pair = n.source.tensor->index(xx, zz);
  REQUIRE(pair);
  SparseVector image = n.map.map.image(*pair);
  CHECK(image.size() == 6);
  Index x1 = *n.algebra.index(1, 0), z1 = *n.algebra.index(0, 1);
  CHECK(abs(image.coefficient(*n.target->find({z1, x1, x1, z1}))) == 1);
  CHECK(image.coefficient(*n.target->find({x1, x1, z1, z1})) == 1);

  // quasi-isomorphism
  CHECK(ranks(n.source.coalgebra->complex(), 6) == ranks(n.target->coalgebra()->complex(), 6));
}

TEST_CASE("bar shuffle map is natural") {
  std::mt19937 rng(9);
  auto a1 = free_gca({{"x", 2}, {"y", 3}}, 7);
  auto a2 = free_gca({{"z", 2}}, 7);
  auto c1 = free_gca({{"p", 2}, {"q", 3}, {"r", 4}}, 7);
  auto c2 = free_gca({{"s", 2}, {"u", 3}}, 7);
  for (int trial = 0; trial < 3; ++trial) {
    auto pick = [&](const FreeGcaPtr& src, const FreeGcaPtr& tgt) {
      std::vector<SparseVector> images;
      for (const auto& g : src->presentation().generators) {
        VectorAccumulator acc;
        for (Index j = tgt->basis()->begin_of(g.degree); j < tgt->basis()->end_of(g.degree); ++j)
          acc.add(j, static_cast<int>(rng() % 5) - 2);
        images.push_back(acc.take());
      }
      return morphism_from_generator_images(images, src, tgt);
    };
    AlgebraMorphism f1 = pick(a1, c1), f2 = pick(a2, c2);
    BarPtr ba1 = bar(a1->algebra()), ba2 = bar(a2->algebra()), bc1 = bar(c1->algebra()), bc2 = bar(c2->algebra());
    Nabla ns = shuffle_nabla(ba1, ba2), nt = shuffle_nabla(bc1, bc2);
    GradedMap left = tensor_maps(bar_of_morphism(f1, ba1, bc1).map, bar_of_morphism(f2, ba2, bc2).map,
                                 ns.source.tensor, nt.source.tensor);
    AlgebraMorphism f12 = tensor_morphisms(f1, f2, ns.algebra, nt.algebra);
    GradedMap right = bar_of_morphism(f12, ns.target, nt.target).map;
    CHECK(compose(nt.map.map, left) == compose(right, ns.map.map));
  }
}

TEST_CASE("cobar shuffle map") {
  CoalgebraPtr c = word_coalgebra({1, 2}, 5, "c");
  CoalgebraPtr d = word_coalgebra({2}, 5, "d");
  CobarPtr oc = cobar(c), od = cobar(d);
  Gamma g = shuffle_gamma(oc, od);
  CheckReport r = check_algebra_morphism(g.map);
  CHECK_MESSAGE(r.ok(), r.describe());

  const auto& cb = *c->basis();
  const auto& db = *d->basis();
  Index c1 = *cb.find("c0"), c2 = *cb.find("c1"), d1 = *db.find("d0");
  auto gen = [&](Index x, Index y) { return *g.coalgebra.tensor->index(x, y); };
  auto image = [&](Word w) { return g.map.map.image(*g.source->find(w)); };
  CHECK(image({gen(c1, d1)}).is_zero());
  CHECK(image({gen(c1, 0), gen(c2, 0)}) ==
        g.target.pair(SparseVector::unit(*oc->find({c1, c2})), SparseVector::unit(0)));
  int sign = sign_power((cb.degree(c2) + 1) * (db.degree(d1) + 1));
  CHECK(image({gen(0, d1), gen(c2, 0)}) ==
        g.target.pair(SparseVector::unit(*oc->find({c2})), SparseVector::unit(*od->find({d1}))).scaled(sign));
  Index c1c1 = *cb.find("c0c0");
  CHECK(image({gen(0, d1), gen(c1c1, 0)}) ==
        g.target.pair(SparseVector::unit(*oc->find({c1c1})), SparseVector::unit(*od->find({d1}))).scaled(-1));

  // gamma t = t (x) eta e + eta e (x) t
  for (Index i = 1; i < g.coalgebra.coalgebra->basis()->size(); ++i) {
    auto [x, y] = g.coalgebra.tensor->factors(i);
    SparseVector lhs = g.map.map.apply(g.source->twisting().map.image(i));
    SparseVector rhs;
    if (y == 0) rhs += g.target.pair(oc->twisting().map.image(x), SparseVector::unit(0));
    if (x == 0) rhs += g.target.pair(SparseVector::unit(0), od->twisting().map.image(y));
    CHECK(lhs == rhs);
  }
  CHECK(ranks(g.source->algebra()->complex(), 5) == ranks(g.target.algebra->complex(), 5));
}

TEST_CASE("shc structure of a commutative algebra") {
  auto kx = free_gca({{"x", 2}}, 7);
  const AlgebraPtr& a = kx->algebra();
  ShcStructure s = shc_structure_cdga(a, QQ);
  CHECK(check_coalgebra_morphism(s.phi).ok());

  auto inclusion = [&](bool left) {
    GradedMap m = GradedMap::from_function(a->basis(), s.square.algebra->basis(), 0, [&](Index i) {
      return SparseVector::unit(left ? *s.square.index(i, 0) : *s.square.index(0, i));
    });
    return AlgebraMorphism{a, s.square.algebra, m};
  };
  GradedMap id = GradedMap::identity(s.target->basis());
  CHECK(compose(s.phi.map, bar_of_morphism(inclusion(true), s.target, s.source).map) == id);
  CHECK(compose(s.phi.map, bar_of_morphism(inclusion(false), s.target, s.source).map) == id);

  AlgebraMorphism chi = interchange(s.square, s.square);
  CHECK(compose(s.phi.map, bar_of_morphism(chi, s.source, s.source).map) == s.phi.map);

  // on length-one words t^A Phi is the multiplication
  Index x = kx->generator("x");
  for (Index i = 1; i < s.source->basis()->size(); ++i) {
    if (s.source->word(i).size() != 1) continue;
    auto [p, q] = s.square.tensor->factors(s.source->word(i)[0]);
    CHECK(s.target->twisting().map.apply(s.phi.map.image(i)) == a->multiply(p, q));
  }
  Index xl = *s.square.index(x, 0), xr = *s.square.index(0, x);
  CHECK(s.phi.map.image(*s.source->find({xl, xr})) == SparseVector::unit(*s.target->find({x, x})));

  // associativity through B(mu (x) id) and B(id (x) mu)
  TensorAlgebra left3 = algebra_tensor(s.square.algebra, a);
  TensorAlgebra right3 = algebra_tensor(a, s.square.algebra);
  AlgebraMorphism mu = multiplication_map(s.square);
  AlgebraMorphism id_a = AlgebraMorphism::identity(a);
  AlgebraMorphism ml = compose(mu, tensor_morphisms(mu, id_a, left3, s.square));
  AlgebraMorphism mr = compose(mu, tensor_morphisms(id_a, mu, right3, s.square));
  GradedMap assoc = GradedMap::from_function(left3.algebra->basis(), right3.algebra->basis(), 0, [&](Index i) {
    auto [pq, r] = left3.tensor->factors(i);
    auto [p, q] = s.square.tensor->factors(pq);
    return SparseVector::unit(*right3.index(p, *s.square.index(q, r)));
  });
  BarPtr bl = bar(left3.algebra, s.target->cutoff()), br = bar(right3.algebra, s.target->cutoff());
  AlgebraMorphism assoc_m{left3.algebra, right3.algebra, assoc};
  REQUIRE(check_algebra_morphism(assoc_m).ok());
  CHECK(bar_of_morphism(ml, bl, s.target).map ==
        compose(bar_of_morphism(mr, br, s.target).map, bar_of_morphism(assoc_m, bl, br).map));

  CobarPtr free_alg = cobar(word_coalgebra({1, 2}, 5));
  CHECK_THROWS_AS(shc_structure_cdga(free_alg->algebra(), QQ), NotCommutative);
}
