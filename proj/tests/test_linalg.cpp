#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dgtor/core/errors.hpp"
#include "dgtor/linalg/homology.hpp"
#include "dgtor/linalg/smith.hpp"

#include <random>

using namespace dgtor;

namespace {

IntegerMatrix dense(std::vector<std::vector<long>> rows) {
  IntegerMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

// Fraction-free determinant, independent of the Smith code.
Integer bareiss_det(IntegerMatrix m) {
  std::size_t n = m.rows();
  if (n == 0) return 1;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

// d_k = gcd of k x k minors; invariant factors are d_k / d_{k-1}.
std::vector<Integer> determinantal_divisors(const IntegerMatrix& m) {
  std::vector<Integer> out;
  std::size_t r = m.rows(), c = m.cols();
  Integer prev = 1;
  for (std::size_t k = 1; k <= std::min(r, c); ++k) {
    Integer g = 0;
    std::vector<bool> rs(r), cs(c);
    std::fill(rs.end() - k, rs.end(), true);
    do {
      std::fill(cs.begin(), cs.end(), false);
      std::fill(cs.end() - k, cs.end(), true);
      do {
        IntegerMatrix minor(k, k);
        std::size_t a = 0;
        for (std::size_t i = 0; i < r; ++i) {
          if (!rs[i]) continue;
          std::size_t b = 0;
          for (std::size_t j = 0; j < c; ++j)
            if (cs[j]) minor(a, b++) = m(i, j);
          ++a;
        }
        g = boost::multiprecision::gcd(g, bareiss_det(minor));
      } while (std::next_permutation(cs.begin(), cs.end()));
    } while (std::next_permutation(rs.begin(), rs.end()));
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

std::size_t rank_mod_p(IntegerMatrix m, long p) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && mod_floor(m(piv, c), p) == 0) ++piv;
    if (piv == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(piv, j));
    Integer inv = powm(mod_floor(m(r, c), p), p - 2, Integer(p));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      Integer f = mod_floor(m(i, c) * inv, p);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = mod_floor(m(i, j) - f * m(r, j), p);
    }
    ++r;
  }
  return r;
}

IntegerMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int range, int density = 60) {
  IntegerMatrix m(r, c);
  std::uniform_int_distribution<int> val(-range, range), dens(0, 99);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (dens(rng) < density) m(i, j) = val(rng);
  return m;
}

// Random unimodular matrix and its inverse from elementary operations.
std::pair<IntegerMatrix, IntegerMatrix> random_unimodular(std::mt19937& rng, std::size_t n) {
  IntegerMatrix u = IntegerMatrix::identity(n), v = IntegerMatrix::identity(n);
  if (n < 2) return {u, v};
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int step = 0; step < 3 * static_cast<int>(n); ++step) {
    std::size_t a = idx(rng), b = idx(rng);
    if (a == b) continue;
    int c = coef(rng);
    for (std::size_t j = 0; j < n; ++j) u(a, j) += c * u(b, j);  // row_a += c row_b
    for (std::size_t i = 0; i < n; ++i) v(i, b) -= c * v(i, a);  // inverse: col_b -= c col_a
  }
  return {u, v};
}

SparseVector vec(std::vector<long> entries) {
  std::vector<Term> t;
  for (std::size_t i = 0; i < entries.size(); ++i) t.push_back({i, entries[i]});
  return SparseVector::from_terms(t);
}

}  // namespace

TEST_CASE("sparse vectors normalize and merge") {
  auto v = SparseVector::from_terms({{3, 2}, {1, 5}, {3, -2}, {0, 0}});
  CHECK(v.size() == 1);
  CHECK(v.coefficient(1) == 5);
  v.add_scaled(SparseVector::unit(1, 1), -5);
  CHECK(v.is_zero());
  auto w = vec({1, 2, 3}).reduced(CoefficientRing::prime_field(2));
  CHECK(w == vec({1, 0, 1}));
}

TEST_CASE("coefficient rings parse and reject composites") {
  CHECK(CoefficientRing::parse("Z") == CoefficientRing::integers());
  CHECK(CoefficientRing::parse("F5").characteristic() == 5);
  CHECK(CoefficientRing::parse("Q").is_field());
  CHECK_THROWS_AS(CoefficientRing::parse("F4"), ValidationError);
  CHECK_THROWS_AS(CoefficientRing::parse("R"), ValidationError);
}

TEST_CASE("smith normal form on the documented examples") {
  CHECK(smith_normal_form(SparseMatrix::from_dense(IntegerMatrix::identity(2))).divisors == std::vector<Integer>{1, 1});
  auto s = smith_normal_form(SparseMatrix::from_dense(dense({{2, 4}, {6, 8}})));
  CHECK(s.divisors == std::vector<Integer>{2, 4});
  CHECK(determinantal_divisors(dense({{2, 4}, {6, 8}})) == std::vector<Integer>{2, 4});
  CHECK(smith_normal_form(SparseMatrix(2, 3)).divisors.empty());
}

TEST_CASE("smith normal form matches determinantal divisors on random matrices") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    IntegerMatrix m = random_matrix(rng, r, c, 9);
    auto s = smith_normal_form(SparseMatrix::from_dense(m));
    CHECK(s.divisors == determinantal_divisors(m));
    for (std::size_t i = 1; i < s.divisors.size(); ++i) CHECK(s.divisors[i] % s.divisors[i - 1] == 0);
    IntegerMatrix d = s.left * m * s.right;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) {
        Integer expected = (i == j && i < s.divisors.size()) ? s.divisors[i] : Integer(0);
        CHECK(d(i, j) == expected);
      }
    CHECK(abs(bareiss_det(s.left)) == 1);
    CHECK(abs(bareiss_det(s.right)) == 1);
  }
}

TEST_CASE("smith decomposition inverses are inverses") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    IntegerMatrix m = random_matrix(rng, 1 + rng() % 5, 1 + rng() % 5, 6);
    auto s = smith_decomposition(m);
    CHECK(s.left * s.left_inverse == IntegerMatrix::identity(m.rows()));
    CHECK(s.right * s.right_inverse == IntegerMatrix::identity(m.cols()));
  }
}

TEST_CASE("homology_at examples") {
  auto z = CoefficientRing::integers();
  auto h = homology_at(SparseMatrix::from_dense(dense({{2}})), SparseMatrix(0, 1), z);
  CHECK(h.free_rank == 0);
  CHECK(h.torsion == std::vector<Integer>{2});
  h = homology_at(SparseMatrix(1, 0), SparseMatrix(0, 1), z);
  CHECK(h.free_rank == 1);
  CHECK(h.torsion.empty());
  h = homology_at(SparseMatrix::from_dense(dense({{-6}})), SparseMatrix(0, 1), z);
  CHECK(h.torsion == std::vector<Integer>{6});
  CHECK_THROWS_AS(homology_at(SparseMatrix::from_dense(dense({{1}})), SparseMatrix::from_dense(dense({{1}})), z),
                  CompositionNotZero);
  // over F2 the map x2 vanishes
  h = homology_at(SparseMatrix::from_dense(dense({{2}})), SparseMatrix(0, 1), CoefficientRing::prime_field(2));
  CHECK(h.free_rank == 1);
}

TEST_CASE("coordinates_in_homology examples") {
  auto d_in = SparseMatrix(2, 0), d_out = SparseMatrix(0, 2);
  auto f2 = CoefficientRing::prime_field(2);
  auto g = HomologyGroup::compute(d_in, d_out, f2);
  auto gen = g.summary().generators.at(0);
  CHECK(g.coordinates(gen) == Coordinates{1, 0});
  CHECK(g.coordinates(gen.scaled(3)) == Coordinates{1, 0});
  auto zi = HomologyGroup::compute(SparseMatrix::from_dense(dense({{2}, {0}})), SparseMatrix(0, 2),
                                   CoefficientRing::integers());
  CHECK(zi.coordinates(vec({2, 0})) == Coordinates{0, 0});
  CHECK_THROWS_AS(HomologyGroup::compute(SparseMatrix(1, 0), SparseMatrix::from_dense(dense({{1}})),
                                         CoefficientRing::integers())
                      .coordinates(vec({1})),
                  NotACycle);
}

namespace {

struct RandomSequence {
  SparseMatrix d_in, d_out;
  IntegerMatrix block_in, block_out;
  std::size_t split;
};

RandomSequence random_sequence(std::mt19937& rng) {
  std::size_t n = 1 + rng() % 6, k = rng() % 5, m = rng() % 5;
  std::size_t a = rng() % (n + 1);
  IntegerMatrix d1 = random_matrix(rng, a, k, 4, 50);
  IntegerMatrix d2 = random_matrix(rng, m, n - a, 4, 50);
  auto [u, uinv] = random_unimodular(rng, n);
  IntegerMatrix in_full(n, k), out_full(m, n);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < k; ++j) in_full(i, j) = d1(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = a; j < n; ++j) out_full(i, j) = d2(i, j - a);
  return {SparseMatrix::from_dense(u * in_full), SparseMatrix::from_dense(out_full * uinv), d1, d2, a};
}

}  // namespace

TEST_CASE("integer homology of random sequences matches the block structure") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 80; ++trial) {
    auto s = random_sequence(rng);
    auto h = homology_at(s.d_in, s.d_out, CoefficientRing::integers());
    std::vector<Integer> expected_torsion;
    auto divs = determinantal_divisors(s.block_in);
    for (auto& d : divs)
      if (d != 1) expected_torsion.push_back(d);
    std::size_t free = (s.split - divs.size()) + (s.d_in.rows() - s.split - rank_mod_p(s.block_out, 1000003));
    CHECK(h.torsion == expected_torsion);
    CHECK(h.free_rank == free);
  }
}

TEST_CASE("homology over prime fields satisfies rank-nullity") {
  std::mt19937 rng(7);
  for (long p : {2L, 3L, 5L}) {
    for (int trial = 0; trial < 40; ++trial) {
      auto s = random_sequence(rng);
      auto ring = CoefficientRing::prime_field(static_cast<std::uint32_t>(p));
      auto h = homology_at(s.d_in, s.d_out, ring);
      std::size_t n = s.d_in.rows();
      std::size_t expected = n - rank_mod_p(s.d_out.to_dense(), p) - rank_mod_p(s.d_in.to_dense(), p);
      CHECK(h.free_rank == expected);
      CHECK(h.torsion.empty());
    }
  }
}

TEST_CASE("coordinates ignore boundaries and recover generators") {
  std::mt19937 rng(11);
  for (auto ring : {CoefficientRing::integers(), CoefficientRing::prime_field(3), CoefficientRing::rationals()}) {
    for (int trial = 0; trial < 40; ++trial) {
      auto s = random_sequence(rng);
      auto g = HomologyGroup::compute(s.d_in, s.d_out, ring);
      const auto& gens = g.summary().generators;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        Coordinates unit(gens.size(), Rational(0));
        unit[i] = 1;
        CHECK(g.coordinates(gens[i]) == g.normalize(unit));
        if (s.d_in.cols() > 0) {
          SparseVector boundary = s.d_in.column(rng() % s.d_in.cols()).scaled(static_cast<long>(rng() % 5) - 2);
          CHECK(g.coordinates(gens[i] + boundary) == g.coordinates(gens[i]));
        }
      }
    }
  }
}

TEST_CASE("integer and modular system solving") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    IntegerMatrix a = random_matrix(rng, 1 + rng() % 4, 1 + rng() % 4, 5);
    std::vector<Integer> x(a.cols());
    for (auto& e : x) e = static_cast<long>(rng() % 7) - 3;
    std::vector<Integer> b(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) b[i] += a(i, j) * x[j];
    auto sol = solve_integer(a, b);
    REQUIRE(sol.has_value());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      Integer lhs = 0;
      for (std::size_t j = 0; j < a.cols(); ++j) lhs += a(i, j) * (*sol)[j];
      CHECK(lhs == b[i]);
    }
  }
  CHECK_FALSE(solve_integer(dense({{2}}), {1}).has_value());
  // 2x = 1 mod 3 has the solution x = 2
  auto s = solve_modular_system({{Rational(2)}}, {Rational(1)}, {Integer(3)}, CoefficientRing::integers());
  REQUIRE(s.has_value());
  CHECK(mod_floor(numerator((*s)[0]) * 2 - 1, 3) == 0);
}
