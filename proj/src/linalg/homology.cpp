#include "dgtor/linalg/homology.hpp"

#include "dgtor/core/errors.hpp"
#include "dgtor/linalg/smith.hpp"

#include <cstdint>
#include <algorithm>
#include <map>
#include <queue>
#include <type_traits>
#include <stdexcept>

namespace dgtor {

struct HomologyGroup::Impl {
  virtual ~Impl() = default;
  virtual Coordinates coordinates(const SparseVector& cycle) const = 0;

  CoefficientRing ring = CoefficientRing::integers();
  ModuleSummary summary;
  SparseMatrix d_out;
  std::size_t dim = 0;
};

namespace {

void check_composition(const SparseMatrix& d_in, const SparseMatrix& d_out, const CoefficientRing& ring) {
  if (d_in.rows() != d_out.cols()) {
    throw std::invalid_argument("homology: d_in has " + std::to_string(d_in.rows()) + " rows but d_out has " +
                                std::to_string(d_out.cols()) + " columns");
  }
  if (d_in.cols() == 0 || d_out.rows() == 0) return;
  if (!(d_out * d_in).reduced(ring).is_zero()) {
    throw CompositionNotZero("d_out * d_in is nonzero over " + ring.name());
  }
}

void check_cycle(const HomologyGroup::Impl& impl, const SparseVector& cycle) {
  if (!cycle.is_zero() && cycle.max_index() >= impl.dim) throw std::out_of_range("cycle index out of range");
  if (impl.d_out.rows() == 0) return;
  if (!impl.d_out.apply(cycle).reduced(impl.ring).is_zero()) {
    throw NotACycle("vector is not annihilated by the outgoing differential");
  }
}

// ---------------------------------------------------------------- integers

struct IntegerImpl final : HomologyGroup::Impl {
  IntegerMatrix left;                 // coordinates in the adapted basis
  std::size_t r = 0;                  // rank of d_in
  std::vector<Integer> in_divisors;   // all nonzero divisors of d_in
  IntegerMatrix kernel_right_inverse; // for the free part
  std::size_t s = 0;                  // rank of d_out restricted to the complement

  Coordinates coordinates(const SparseVector& cycle) const override {
    std::vector<Integer> y(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      for (const auto& t : cycle) {
        if (left(i, t.index) != 0) y[i] += left(i, t.index) * t.coeff;
      }
    }
    Coordinates out;
    for (std::size_t i = 0; i < r; ++i) {
      if (in_divisors[i] != 1) out.emplace_back(mod_floor(y[i], in_divisors[i]));
    }
    std::size_t tail = dim - r;
    for (std::size_t j = s; j < tail; ++j) {
      Integer w = 0;
      for (std::size_t k = 0; k < tail; ++k) {
        if (kernel_right_inverse(j, k) != 0) w += kernel_right_inverse(j, k) * y[r + k];
      }
      out.emplace_back(w);
    }
    return out;
  }
};

std::shared_ptr<HomologyGroup::Impl> integer_homology(const SparseMatrix& d_in, const SparseMatrix& d_out) {
  auto impl = std::make_shared<IntegerImpl>();
  const std::size_t n = d_in.rows();
  impl->dim = n;
  SmithDecomposition s1 = smith_decomposition(d_in.to_dense());
  impl->r = s1.divisors.size();
  impl->in_divisors = s1.divisors;
  impl->left = s1.left;

  // Generators of the adapted basis are the columns of left_inverse.
  auto column_of = [&](const IntegerMatrix& m, std::size_t c) {
    std::vector<Term> t;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (m(i, c) != 0) t.push_back({i, m(i, c)});
    }
    return SparseVector::from_terms(std::move(t));
  };

  const std::size_t r = impl->r;
  const std::size_t tail = n - r;
  IntegerMatrix complement(n, tail);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < tail; ++j) complement(i, j) = s1.left_inverse(i, r + j);
  }
  IntegerMatrix restricted = d_out.rows() == 0 ? IntegerMatrix(0, tail) : d_out.to_dense() * complement;
  SmithDecomposition s2 = smith_decomposition(restricted);
  impl->s = s2.divisors.size();
  impl->kernel_right_inverse = s2.right_inverse;

  for (std::size_t i = 0; i < r; ++i) {
    if (s1.divisors[i] == 1) continue;
    impl->summary.torsion.push_back(s1.divisors[i]);
    impl->summary.generators.push_back(column_of(s1.left_inverse, i));
  }
  for (std::size_t j = impl->s; j < tail; ++j) {
    VectorAccumulator acc;
    for (std::size_t k = 0; k < tail; ++k) {
      if (s2.right(k, j) != 0) acc.add(column_of(complement, k), s2.right(k, j));
    }
    impl->summary.generators.push_back(acc.take());
    ++impl->summary.free_rank;
  }
  return impl;
}

// ------------------------------------------------------------------ fields

struct PrimeFieldOps {
  using Elem = std::uint64_t;
  std::uint64_t p;

  Elem from_integer(const Integer& x) const { return static_cast<Elem>(mod_floor(x, Integer(p))); }
  Elem from_rational(const Rational& x) const {
    return mul(from_integer(numerator(x)), inv(from_integer(denominator(x))));
  }
  Elem add(Elem a, Elem b) const { return (a + b) % p; }
  Elem sub(Elem a, Elem b) const { return (a + p - b) % p; }
  Elem mul(Elem a, Elem b) const { return (a * b) % p; }
  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("division by zero in prime field");
    Elem result = 1, base = a, e = p - 2;
    while (e > 0) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  static bool is_zero(Elem a) { return a == 0; }
  static Rational to_rational(Elem a) { return Rational(Integer(a)); }
};

struct RationalOps {
  using Elem = Rational;
  Elem from_integer(const Integer& x) const { return Rational(x); }
  Elem from_rational(const Rational& x) const { return x; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem div(const Elem& a, const Elem& b) const {
    if (b == 0) throw std::domain_error("division by zero in rationals");
    return a / b;
  }
  static bool is_zero(const Elem& a) { return a == 0; }
  static Rational to_rational(const Elem& a) { return a; }
};

template <class F>
using FieldVector = std::vector<std::pair<Index, typename F::Elem>>;  // sorted by index

// Table of vectors in echelon form keyed by their largest index. Reduction
// runs on a dense scratch buffer with a max-heap of live indices.
template <class F>
class PivotTable {
 public:
  using Elem = typename F::Elem;

  PivotTable(const F& ops, std::size_t dim) : ops_(ops), slot_of_(dim, -1), work_(dim), live_(dim, false) {}

  // Reduces v; `on_step(slot, factor)` is called for every subtraction
  // v -= factor * table[slot]. Returns the residual.
  template <class Step>
  FieldVector<F> reduce(const FieldVector<F>& v, Step&& on_step) {
    std::priority_queue<Index> heap;
    for (const auto& [i, e] : v) {
      work_[i] = e;
      if (!live_[i]) {
        live_[i] = true;
        heap.push(i);
      }
    }
    FieldVector<F> residual;
    while (!heap.empty()) {
      Index i = heap.top();
      if (F::is_zero(work_[i])) {
        heap.pop();
        live_[i] = false;
        continue;
      }
      int s = slot_of_[i];
      if (s < 0) break;
      const FieldVector<F>& u = rows_[s];
      Elem factor = ops_.div(work_[i], u.back().second);
      on_step(static_cast<std::size_t>(s), factor);
      for (const auto& [j, e] : u) {
        work_[j] = ops_.sub(work_[j], ops_.mul(factor, e));
        if (!live_[j]) {
          live_[j] = true;
          heap.push(j);
        }
      }
    }
    while (!heap.empty()) {
      Index i = heap.top();
      heap.pop();
      if (live_[i] && !F::is_zero(work_[i])) residual.push_back({i, work_[i]});
      live_[i] = false;
      work_[i] = Elem{};
    }
    std::reverse(residual.begin(), residual.end());
    return residual;
  }

  FieldVector<F> reduce(const FieldVector<F>& v) {
    return reduce(v, [](std::size_t, const Elem&) {});
  }

  std::size_t insert(FieldVector<F> v) {
    slot_of_[v.back().first] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(v));
    return rows_.size() - 1;
  }

  std::size_t size() const { return rows_.size(); }

 private:
  const F& ops_;
  std::vector<int> slot_of_;
  std::vector<FieldVector<F>> rows_;
  std::vector<Elem> work_;
  std::vector<bool> live_;
};

template <class F>
FieldVector<F> to_field(const F& ops, const SparseVector& v) {
  FieldVector<F> out;
  for (const auto& t : v) {
    auto e = ops.from_integer(t.coeff);
    if (!F::is_zero(e)) out.push_back({t.index, e});
  }
  return out;
}

// Scales a field vector to an integral vector with the same span.
template <class F>
std::pair<SparseVector, FieldVector<F>> integral_form(const F& ops, const FieldVector<F>& v) {
  if constexpr (std::is_same_v<F, RationalOps>) {
    Integer den = 1;
    for (const auto& [i, e] : v) {
      Integer d = denominator(e);
      den = boost::multiprecision::lcm(den, d);
    }
    Integer g = 0;
    for (const auto& [i, e] : v) {
      Integer n = numerator(e * Rational(den));
      g = boost::multiprecision::gcd(g, n);
    }
    Rational scale = Rational(den) / Rational(g);
    std::vector<Term> terms;
    FieldVector<F> scaled;
    for (const auto& [i, e] : v) {
      Rational s = e * scale;
      terms.push_back({i, numerator(s)});
      scaled.push_back({i, s});
    }
    return {SparseVector::from_terms(std::move(terms)), std::move(scaled)};
  } else {
    (void)ops;
    std::vector<Term> terms;
    for (const auto& [i, e] : v) terms.push_back({i, Integer(e)});
    return {SparseVector::from_terms(std::move(terms)), v};
  }
}

template <class F>
struct FieldImpl final : HomologyGroup::Impl {
  explicit FieldImpl(F f, std::size_t n) : ops(std::move(f)), table(ops, n) {}
  F ops;
  mutable PivotTable<F> table;          // image rows followed by generator rows
  std::vector<int> generator_of_slot;   // -1 for image rows

  Coordinates coordinates(const SparseVector& cycle) const override {
    std::vector<typename F::Elem> coords(summary.generators.size());
    auto residual = table.reduce(to_field(ops, cycle), [&](std::size_t slot, const typename F::Elem& f) {
      int g = generator_of_slot[slot];
      if (g >= 0) coords[g] = ops.add(coords[g], f);
    });
    if (!residual.empty()) throw NotACycle("vector is not in the span of cycles");
    Coordinates out;
    for (const auto& c : coords) out.push_back(F::to_rational(c));
    return out;
  }
};

template <class F>
std::shared_ptr<HomologyGroup::Impl> field_homology(F ops, const SparseMatrix& d_in, const SparseMatrix& d_out) {
  const std::size_t n = d_in.rows();
  auto impl = std::make_shared<FieldImpl<F>>(ops, n);
  impl->dim = n;
  for (const auto& col : d_in.columns()) {
    auto r = impl->table.reduce(to_field(impl->ops, col));
    if (!r.empty()) {
      impl->table.insert(std::move(r));
      impl->generator_of_slot.push_back(-1);
    }
  }

  // Kernel of d_out by column reduction with tracked combinations.
  std::vector<FieldVector<F>> kernel;
  {
    PivotTable<F> outs(impl->ops, d_out.rows());
    std::vector<FieldVector<F>> combos;
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<typename F::Elem> coeff_of_slot;
      std::vector<std::pair<std::size_t, typename F::Elem>> steps;
      auto r = outs.reduce(to_field(impl->ops, d_out.rows() == 0 ? SparseVector() : d_out.column(j)),
                           [&](std::size_t slot, const typename F::Elem& f) { steps.push_back({slot, f}); });
      // combination = e_j - sum f * combos[slot]
      std::map<Index, typename F::Elem> comb;
      comb[j] = impl->ops.from_integer(1);
      for (const auto& [slot, f] : steps) {
        for (const auto& [i, e] : combos[slot]) comb[i] = impl->ops.sub(comb[i], impl->ops.mul(f, e));
      }
      FieldVector<F> cv;
      for (auto& [i, e] : comb) {
        if (!F::is_zero(e)) cv.push_back({i, e});
      }
      if (r.empty()) {
        kernel.push_back(std::move(cv));
      } else {
        outs.insert(std::move(r));
        combos.push_back(std::move(cv));
      }
    }
  }

  for (const auto& z : kernel) {
    auto r = impl->table.reduce(z);
    if (r.empty()) continue;
    auto [integral, scaled] = integral_form(impl->ops, r);
    impl->generator_of_slot.push_back(static_cast<int>(impl->summary.generators.size()));
    impl->table.insert(std::move(scaled));
    impl->summary.generators.push_back(std::move(integral));
    ++impl->summary.free_rank;
  }
  return impl;
}

}  // namespace

HomologyGroup HomologyGroup::compute(const SparseMatrix& d_in, const SparseMatrix& d_out, const CoefficientRing& ring) {
  check_composition(d_in, d_out, ring);
  std::shared_ptr<Impl> impl;
  switch (ring.kind()) {
    case CoefficientRing::Kind::Integers: impl = integer_homology(d_in, d_out); break;
    case CoefficientRing::Kind::PrimeField:
      impl = field_homology(PrimeFieldOps{ring.characteristic()}, d_in, d_out);
      break;
    case CoefficientRing::Kind::Rationals: impl = field_homology(RationalOps{}, d_in, d_out); break;
  }
  impl->ring = ring;
  impl->d_out = d_out;
  HomologyGroup g;
  g.impl_ = std::move(impl);
  return g;
}

const ModuleSummary& HomologyGroup::summary() const {
  static const ModuleSummary empty;
  return impl_ ? impl_->summary : empty;
}

const CoefficientRing& HomologyGroup::ring() const {
  static const CoefficientRing z = CoefficientRing::integers();
  return impl_ ? impl_->ring : z;
}

std::size_t HomologyGroup::chain_dimension() const { return impl_ ? impl_->dim : 0; }

std::vector<Integer> HomologyGroup::orders() const {
  std::vector<Integer> out;
  const auto& s = summary();
  for (const auto& d : s.torsion) out.push_back(d);
  Integer free_order = ring().kind() == CoefficientRing::Kind::PrimeField ? Integer(ring().characteristic()) : 0;
  for (std::size_t i = 0; i < s.free_rank; ++i) out.push_back(free_order);
  return out;
}

Coordinates HomologyGroup::coordinates(const SparseVector& cycle) const {
  if (!impl_) {
    if (!cycle.is_zero()) throw NotACycle("empty homology group given a nonzero vector");
    return {};
  }
  check_cycle(*impl_, cycle);
  return impl_->coordinates(cycle);
}

Coordinates HomologyGroup::normalize(Coordinates c) const { return reduce_coordinates(std::move(c), orders()); }

SparseVector HomologyGroup::cycle_of(const Coordinates& c) const {
  const auto& gens = summary().generators;
  if (c.size() != gens.size()) throw std::invalid_argument("coordinate vector has the wrong length");
  VectorAccumulator acc;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (denominator(c[i]) != 1) throw std::invalid_argument("cycle_of needs integral coordinates");
    acc.add(gens[i], numerator(c[i]));
  }
  return acc.take();
}

Coordinates reduce_coordinates(Coordinates c, const std::vector<Integer>& orders) {
  if (c.size() != orders.size()) throw std::invalid_argument("coordinate vector has the wrong length");
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (orders[i] == 0) continue;
    const Integer& m = orders[i];
    Integer num = mod_floor(numerator(c[i]), m);
    Integer den = mod_floor(denominator(c[i]), m);
    if (den != 1) {
      // invert the denominator modulo m (only arises from rational inputs)
      Integer g = boost::multiprecision::gcd(den, m);
      if (g != 1) throw std::domain_error("coordinate denominator not invertible modulo the order");
      Integer inv = powm(den, m - 2, m);  // m prime whenever denominators occur
      num = mod_floor(num * inv, m);
    }
    c[i] = Rational(num);
  }
  return c;
}

ModuleSummary homology_at(const SparseMatrix& d_in, const SparseMatrix& d_out, const CoefficientRing& ring) {
  return HomologyGroup::compute(d_in, d_out, ring).summary();
}

Coordinates coordinates_in_homology(const SparseVector& cycle, const SparseMatrix& d_in, const SparseMatrix& d_out,
                                    const CoefficientRing& ring) {
  return HomologyGroup::compute(d_in, d_out, ring).coordinates(cycle);
}

namespace {

template <class F>
std::optional<Coordinates> solve_over_field(const F& ops, const std::vector<Coordinates>& a, const Coordinates& b) {
  using Elem = typename F::Elem;
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<std::vector<Elem>> m(rows, std::vector<Elem>(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = ops.from_rational(a[i][j]);
    m[i][cols] = ops.from_rational(b[i]);
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && F::is_zero(m[p][c])) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Elem inv = ops.div(ops.from_integer(1), m[r][c]);
    for (auto& e : m[r]) e = ops.mul(e, inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || F::is_zero(m[i][c])) continue;
      Elem f = m[i][c];
      for (std::size_t k = 0; k <= cols; ++k) m[i][k] = ops.sub(m[i][k], ops.mul(f, m[r][k]));
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (!F::is_zero(m[i][cols])) return std::nullopt;
  }
  Coordinates x(cols, Rational(0));
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = F::to_rational(m[i][cols]);
  return x;
}

}  // namespace

std::optional<Coordinates> solve_modular_system(const std::vector<Coordinates>& a, const Coordinates& b,
                                                const std::vector<Integer>& moduli, const CoefficientRing& ring) {
  if (a.size() != b.size() || moduli.size() != b.size()) throw std::invalid_argument("system dimensions differ");
  switch (ring.kind()) {
    case CoefficientRing::Kind::PrimeField:
      return solve_over_field(PrimeFieldOps{ring.characteristic()}, a, b);
    case CoefficientRing::Kind::Rationals: return solve_over_field(RationalOps{}, a, b);
    case CoefficientRing::Kind::Integers: break;
  }
  // Over Z: [a | diag(moduli)] (x, k) = b.
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<std::size_t> slack_rows;
  for (std::size_t i = 0; i < rows; ++i) {
    if (moduli[i] != 0) slack_rows.push_back(i);
  }
  IntegerMatrix m(rows, cols + slack_rows.size());
  std::vector<Integer> rhs(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (denominator(a[i][j]) != 1) throw std::invalid_argument("integer system with fractional entry");
      m(i, j) = numerator(a[i][j]);
    }
    if (denominator(b[i]) != 1) throw std::invalid_argument("integer system with fractional entry");
    rhs[i] = numerator(b[i]);
  }
  for (std::size_t k = 0; k < slack_rows.size(); ++k) m(slack_rows[k], cols + k) = moduli[slack_rows[k]];
  auto sol = solve_integer(m, rhs);
  if (!sol) return std::nullopt;
  Coordinates x;
  for (std::size_t j = 0; j < cols; ++j) x.emplace_back((*sol)[j]);
  return x;
}

}  // namespace dgtor
