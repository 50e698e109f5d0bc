#pragma once

#include "dgtor/linalg/coefficient_ring.hpp"
#include "dgtor/linalg/integer.hpp"

#include <vector>

namespace dgtor {

struct Term {
  Index index;
  Integer coeff;
};

/// Integer vector with sorted, unique, nonzero terms.
class SparseVector {
 public:
  SparseVector() = default;
  static SparseVector unit(Index i, const Integer& c = 1);
  /// Sorts, merges duplicates and drops zeros.
  static SparseVector from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Integer coefficient(Index i) const;
  Index max_index() const { return terms_.back().index; }

  /// this += scale * other, in linear time.
  void add_scaled(const SparseVector& other, const Integer& scale);
  SparseVector& operator+=(const SparseVector& o) { add_scaled(o, 1); return *this; }
  SparseVector& operator-=(const SparseVector& o) { add_scaled(o, -1); return *this; }
  SparseVector operator+(const SparseVector& o) const { SparseVector r = *this; r += o; return r; }
  SparseVector operator-(const SparseVector& o) const { SparseVector r = *this; r -= o; return r; }
  SparseVector operator-() const { return scaled(-1); }
  SparseVector scaled(const Integer& c) const;

  /// Coefficients replaced by their canonical representatives in `ring`.
  SparseVector reduced(const CoefficientRing& ring) const;

  bool operator==(const SparseVector& other) const;

 private:
  std::vector<Term> terms_;
};

/// Collects terms in any order; `take` normalizes once at the end.
class VectorAccumulator {
 public:
  void add(Index i, const Integer& c) {
    if (c != 0) pending_.push_back({i, c});
  }
  void add(const SparseVector& v, const Integer& scale = 1);
  SparseVector take();

 private:
  std::vector<Term> pending_;
};

}  // namespace dgtor
