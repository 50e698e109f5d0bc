#include "dgtor/linalg/sparse_vector.hpp"

#include <algorithm>

namespace dgtor {

SparseVector SparseVector::unit(Index i, const Integer& c) {
  SparseVector v;
  if (c != 0) v.terms_.push_back({i, c});
  return v;
}

SparseVector SparseVector::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
  SparseVector v;
  v.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!v.terms_.empty() && v.terms_.back().index == t.index) {
      v.terms_.back().coeff += t.coeff;
    } else {
      if (!v.terms_.empty() && v.terms_.back().coeff == 0) v.terms_.pop_back();
      v.terms_.push_back(std::move(t));
    }
  }
  if (!v.terms_.empty() && v.terms_.back().coeff == 0) v.terms_.pop_back();
  return v;
}

Integer SparseVector::coefficient(Index i) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), i, [](const Term& t, Index k) { return t.index < k; });
  if (it != terms_.end() && it->index == i) return it->coeff;
  return 0;
}

void SparseVector::add_scaled(const SparseVector& other, const Integer& scale) {
  if (scale == 0 || other.is_zero()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->index < b->index)) {
      out.push_back(std::move(*a));
      ++a;
    } else if (a == terms_.end() || b->index < a->index) {
      out.push_back({b->index, b->coeff * scale});
      ++b;
    } else {
      Integer c = a->coeff + b->coeff * scale;
      if (c != 0) out.push_back({a->index, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

SparseVector SparseVector::scaled(const Integer& c) const {
  SparseVector r;
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.index, t.coeff * c});
  return r;
}

SparseVector SparseVector::reduced(const CoefficientRing& ring) const {
  if (ring.kind() != CoefficientRing::Kind::PrimeField) return *this;
  SparseVector r;
  for (const auto& t : terms_) {
    Integer c = ring.reduce(t.coeff);
    if (c != 0) r.terms_.push_back({t.index, std::move(c)});
  }
  return r;
}

bool SparseVector::operator==(const SparseVector& other) const {
  if (terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].index != other.terms_[i].index || terms_[i].coeff != other.terms_[i].coeff) return false;
  }
  return true;
}

void VectorAccumulator::add(const SparseVector& v, const Integer& scale) {
  if (scale == 0) return;
  for (const auto& t : v) pending_.push_back({t.index, t.coeff * scale});
}

SparseVector VectorAccumulator::take() {
  SparseVector v = SparseVector::from_terms(std::move(pending_));
  pending_.clear();
  return v;
}

}  // namespace dgtor
