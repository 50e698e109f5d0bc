#include "dgtor/graded/graded_map.hpp"

#include "dgtor/core/errors.hpp"

#include <stdexcept>

namespace dgtor {

GradedMap::GradedMap(BasisPtr source, BasisPtr target, int degree)
    : source_(std::move(source)), target_(std::move(target)), degree_(degree), images_(source_->size()) {}

GradedMap GradedMap::from_images(BasisPtr source, BasisPtr target, int degree, std::vector<SparseVector> images) {
  if (images.size() != source->size()) throw std::invalid_argument("one image per source element is required");
  GradedMap m(source, target, degree);
  for (Index i = 0; i < images.size(); ++i) {
    int want = source->degree(i) + degree;
    for (const auto& t : images[i]) {
      if (t.index >= target->size() || target->degree(t.index) != want) {
        throw DegreeMismatch("image of '" + source->name(i) + "' has a term outside degree " + std::to_string(want));
      }
    }
  }
  m.images_ = std::move(images);
  return m;
}

GradedMap GradedMap::from_function(BasisPtr source, BasisPtr target, int degree,
                                   const std::function<SparseVector(Index)>& f) {
  GradedMap m(source, target, degree);
  for (Index i = 0; i < source->size(); ++i) {
    int want = source->degree(i) + degree;
    if (want < 0 || want > target->cutoff()) continue;
    SparseVector v = f(i);
    for (const auto& t : v) {
      if (t.index >= target->size() || target->degree(t.index) != want) {
        throw DegreeMismatch("image of '" + source->name(i) + "' has a term outside degree " + std::to_string(want));
      }
    }
    m.images_[i] = std::move(v);
  }
  return m;
}

GradedMap GradedMap::identity(BasisPtr basis) {
  GradedMap m(basis, basis, 0);
  for (Index i = 0; i < basis->size(); ++i) m.images_[i] = SparseVector::unit(i);
  return m;
}

SparseVector GradedMap::apply(const SparseVector& v) const {
  VectorAccumulator acc;
  for (const auto& t : v) acc.add(images_.at(t.index), t.coeff);
  return acc.take();
}

SparseMatrix GradedMap::block(int q) const {
  Index s0 = source_->begin_of(q), s1 = source_->end_of(q);
  Index t0 = target_->begin_of(q + degree_), t1 = target_->end_of(q + degree_);
  std::vector<SparseVector> cols;
  cols.reserve(s1 - s0);
  for (Index i = s0; i < s1; ++i) {
    std::vector<Term> terms;
    for (const auto& t : images_[i]) terms.push_back({t.index - t0, t.coeff});
    cols.push_back(SparseVector::from_terms(std::move(terms)));
  }
  return SparseMatrix::from_columns(t1 - t0, std::move(cols));
}

namespace {
void check_parallel(const GradedMap& a, const GradedMap& b) {
  if (!same_basis(a.source(), b.source()) || !same_basis(a.target(), b.target()) || a.degree() != b.degree()) {
    throw std::invalid_argument("maps are not parallel");
  }
}
}  // namespace

GradedMap GradedMap::operator+(const GradedMap& other) const {
  check_parallel(*this, other);
  GradedMap r = *this;
  for (Index i = 0; i < images_.size(); ++i) r.images_[i] += other.images_[i];
  return r;
}

GradedMap GradedMap::operator-(const GradedMap& other) const {
  check_parallel(*this, other);
  GradedMap r = *this;
  for (Index i = 0; i < images_.size(); ++i) r.images_[i] -= other.images_[i];
  return r;
}

GradedMap GradedMap::scaled(const Integer& c) const {
  GradedMap r = *this;
  for (auto& v : r.images_) v = v.scaled(c);
  return r;
}

GradedMap GradedMap::reduced(const CoefficientRing& ring) const {
  GradedMap r = *this;
  for (auto& v : r.images_) v = v.reduced(ring);
  return r;
}

bool GradedMap::is_zero() const {
  for (const auto& v : images_) {
    if (!v.is_zero()) return false;
  }
  return true;
}

bool GradedMap::operator==(const GradedMap& other) const {
  return degree_ == other.degree_ && same_basis(source_, other.source_) && same_basis(target_, other.target_) &&
         images_ == other.images_;
}

std::optional<Index> GradedMap::first_difference(const GradedMap& other, int max_degree) const {
  check_parallel(*this, other);
  for (Index i = 0; i < images_.size(); ++i) {
    if (source_->degree(i) > max_degree) break;
    if (!(images_[i] == other.images_[i])) return i;
  }
  return std::nullopt;
}

GradedMap compose(const GradedMap& g, const GradedMap& f) {
  if (!same_basis(f.target(), g.source())) throw std::invalid_argument("compose: target of f is not source of g");
  GradedMap r(f.source(), g.target(), f.degree() + g.degree());
  std::vector<SparseVector> images(f.source()->size());
  for (Index i = 0; i < images.size(); ++i) images[i] = g.apply(f.image(i));
  return GradedMap::from_images(f.source(), g.target(), f.degree() + g.degree(), std::move(images));
}

}  // namespace dgtor
