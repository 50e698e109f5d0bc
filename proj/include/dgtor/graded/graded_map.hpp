#pragma once

#include "dgtor/graded/basis.hpp"
#include "dgtor/linalg/sparse_matrix.hpp"

#include <functional>

namespace dgtor {

/// Homogeneous linear map of fixed degree between graded free modules,
/// stored as the image of every source basis element. Images that would
/// land above the target cutoff are zero.
class GradedMap {
 public:
  GradedMap() = default;
  /// The zero map.
  GradedMap(BasisPtr source, BasisPtr target, int degree);

  /// Throws DegreeMismatch if some image term has the wrong degree.
  static GradedMap from_images(BasisPtr source, BasisPtr target, int degree, std::vector<SparseVector> images);
  /// Evaluates `f` on source elements whose image degree is tracked by the target.
  static GradedMap from_function(BasisPtr source, BasisPtr target, int degree,
                                 const std::function<SparseVector(Index)>& f);
  static GradedMap identity(BasisPtr basis);

  const BasisPtr& source() const { return source_; }
  const BasisPtr& target() const { return target_; }
  int degree() const { return degree_; }

  const SparseVector& image(Index i) const { return images_[i]; }
  SparseVector apply(const SparseVector& v) const;

  /// Matrix from the degree-q part of the source to the degree-(q + degree)
  /// part of the target, in local indices.
  SparseMatrix block(int q) const;

  GradedMap operator+(const GradedMap& other) const;
  GradedMap operator-(const GradedMap& other) const;
  GradedMap operator-() const { return scaled(-1); }
  GradedMap scaled(const Integer& c) const;
  GradedMap reduced(const CoefficientRing& ring) const;

  bool is_zero() const;
  bool operator==(const GradedMap& other) const;

  /// Source elements of degree <= max_degree on which this map and `other` differ.
  std::optional<Index> first_difference(const GradedMap& other, int max_degree) const;

 private:
  BasisPtr source_, target_;
  int degree_ = 0;
  std::vector<SparseVector> images_;
};

/// g o f; throws std::invalid_argument if f's target is not g's source.
GradedMap compose(const GradedMap& g, const GradedMap& f);

}  // namespace dgtor
