#pragma once

#include "dgtor/linalg/integer.hpp"

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace dgtor {

class GradedBasis;
using BasisPtr = std::shared_ptr<const GradedBasis>;

/// Named basis of a graded free module, ordered by (degree, creation order),
/// holding every element of degree at most `cutoff`.
class GradedBasis {
 public:
  struct Element {
    std::string name;
    int degree;
  };

  /// Sorts stably by degree. If `position` is given it receives, for each
  /// input element, its index in the resulting basis. Throws
  /// std::invalid_argument on duplicate names or degrees outside [0, cutoff].
  static BasisPtr make(std::vector<Element> elements, int cutoff, std::vector<Index>* position = nullptr);

  std::size_t size() const { return degrees_.size(); }
  int degree(Index i) const { return degrees_[i]; }
  const std::string& name(Index i) const { return names_[i]; }
  int cutoff() const { return cutoff_; }

  /// Half-open index range of the elements of degree q (empty outside [0, cutoff]).
  Index begin_of(int q) const;
  Index end_of(int q) const;
  std::size_t size_in_degree(int q) const { return end_of(q) - begin_of(q); }

  std::optional<Index> find(const std::string& name) const;

  /// Same degrees and names, element by element.
  bool same_as(const GradedBasis& other) const;

 private:
  std::vector<std::string> names_;
  std::vector<int> degrees_;
  std::vector<Index> offsets_;  // offsets_[q] = first index of degree q, size cutoff + 2
  std::unordered_map<std::string, Index> by_name_;
  int cutoff_ = 0;
};

bool same_basis(const BasisPtr& a, const BasisPtr& b);

}  // namespace dgtor
