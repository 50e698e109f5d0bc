#include "dgtor/graded/basis.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dgtor {

BasisPtr GradedBasis::make(std::vector<Element> elements, int cutoff, std::vector<Index>* position) {
  if (cutoff < 0) throw std::invalid_argument("negative cutoff");
  std::vector<Index> order(elements.size());
  std::iota(order.begin(), order.end(), Index{0});
  for (const auto& e : elements) {
    if (e.degree < 0 || e.degree > cutoff) {
      throw std::invalid_argument("element '" + e.name + "' of degree " + std::to_string(e.degree) +
                                  " outside [0, " + std::to_string(cutoff) + "]");
    }
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](Index a, Index b) { return elements[a].degree < elements[b].degree; });
  auto basis = std::make_shared<GradedBasis>();
  basis->cutoff_ = cutoff;
  basis->names_.reserve(elements.size());
  basis->degrees_.reserve(elements.size());
  basis->by_name_.reserve(elements.size());
  if (position) position->assign(elements.size(), 0);
  for (Index k = 0; k < order.size(); ++k) {
    auto& e = elements[order[k]];
    if (!basis->by_name_.emplace(e.name, k).second) throw std::invalid_argument("duplicate basis name '" + e.name + "'");
    basis->degrees_.push_back(e.degree);
    basis->names_.push_back(std::move(e.name));
    if (position) (*position)[order[k]] = k;
  }
  basis->offsets_.assign(cutoff + 2, 0);
  for (int d : basis->degrees_) ++basis->offsets_[d + 1];
  for (int q = 1; q <= cutoff + 1; ++q) basis->offsets_[q] += basis->offsets_[q - 1];
  return basis;
}

Index GradedBasis::begin_of(int q) const {
  if (q < 0) return 0;
  if (q > cutoff_) return size();
  return offsets_[q];
}

Index GradedBasis::end_of(int q) const {
  if (q < 0) return 0;
  if (q > cutoff_) return size();
  return offsets_[q + 1];
}

std::optional<Index> GradedBasis::find(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

bool GradedBasis::same_as(const GradedBasis& other) const {
  return cutoff_ == other.cutoff_ && degrees_ == other.degrees_ && names_ == other.names_;
}

bool same_basis(const BasisPtr& a, const BasisPtr& b) { return a == b || (a && b && a->same_as(*b)); }

}  // namespace dgtor
