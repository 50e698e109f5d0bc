#include "dgtor/graded/tensor.hpp"

#include "dgtor/core/errors.hpp"

namespace dgtor {
namespace {

std::string wrap(const std::string& name) {
  return name.find("⊗") == std::string::npos ? name : "(" + name + ")";
}

}  // namespace

TensorPtr TensorBasis::make(BasisPtr left, BasisPtr right) {
  if (left->cutoff() != right->cutoff()) {
    throw CutoffMismatch("tensor factors have cutoffs " + std::to_string(left->cutoff()) + " and " +
                         std::to_string(right->cutoff()));
  }
  const int cutoff = left->cutoff();
  std::vector<GradedBasis::Element> elements;
  std::vector<std::pair<Index, Index>> created;
  for (Index a = 0; a < left->size(); ++a) {
    int da = left->degree(a);
    for (Index b = 0; b < right->size(); ++b) {
      int d = da + right->degree(b);
      if (d > cutoff) break;  // right basis is sorted by degree
      elements.push_back({wrap(left->name(a)) + "⊗" + wrap(right->name(b)), d});
      created.emplace_back(a, b);
    }
  }
  std::vector<Index> position;
  auto t = std::make_shared<TensorBasis>();
  t->left_ = left;
  t->right_ = right;
  t->basis_ = GradedBasis::make(std::move(elements), cutoff, &position);
  t->factors_.resize(created.size());
  t->index_.reserve(created.size());
  for (Index k = 0; k < created.size(); ++k) {
    t->factors_[position[k]] = created[k];
    t->index_.emplace(static_cast<std::uint64_t>(created[k].first) * right->size() + created[k].second, position[k]);
  }
  return t;
}

std::optional<Index> TensorBasis::index(Index a, Index b) const {
  auto it = index_.find(static_cast<std::uint64_t>(a) * right_->size() + b);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SparseVector tensor_vectors(const TensorBasis& t, const SparseVector& x, const SparseVector& y) {
  VectorAccumulator acc;
  for (const auto& a : x) {
    for (const auto& b : y) {
      if (auto k = t.index(a.index, b.index)) acc.add(*k, a.coeff * b.coeff);
    }
  }
  return acc.take();
}

GradedMap tensor_maps(const GradedMap& f, const GradedMap& g, const TensorPtr& source, const TensorPtr& target) {
  if (!same_basis(f.source(), source->left()) || !same_basis(g.source(), source->right()) ||
      !same_basis(f.target(), target->left()) || !same_basis(g.target(), target->right())) {
    throw std::invalid_argument("tensor_maps: factor bases do not match");
  }
  const auto& sb = *source->left();
  return GradedMap::from_function(source->basis(), target->basis(), f.degree() + g.degree(), [&](Index i) {
    auto [a, b] = source->factors(i);
    SparseVector v = tensor_vectors(*target, f.image(a), g.image(b));
    return (static_cast<long long>(g.degree()) * sb.degree(a)) % 2 ? -v : v;
  });
}

}  // namespace dgtor
