#pragma once

#include "dgtor/algebra/dg_algebra.hpp"

#include <unordered_map>

namespace dgtor {

using Word = std::vector<Index>;

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = w.size();
    for (Index x : w) h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

/// Words with their basis indices; shared with the structure maps that
/// need to look words up.
struct WordTable {
  std::vector<Word> words;
  std::unordered_map<Word, Index, WordHash> index;

  std::optional<Index> find(const Word& w) const {
    auto it = index.find(w);
    if (it == index.end()) return std::nullopt;
    return it->second;
  }
};

class BarConstruction;
class CobarConstruction;
using BarPtr = std::shared_ptr<const BarConstruction>;
using CobarPtr = std::shared_ptr<const CobarConstruction>;

/// Tensor coalgebra on the desuspended augmentation ideal. The word
/// [a1|...|ap] has degree sum(|ai| - 1); its differential is
///   sum_i (-1)^{e(i-1)+1} [..|d ai|..] + sum_{i<p} (-1)^{e(i)} [..|ai a(i+1)|..]
/// with e(i) = sum_{j<=i} (|aj| - 1). The diagonal is deconcatenation.
/// Words are ordered by degree, then length, then letters.
class BarConstruction {
 public:
  /// Requires a connected augmented algebra with no elements in degree 1
  /// (NotOneConnected) and a.cutoff >= cutoff + 1 (CutoffTooSmall). A
  /// negative cutoff means a.cutoff - 1.
  static BarPtr make(const AlgebraPtr& a, int cutoff = -1);

  const AlgebraPtr& base() const { return base_; }
  const CoalgebraPtr& coalgebra() const { return coalgebra_; }
  const BasisPtr& basis() const { return coalgebra_->basis(); }
  int cutoff() const { return coalgebra_->cutoff(); }
  const Word& word(Index i) const { return table_->words[i]; }
  std::optional<Index> find(const Word& w) const { return table_->find(w); }
  /// Multilinear word in the given letters; components on the unit and
  /// words above the cutoff are dropped.
  SparseVector word_vector(const std::vector<SparseVector>& letters) const;
  /// The tautological twisting cochain [a] -> a.
  const TwistingCochain& twisting() const { return twisting_; }

 private:
  AlgebraPtr base_;
  CoalgebraPtr coalgebra_;
  std::shared_ptr<WordTable> table_;
  TwistingCochain twisting_;
};

/// Tensor algebra on the suspended coaugmentation coideal. The word
/// <c1;...;cl> has degree sum(|ci| + 1); on generators
///   d<c> = -<dc> + sum (-1)^{|c'|} <c';c''>
/// over the reduced diagonal, extended as a derivation. The product is
/// concatenation.
class CobarConstruction {
 public:
  /// Requires the coideal in degrees >= 1 and c.cutoff >= cutoff - 1
  /// (CutoffTooSmall). A negative cutoff means c.cutoff + 1.
  static CobarPtr make(const CoalgebraPtr& c, int cutoff = -1);

  const CoalgebraPtr& base() const { return base_; }
  const AlgebraPtr& algebra() const { return algebra_; }
  const BasisPtr& basis() const { return algebra_->basis(); }
  int cutoff() const { return algebra_->cutoff(); }
  const Word& word(Index i) const { return table_->words[i]; }
  std::optional<Index> find(const Word& w) const { return table_->find(w); }
  SparseVector word_vector(const std::vector<SparseVector>& letters) const;
  /// The tautological twisting cochain c -> <c>.
  const TwistingCochain& twisting() const { return twisting_; }

 private:
  CoalgebraPtr base_;
  AlgebraPtr algebra_;
  std::shared_ptr<WordTable> table_;
  TwistingCochain twisting_;
};

inline BarPtr bar(const AlgebraPtr& a, int cutoff = -1) { return BarConstruction::make(a, cutoff); }
inline CobarPtr cobar(const CoalgebraPtr& c, int cutoff = -1) { return CobarConstruction::make(c, cutoff); }

/// Bf[a1|...|ap] = [f a1|...|f ap].
CoalgebraMorphism bar_of_morphism(const AlgebraMorphism& f, const BarPtr& source, const BarPtr& target);
/// Omega g<c1;...;cl> = <g c1;...;g cl>.
AlgebraMorphism cobar_of_morphism(const CoalgebraMorphism& g, const CobarPtr& source, const CobarPtr& target);

/// The DGC map C -> BA through which t factors:
/// g(c) = e(c)[] + sum_n [t(c_1)|...|t(c_n)] over the n-fold reduced diagonal.
/// Throws InvalidTwistingCochain.
CoalgebraMorphism lift_to_bar(const TwistingCochain& t, const BarPtr& target);
/// The DGA map Omega C -> A through which t factors: <c1;...;cl> -> t(c1)...t(cl).
/// Throws InvalidTwistingCochain.
AlgebraMorphism extend_from_cobar(const TwistingCochain& t, const CobarPtr& source);

struct AdjunctionUnit {
  CobarPtr cobar;  // Omega C
  BarPtr bar;      // B Omega C
  CoalgebraMorphism map;
};
struct AdjunctionCounit {
  BarPtr bar;      // B A
  CobarPtr cobar;  // Omega B A
  AlgebraMorphism map;
};
/// C -> B Omega C, lifting the tautological cochain of Omega C.
AdjunctionUnit adjunction_unit(const CoalgebraPtr& c);
/// Omega B A -> A, extending the tautological cochain of B A.
AdjunctionCounit adjunction_counit(const AlgebraPtr& a);

/// Shuffle map BA1 (x) BA2 -> B(A1 (x) A2).
struct Nabla {
  TensorCoalgebra source;
  TensorAlgebra algebra;
  BarPtr target;
  CoalgebraMorphism map;
};
Nabla shuffle_nabla(const BarPtr& b1, const BarPtr& b2);

/// Algebra map Omega(C1 (x) C2) -> Omega C1 (x) Omega C2 sending
/// <c (x) d> to <c> e(d) + e(c) <d>.
struct Gamma {
  TensorCoalgebra coalgebra;
  CobarPtr source;
  TensorAlgebra target;
  AlgebraMorphism map;
};
Gamma shuffle_gamma(const CobarPtr& o1, const CobarPtr& o2);

/// Phi = B(mu) : B(A (x) A) -> BA for a strictly commutative A.
struct ShcStructure {
  TensorAlgebra square;
  BarPtr source;
  BarPtr target;
  CoalgebraMorphism phi;
};
/// Throws NotCommutative unless A is graded commutative over `ring`.
ShcStructure shc_structure_cdga(const AlgebraPtr& a, const CoefficientRing& ring, int cutoff = -1);

}  // namespace dgtor
