#pragma once

#include "dgtor/algebra/dg_algebra.hpp"

#include <map>

namespace dgtor {

struct GeneratorSpec {
  std::string name;
  int degree = 0;
  /// Odd generators are exterior unless this is set; only allowed in characteristic 2.
  bool polynomial = false;

  bool operator==(const GeneratorSpec&) const = default;
};

struct FreeGcaPresentation {
  std::vector<GeneratorSpec> generators;
  CoefficientRing ring = CoefficientRing::integers();
  int cutoff = 0;
  std::string name;
};

class FreeGca;
using FreeGcaPtr = std::shared_ptr<const FreeGca>;

/// Free graded-commutative algebra with zero differential, on the monomial
/// basis up to the cutoff. Monomials are written t^2*y in generator order.
class FreeGca {
 public:
  using Exponents = std::vector<int>;

  const FreeGcaPresentation& presentation() const { return presentation_; }
  const AlgebraPtr& algebra() const { return algebra_; }
  const BasisPtr& basis() const { return algebra_->basis(); }
  const CoefficientRing& ring() const { return presentation_.ring; }
  int cutoff() const { return presentation_.cutoff; }
  std::size_t generator_count() const { return presentation_.generators.size(); }

  const Exponents& exponents(Index i) const { return exponents_[i]; }
  std::optional<Index> monomial(const Exponents& e) const;
  /// Basis index of a generator; throws ValidationError for unknown names.
  Index generator(const std::string& name) const;
  std::optional<std::size_t> generator_position(const std::string& name) const;

  static FreeGcaPtr build(FreeGcaPresentation p);

 private:
  FreeGcaPresentation presentation_;
  AlgebraPtr algebra_;
  std::vector<Exponents> exponents_;
  std::map<Exponents, Index> index_;
  std::vector<Index> generator_index_;
};

/// Throws ValidationError for degrees below 1, duplicate names or odd
/// polynomial generators outside characteristic 2, and CutoffTooSmall if
/// a generator lies above the cutoff.
inline FreeGcaPtr build_free_gca(FreeGcaPresentation p) { return FreeGca::build(std::move(p)); }

/// Parses integer combinations of monomials such as "-6*t^2 + 3 x*y".
/// Throws ParseError on syntax errors or unknown generators.
SparseVector parse_polynomial(const std::string& text, const FreeGca& target);

/// Multiplicative extension of generator images. Generators without an
/// image go to zero. Throws DegreeMismatch when an image is not homogeneous
/// of the generator's degree and NotAChainMap when the extension fails to
/// be a DGA map.
AlgebraMorphism morphism_from_generator_images(const std::vector<SparseVector>& images, const FreeGcaPtr& source,
                                               const FreeGcaPtr& target);
AlgebraMorphism evaluate_morphism(const std::map<std::string, std::string>& images, const FreeGcaPtr& source,
                                  const FreeGcaPtr& target);

}  // namespace dgtor
