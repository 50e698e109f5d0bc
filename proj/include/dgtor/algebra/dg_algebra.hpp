#pragma once

#include "dgtor/algebra/check_report.hpp"
#include "dgtor/graded/complex.hpp"

#include <memory>
#include <string>

namespace dgtor {

class DgAlgebra;
class DgCoalgebra;
using AlgebraPtr = std::shared_ptr<const DgAlgebra>;
using CoalgebraPtr = std::shared_ptr<const DgCoalgebra>;

/// Differential graded algebra on a finite graded basis. When augmented,
/// basis element 0 is the unit and spans the complement of the
/// augmentation ideal; the remaining elements span the ideal. Products
/// landing above the cutoff are dropped.
class DgAlgebra {
 public:
  struct Parts {
    std::string name;
    BasisPtr basis;
    GradedMap differential;
    Multiplication product;
    SparseVector unit;
    bool augmented = true;
  };
  /// Checks shapes only; use check_dga_axioms for the axioms.
  static AlgebraPtr make(Parts parts);

  const std::string& name() const { return parts_.name; }
  const BasisPtr& basis() const { return parts_.basis; }
  int cutoff() const { return parts_.basis->cutoff(); }
  const GradedMap& differential() const { return parts_.differential; }
  ChainComplex complex() const { return ChainComplex{parts_.basis, parts_.differential}; }
  const Multiplication& product() const { return product_; }
  const SparseVector& unit() const { return parts_.unit; }
  bool augmented() const { return parts_.augmented; }
  bool has_zero_differential() const { return zero_differential_; }

  SparseVector multiply(Index a, Index b) const { return product_(a, b); }
  SparseVector multiply(const SparseVector& a, const SparseVector& b) const;
  /// Coefficient of the unit; requires an augmented algebra.
  Integer augmentation(const SparseVector& v) const;
  bool in_ideal(Index i) const { return !parts_.augmented || i != 0; }

 private:
  Parts parts_;
  Multiplication product_;
  bool zero_differential_ = false;
};

/// Coaugmented differential graded coalgebra: basis element 0 is the
/// coaugmentation. `coproduct` returns the full diagonal including the
/// terms 1 (x) c and c (x) 1. `witness[i]` is the least n such that the
/// n-factor reduced diagonal kills element i (1 for the coaugmentation).
class DgCoalgebra {
 public:
  struct Parts {
    std::string name;
    BasisPtr basis;
    GradedMap differential;
    Comultiplication coproduct;
    std::vector<int> witness;  // computed when empty
  };
  /// Throws NotCocomplete if the witness cannot be established.
  static CoalgebraPtr make(Parts parts);

  const std::string& name() const { return parts_.name; }
  const BasisPtr& basis() const { return parts_.basis; }
  int cutoff() const { return parts_.basis->cutoff(); }
  const GradedMap& differential() const { return parts_.differential; }
  ChainComplex complex() const { return ChainComplex{parts_.basis, parts_.differential}; }
  const Comultiplication& coproduct() const { return parts_.coproduct; }
  std::vector<TensorTerm> diagonal(Index i) const { return parts_.coproduct(i); }
  /// Terms of the diagonal with both factors in the coaugmentation coideal.
  std::vector<TensorTerm> reduced_diagonal(Index i) const;
  Integer counit(const SparseVector& v) const { return v.coefficient(0); }
  int witness(Index i) const { return parts_.witness[i]; }
  int max_witness() const;

 private:
  Parts parts_;
};

/// Computes cocompleteness witnesses by iterating the reduced diagonal.
std::vector<int> compute_witnesses(const BasisPtr& basis, const Comultiplication& coproduct, int limit);

struct AlgebraMorphism {
  AlgebraPtr source;
  AlgebraPtr target;
  GradedMap map;

  SparseVector apply(const SparseVector& v) const { return map.apply(v); }
  static AlgebraMorphism identity(const AlgebraPtr& a);
};
AlgebraMorphism compose(const AlgebraMorphism& g, const AlgebraMorphism& f);

struct CoalgebraMorphism {
  CoalgebraPtr source;
  CoalgebraPtr target;
  GradedMap map;

  SparseVector apply(const SparseVector& v) const { return map.apply(v); }
  static CoalgebraMorphism identity(const CoalgebraPtr& c);
};
CoalgebraMorphism compose(const CoalgebraMorphism& g, const CoalgebraMorphism& f);

/// Degree +1 map t : C -> A with e t = 0, t eta = 0 and d(t) = t cup t.
struct TwistingCochain {
  CoalgebraPtr source;
  AlgebraPtr target;
  GradedMap map;
};

/// Largest degree a check may inspect: `requested` if nonnegative,
/// otherwise `automatic`.
inline int check_limit(int requested, int automatic) { return requested >= 0 ? requested : automatic; }

CheckReport check_dga_axioms(const DgAlgebra& a, int max_degree = -1);
CheckReport check_dgc_axioms(const DgCoalgebra& c, int max_degree = -1);
CheckReport check_algebra_morphism(const AlgebraMorphism& f, int max_degree = -1);
CheckReport check_coalgebra_morphism(const CoalgebraMorphism& g, int max_degree = -1);
CheckReport check_twisting_cochain(const TwistingCochain& t, int max_degree = -1);

/// Strict graded commutativity: ab = (-1)^{|a||b|} ba over `ring`.
CheckReport check_commutative(const DgAlgebra& a, const CoefficientRing& ring, int max_degree = -1);

/// Cup product on maps C -> A.
GradedMap cup(const GradedMap& f, const GradedMap& g, const DgCoalgebra& c, const DgAlgebra& a);
/// eta_A e_C : C -> A.
GradedMap unit_counit(const DgCoalgebra& c, const DgAlgebra& a);

AlgebraPtr ground_algebra(int cutoff);
CoalgebraPtr ground_coalgebra(int cutoff);

struct TensorAlgebra {
  AlgebraPtr algebra;
  TensorPtr tensor;
  AlgebraPtr left;
  AlgebraPtr right;

  std::optional<Index> index(Index a, Index b) const { return tensor->index(a, b); }
  SparseVector pair(const SparseVector& a, const SparseVector& b) const { return tensor_vectors(*tensor, a, b); }
};

/// (a (x) b)(a' (x) b') = (-1)^{|b||a'|} aa' (x) bb'. Throws CutoffMismatch.
TensorAlgebra algebra_tensor(const AlgebraPtr& a, const AlgebraPtr& b);

/// chi(a (x) b) = (-1)^{|a||b|} b (x) a, from A (x) B to B (x) A.
AlgebraMorphism interchange(const TensorAlgebra& ab, const TensorAlgebra& ba);

/// f (x) g between tensor algebras.
AlgebraMorphism tensor_morphisms(const AlgebraMorphism& f, const AlgebraMorphism& g, const TensorAlgebra& source,
                                 const TensorAlgebra& target);

/// The multiplication A (x) A -> A as a chain map; an algebra map exactly
/// when A is commutative.
AlgebraMorphism multiplication_map(const TensorAlgebra& aa);

struct TensorCoalgebra {
  CoalgebraPtr coalgebra;
  TensorPtr tensor;
  CoalgebraPtr left;
  CoalgebraPtr right;
};

/// Delta(c (x) d) = sum (-1)^{|c''||d'|} (c' (x) d') (x) (c'' (x) d'').
TensorCoalgebra coalgebra_tensor(const CoalgebraPtr& c, const CoalgebraPtr& d);

}  // namespace dgtor
