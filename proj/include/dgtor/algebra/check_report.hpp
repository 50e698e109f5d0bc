#pragma once

#include <string>
#include <vector>

namespace dgtor {

/// Outcome of an axiom check: the failing axioms, each with the first
/// basis element (or tuple) that violates it.
struct CheckReport {
  struct Failure {
    std::string axiom;
    std::string witness;
  };
  std::vector<Failure> failures;

  bool ok() const { return failures.empty(); }
  bool failed(const std::string& axiom) const;
  /// Records only the first witness per axiom.
  void fail(const std::string& axiom, const std::string& witness);
  void merge(const CheckReport& other);
  std::string describe() const;
};

}  // namespace dgtor
