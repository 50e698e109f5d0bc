#pragma once

#include "dgtor/linalg/sparse_matrix.hpp"

#include <optional>
#include <vector>

namespace dgtor {

/// left * m * right = diag(divisors, 0, ...), with divisors[i] | divisors[i+1]
/// and both transforms unimodular.
struct SmithForm {
  IntegerMatrix left;
  IntegerMatrix right;
  std::vector<Integer> divisors;
};

SmithForm smith_normal_form(const SparseMatrix& m);

/// Smith form together with the inverse transforms.
struct SmithDecomposition {
  IntegerMatrix left, left_inverse;
  IntegerMatrix right, right_inverse;
  std::vector<Integer> divisors;
};

SmithDecomposition smith_decomposition(const IntegerMatrix& m);

/// Some integer solution of a x = b, or nullopt when none exists.
std::optional<std::vector<Integer>> solve_integer(const IntegerMatrix& a, const std::vector<Integer>& b);

}  // namespace dgtor
