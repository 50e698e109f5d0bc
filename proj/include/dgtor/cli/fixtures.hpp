#pragma once

#include "dgtor/cli/span_spec.hpp"

#include <cstdint>

namespace dgtor {

struct FixtureInfo {
  std::string name;  // "cyclic_group:<n>" for parameterized families
  std::string description;
};

/// The shipped fixtures in registry order.
std::vector<FixtureInfo> list_fixtures();

/// Looks up a fixture; parameterized families are written name:parameter,
/// e.g. cyclic_group:6 or random_poly_span:17. Throws ValidationError for
/// unknown names.
SpanSpec fixture(const std::string& name);

/// Q <- Q[x2] -> Q.
SpanSpec loop_cp_infty();
/// Q[x] <- Q[a] (x) Q[b] -> Q[x] with a, b |-> x on both sides.
SpanSpec free_loop_cp_infty();
/// Z <- Z[c2, c3, c4] -> Z[t2] sending c_k to the elementary symmetric
/// functions of the weights (-3, 1, 1, 1) in t.
SpanSpec su4_u1();
SpanSpec su4_u1_f2();
/// Z <- Z[u2] -> Z[v2], u |-> n v.
SpanSpec cyclic_group(int n);
/// F2 <- F2[i2, x3, x5, x9] -> F2.
SpanSpec rp_infinity_f2();
/// A seeded span of free algebras over F2, F3 or F5 with at most three
/// base generators of degree 2 or 4, checked against the Koszul route.
SpanSpec random_poly_span(std::uint64_t seed);

}  // namespace dgtor
