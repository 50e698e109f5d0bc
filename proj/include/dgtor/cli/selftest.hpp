#pragma once

#include <ostream>

namespace dgtor {

/// Runs the invariant suites on every fixture at reduced degrees: d^2 = 0,
/// agreement with the Koszul route, ring axioms and text round trips.
/// Prints one PASS/FAIL line per check and returns the number of failures.
int selftest(std::ostream& out);

}  // namespace dgtor
