#include "dgtor/cli/fixtures.hpp"

#include "dgtor/core/errors.hpp"

#include <algorithm>
#include <random>

namespace dgtor {

namespace {

SpanSpec make(std::string name, std::string description, CoefficientRing ring, int max_degree) {
  SpanSpec s;
  s.name = std::move(name);
  s.description = std::move(description);
  s.ring = ring;
  s.max_degree = max_degree;
  return s;
}

SpanSpec su4(CoefficientRing ring, std::string name) {
  SpanSpec s = make(std::move(name), "SU(4)/H for H = U(1) with weights (-3, 1, 1, 1)", ring, 16);
  s.base = {{"c2", 4}, {"c3", 6}, {"c4", 8}};
  s.right = {{"t", 2}};
  s.right_map = {{"c2", "-6*t^2"}, {"c3", "-8*t^3"}, {"c4", "-3*t^4"}};
  s.set_outputs({Output::Poincare, Output::Torsion, Output::Products});
  return s;
}

// Integer after "name:" or inside "name(...)".
std::optional<long long> parameter(const std::string& text, const std::string& family) {
  std::string rest;
  if (text.rfind(family + ":", 0) == 0) {
    rest = text.substr(family.size() + 1);
  } else if (text.rfind(family + "(", 0) == 0 && text.back() == ')') {
    rest = text.substr(family.size() + 1, text.size() - family.size() - 2);
  } else {
    return std::nullopt;
  }
  if (rest.empty() || rest.size() > 18 || rest.find_first_not_of("0123456789") != std::string::npos)
    throw ValidationError("fixture '" + text + "' needs a nonnegative integer parameter");
  return std::stoll(rest);
}

}  // namespace

std::vector<FixtureInfo> list_fixtures() {
  return {{"loop_cp_infty", "Tor over Q[x2] of (Q, Q): cohomology of the loop space of CP^infinity"},
          {"free_loop_cp_infty", "Tor over Q[x] (x) Q[x] of (Q[x], Q[x]) along the diagonal: free loops on CP^infinity"},
          {"su4_u1", "SU(4)/H over Z with H = U(1) of weights (-3, 1, 1, 1)"},
          {"su4_u1_f2", "SU(4)/H over F2 with H = U(1) of weights (-3, 1, 1, 1)"},
          {"cyclic_group:<n>", "Tor over Z[u2] of (Z, Z[v2]) with u |-> n v: cohomology of BZ/n"},
          {"rp_infinity_f2", "Tor over F2[i2, x3, x5, x9] of (F2, F2): additively F2[i1]"},
          {"random_poly_span:<seed>", "seeded random span over F2, F3 or F5, checked against the Koszul route"}};
}

SpanSpec fixture(const std::string& name) {
  if (name == "loop_cp_infty") return loop_cp_infty();
  if (name == "free_loop_cp_infty") return free_loop_cp_infty();
  if (name == "su4_u1") return su4_u1();
  if (name == "su4_u1_f2") return su4_u1_f2();
  if (name == "rp_infinity_f2") return rp_infinity_f2();
  if (auto n = parameter(name, "cyclic_group")) {
    if (*n < 1 || *n > 1'000'000'000) throw ValidationError("cyclic_group needs an order between 1 and 10^9");
    return cyclic_group(static_cast<int>(*n));
  }
  if (auto seed = parameter(name, "random_poly_span")) return random_poly_span(static_cast<std::uint64_t>(*seed));
  throw ValidationError("unknown fixture '" + name + "' (see list-fixtures)");
}

SpanSpec loop_cp_infty() {
  SpanSpec s = make("loop_cp_infty", "based loops on CP^infinity", CoefficientRing::rationals(), 12);
  s.base = {{"x", 2}};
  s.set_outputs({Output::Poincare, Output::Torsion, Output::Products});
  return s;
}

SpanSpec free_loop_cp_infty() {
  SpanSpec s = make("free_loop_cp_infty", "free loops on CP^infinity", CoefficientRing::rationals(), 12);
  s.base = {{"a", 2}, {"b", 2}};
  s.left = {{"x", 2}};
  s.right = {{"x", 2}};
  s.left_map = {{"a", "x"}, {"b", "x"}};
  s.right_map = {{"a", "x"}, {"b", "x"}};
  s.set_outputs({Output::Poincare, Output::Bigraded, Output::Torsion, Output::Products});
  return s;
}

SpanSpec su4_u1() { return su4(CoefficientRing::integers(), "su4_u1"); }

SpanSpec su4_u1_f2() { return su4(CoefficientRing::prime_field(2), "su4_u1_f2"); }

SpanSpec cyclic_group(int n) {
  SpanSpec s = make("cyclic_group:" + std::to_string(n), "cohomology of BZ/" + std::to_string(n),
                    CoefficientRing::integers(), 10);
  s.base = {{"u", 2}};
  s.right = {{"v", 2}};
  s.right_map = {{"u", std::to_string(n) + "*v"}};
  return s;
}

SpanSpec rp_infinity_f2() {
  SpanSpec s = make("rp_infinity_f2", "F2[i2, x3, x5, x9] acting trivially on F2", CoefficientRing::prime_field(2), 15);
  s.base = {{"i", 2}, {"x3", 3, true}, {"x5", 5, true}, {"x9", 9, true}};
  s.set_outputs({Output::Poincare, Output::Bigraded, Output::Products});
  return s;
}

SpanSpec random_poly_span(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const int primes[] = {2, 3, 5};
  const int p = primes[pick(0, 2)];
  SpanSpec s = make("random_poly_span:" + std::to_string(seed), "random span over F" + std::to_string(p),
                    CoefficientRing::prime_field(p), 8);
  for (int k = pick(1, 3), i = 0; i < k; ++i) s.base.push_back({"a" + std::to_string(i), 2 * pick(1, 2)});
  for (int k = pick(0, 2), i = 0; i < k; ++i) s.left.push_back({"x" + std::to_string(i), pick(2, 4)});
  for (int k = pick(0, 2), i = 0; i < k; ++i) s.right.push_back({"y" + std::to_string(i), pick(2, 4)});
  auto images = [&](const std::vector<GeneratorSpec>& target) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& g : s.base) {
      int cutoff = g.degree;
      for (const auto& x : target) cutoff = std::max(cutoff, x.degree);
      FreeGcaPtr t = build_free_gca({target, s.ring, cutoff, ""});
      const GradedBasis& b = *t->basis();
      std::string text;
      for (Index m = b.begin_of(g.degree); m < b.end_of(g.degree); ++m) {
        int c = pick(0, p - 1);
        if (c == 0) continue;
        text += (text.empty() ? "" : " + ") + std::to_string(c) + "*" + b.name(m);
      }
      if (!text.empty()) out.emplace_back(g.name, text);
    }
    return out;
  };
  s.left_map = images(s.left);
  s.right_map = images(s.right);
  s.set_outputs({Output::Poincare, Output::Bigraded, Output::OracleCheck});
  return s;
}

}  // namespace dgtor
