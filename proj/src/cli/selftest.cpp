#include "dgtor/cli/selftest.hpp"

#include "dgtor/cli/fixtures.hpp"
#include "dgtor/cli/report.hpp"
#include "dgtor/core/errors.hpp"

#include <chrono>
#include <functional>
#include <iomanip>

namespace dgtor {

namespace {

struct Suite {
  std::ostream& out;
  int failures = 0;

  void check(const std::string& name, const std::function<std::string()>& body) {
    auto start = std::chrono::steady_clock::now();
    std::string problem;
    try {
      problem = body();
    } catch (const std::exception& e) {
      problem = e.what();
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out << (problem.empty() ? "PASS " : "FAIL ") << name << " (" << std::fixed << std::setprecision(2) << s << " s)";
    if (!problem.empty()) out << ": " << problem;
    out << "\n";
    if (!problem.empty()) ++failures;
  }
};

std::vector<SpanSpec> specs() {
  std::vector<SpanSpec> out{loop_cp_infty(), free_loop_cp_infty(), su4_u1(), su4_u1_f2(), rp_infinity_f2()};
  for (int n : {2, 3, 6}) out.push_back(cyclic_group(n));
  for (int seed = 0; seed < 8; ++seed) out.push_back(random_poly_span(seed));
  for (auto& s : out) s.max_degree = std::min(s.max_degree, 10);
  return out;
}

}  // namespace

int selftest(std::ostream& out) {
  Suite suite{out};
  for (const SpanSpec& spec : specs()) {
    suite.check(spec.name + " round trip", [&]() -> std::string {
      return parse_spec(emit_spec(spec)) == spec ? "" : "parse(emit(spec)) differs from spec";
    });
    suite.check(spec.name + " d^2 = 0", [&]() -> std::string {
      Span span = build_span(spec);
      TsbPtr bar = two_sided_bar(span.left_map, span.right_map, spec.max_degree + 1);
      return bar->complex().squares_to_zero() ? "" : "the two-sided bar differential does not square to zero";
    });
    SpanSpec full = spec;
    full.set_outputs({Output::Poincare, Output::Torsion, Output::Products, Output::OracleCheck});
    suite.check(spec.name + " Koszul route", [&]() -> std::string {
      ReportDocument r = run(full);
      return r.oracle->agrees ? "" : r.oracle->detail;
    });
    suite.check(spec.name + " ring axioms", [&]() -> std::string {
      SpanSpec products = spec;
      products.set_outputs({Output::Products});
      CheckReport rep = check_ring_axioms(*run(products).ring);
      return rep.ok() ? "" : rep.describe();
    });
    suite.check(spec.name + " deterministic report", [&]() -> std::string {
      return render_text(run(full)) == render_text(run(full)) ? "" : "two runs rendered differently";
    });
  }
  out << (suite.failures == 0 ? "selftest passed\n" : "selftest failed: " + std::to_string(suite.failures) + " checks\n");
  return suite.failures;
}

}  // namespace dgtor
