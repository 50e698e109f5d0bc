#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dgtor/cli/fixtures.hpp"
#include "dgtor/cli/report.hpp"
#include "dgtor/core/errors.hpp"
#include "dgtor/tor/koszul.hpp"

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace dgtor;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string fixture_path(const std::string& file) { return std::string(DGTOR_FIXTURE_DIR) + "/" + file; }

int run_cli(const std::string& args) {
  std::string cmd = std::string(DGTOR_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string temp_file(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("dgtor_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

std::vector<Diagnostic> diagnostics(const std::string& text) { return check_spec_text(text); }

const std::string kValid = R"(name: demo
coefficients: Z
max_degree: 6
base:
  c2: 4
right:
  t: 2
right_map:
  c2: "-6*t^2"
)";

}  // namespace

TEST_CASE("span documents round trip through the text format") {
  std::vector<SpanSpec> specs{loop_cp_infty(), free_loop_cp_infty(), su4_u1(), su4_u1_f2(), cyclic_group(6),
                              rp_infinity_f2()};
  for (std::uint64_t seed = 0; seed < 20; ++seed) specs.push_back(random_poly_span(seed));
  for (const auto& s : specs) {
    CAPTURE(s.name);
    std::string text = emit_spec(s);
    SpanSpec back = parse_spec(text);
    CHECK(back == s);
    CHECK(emit_spec(back) == text);
  }
}

TEST_CASE("the su4_u1 fixture file parses to the weights (-3, 1, 1, 1) span") {
  SpanSpec s = parse_spec_file(fixture_path("su4_u1.yaml"));
  CHECK(s == su4_u1());
  CHECK(s.ring == CoefficientRing::integers());
  CHECK(s.max_degree == 16);
  // e_k(-3, 1, 1, 1) for k = 2, 3, 4
  std::vector<Integer> w{-3, 1, 1, 1};
  Integer e2 = 0, e3 = 0, e4 = w[0] * w[1] * w[2] * w[3];
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      e2 += w[i] * w[j];
      for (int k = j + 1; k < 4; ++k) e3 += w[i] * w[j] * w[k];
    }
  Span span = build_span(s);
  CHECK(span.left->generator_count() == 0);
  const std::vector<std::pair<std::string, Integer>> expected{{"c2", e2}, {"c3", e3}, {"c4", e4}};
  for (int k = 0; k < 3; ++k) {
    const auto& [name, coeff] = expected[k];
    FreeGca::Exponents e{k + 2};
    SparseVector image = span.right_map.map.image(span.base->generator(name));
    CHECK(image == SparseVector::unit(*span.right->monomial(e), coeff));
  }
}

TEST_CASE("every shipped fixture file matches the registry") {
  for (const auto& [file, name] :
       std::vector<std::pair<std::string, std::string>>{{"loop_cp_infty.yaml", "loop_cp_infty"},
                                                        {"free_loop_cp_infty.yaml", "free_loop_cp_infty"},
                                                        {"su4_u1.yaml", "su4_u1"},
                                                        {"su4_u1_f2.yaml", "su4_u1_f2"},
                                                        {"cyclic_group_2.yaml", "cyclic_group:2"},
                                                        {"cyclic_group_3.yaml", "cyclic_group:3"},
                                                        {"cyclic_group_6.yaml", "cyclic_group:6"},
                                                        {"rp_infinity_f2.yaml", "rp_infinity_f2"},
                                                        {"random_poly_span_4.yaml", "random_poly_span:4"}}) {
    CAPTURE(file);
    CHECK(read_file(fixture_path(file)) == emit_spec(fixture(name)));
  }
}

TEST_CASE("a base generator of degree 1 is rejected") {
  std::string text = "coefficients: Z\nbase:\n  a: 1\n";
  CHECK_THROWS_AS(parse_spec(text), ValidationError);
  auto ds = diagnostics(text);
  REQUIRE(ds.size() == 1);
  CHECK(ds[0].kind == Diagnostic::Kind::Validation);
  CHECK(ds[0].line == 3);
}

TEST_CASE("a map image of the wrong degree is rejected") {
  std::string text = kValid;
  text.replace(text.find("-6*t^2"), 6, "t^3");
  CHECK_THROWS_AS(parse_spec(text), ValidationError);
  auto ds = diagnostics(text);
  REQUIRE(ds.size() == 1);
  CHECK(ds[0].line == 9);
  CHECK(ds[0].message.find("degree 6, expected 4") != std::string::npos);
  // a wrong term far above the cutoff is still seen
  text = kValid;
  text.replace(text.find("-6*t^2"), 6, "t^2 + t^40");
  CHECK_THROWS_AS(parse_spec(text), ValidationError);
}

TEST_CASE("validation covers odd base generators and unknown names") {
  CHECK_THROWS_AS(parse_spec("coefficients: Q\nbase:\n  a: 3\n"), ValidationError);
  CHECK_NOTHROW(parse_spec("coefficients: F2\nbase:\n  a: 3\n"));
  CHECK_THROWS_AS(parse_spec("coefficients: Q\nbase:\n  a: 2\nleft:\n  y: {degree: 3, polynomial: true}\n"),
                  ValidationError);
  CHECK_THROWS_AS(parse_spec(kValid + "left_map:\n  zz: \"0\"\n"), ValidationError);
  CHECK_THROWS_AS(parse_spec(kValid + "colour: blue\n"), ValidationError);
  CHECK_THROWS_AS(parse_spec("coefficients: F4\nbase:\n  a: 2\n"), ValidationError);
  CHECK_THROWS_AS(parse_spec("coefficients: Z\nbase:\n  a: 2\noutputs: [poincare, pictures]\n"), ValidationError);
  SpanSpec s = su4_u1();
  s.base.push_back({"c2", 4});
  CHECK_THROWS_AS(validate_spec(s), ValidationError);
}

TEST_CASE("parse errors carry line numbers") {
  auto ds = diagnostics("coefficients: Z\nbase: [a\n");
  REQUIRE(!ds.empty());
  CHECK(ds[0].kind == Diagnostic::Kind::Parse);
  CHECK(ds[0].line > 0);
  CHECK_THROWS_AS(parse_spec("coefficients: Z\nbase: [a\n"), ParseError);

  std::string text = kValid;
  text.replace(text.find("-6*t^2"), 6, "t +* 2");
  ds = diagnostics(text);
  REQUIRE(ds.size() == 1);
  CHECK(ds[0].kind == Diagnostic::Kind::Parse);
  CHECK(ds[0].line == 9);
  CHECK_THROWS_AS(parse_spec(text), ParseError);

  ds = diagnostics("coefficients: Z\nbase:\n  a: two\n");
  REQUIRE(ds.size() == 1);
  CHECK(ds[0].line == 3);
}

TEST_CASE("fixture registry") {
  std::vector<std::string> names;
  for (const auto& f : list_fixtures()) names.push_back(f.name);
  for (const char* n : {"loop_cp_infty", "free_loop_cp_infty", "su4_u1", "su4_u1_f2", "cyclic_group:<n>",
                        "rp_infinity_f2", "random_poly_span:<seed>"})
    CHECK(std::find(names.begin(), names.end(), n) != names.end());
  CHECK(fixture("cyclic_group(6)") == cyclic_group(6));
  CHECK(fixture("random_poly_span:9") == random_poly_span(9));
  CHECK_THROWS_AS(fixture("cyclic_group:x"), ValidationError);
  CHECK_THROWS_AS(fixture("torus"), ValidationError);
}

TEST_CASE("cyclic_group(2) is Z[u2] -> Z[v2] with u |-> 2v") {
  SpanSpec s = cyclic_group(2);
  CHECK(s.ring == CoefficientRing::integers());
  CHECK(s.base == std::vector<GeneratorSpec>{{"u", 2}});
  CHECK(s.left.empty());
  CHECK(s.right == std::vector<GeneratorSpec>{{"v", 2}});
  Span span = build_span(s);
  CHECK(span.right_map.map.image(span.base->generator("u")) == SparseVector::unit(span.right->generator("v"), 2));
}

TEST_CASE("rp_infinity_f2 is F2[i2, x3, x5, x9] acting on F2") {
  SpanSpec s = rp_infinity_f2();
  CHECK(s.ring == CoefficientRing::prime_field(2));
  std::vector<int> degrees;
  for (const auto& g : s.base) {
    degrees.push_back(g.degree);
    CHECK((g.polynomial || g.degree % 2 == 0));
  }
  CHECK(degrees == std::vector<int>{2, 3, 5, 9});
  CHECK(s.left.empty());
  CHECK(s.right.empty());
  Span span = build_span(s);
  // x3^2 survives in characteristic 2
  CHECK(span.base->monomial({0, 2, 0, 0}).has_value());
}

TEST_CASE("reports are deterministic") {
  SpanSpec free_loop = free_loop_cp_infty();
  free_loop.max_degree = 7;
  for (const SpanSpec& s : {su4_u1(), free_loop, random_poly_span(4)}) {
    ReportDocument a = run(s), b = run(s);
    CHECK(render_text(a) == render_text(b));
    CHECK(render_json(a).dump() == render_json(b).dump());
    CHECK(!a.seconds);
  }
  RunOptions timed;
  timed.timing = true;
  CHECK(run(loop_cp_infty(), timed).seconds.has_value());
}

TEST_CASE("loop fixture report") {
  SpanSpec s = loop_cp_infty();
  s.set_outputs({Output::Poincare, Output::Torsion, Output::Products, Output::OracleCheck, Output::Bigraded});
  ReportDocument r = run(s);
  std::vector<std::size_t> expected(13, 0);
  expected[0] = expected[1] = 1;
  CHECK(r.poincare() == expected);
  CHECK(r.products.empty());
  REQUIRE(r.ring);
  CHECK(r.ring->product(1, 0, 1, 0) == Coordinates{});
  REQUIRE(r.oracle);
  CHECK(r.oracle->agrees);
  CHECK(r.bidegrees.size() == 2);
  auto j = render_json(r);
  CHECK(j["poincare"][1] == 1);
  CHECK(j["oracle_check"]["agrees"] == true);
  CHECK(render_text(r).find("oracle_check  agrees") != std::string::npos);
}

TEST_CASE("su4_u1 report lists the torsion of the quotient") {
  ReportDocument r = run(su4_u1());
  auto torsion = [&](int n) { return r.degrees[n].torsion; };
  CHECK(torsion(4) == std::vector<Integer>{6});
  CHECK(torsion(6) == std::vector<Integer>{2});
  CHECK(torsion(9) == std::vector<Integer>{2});
  CHECK(torsion(11) == std::vector<Integer>{6});
  CHECK(r.degrees[16].rank == 0);
  auto j = render_json(r);
  CHECK(j["degrees"][4]["torsion"][0] == 6);
}

TEST_CASE("the resource guard counts cells before building them") {
  SpanSpec s = rp_infinity_f2();
  Span span = build_span(s);
  TsbPtr bar = two_sided_bar(span.left_map, span.right_map, s.max_degree + 1);
  CHECK(two_sided_bar_cells(span, s.max_degree + 1) == bar->basis()->size());
  RunOptions tight;
  tight.max_cells = 1000;
  CHECK_THROWS_AS(run(s, tight), ResourceLimit);
  SpanSpec small = loop_cp_infty();
  small.set_outputs({Output::OracleCheck});
  Span ls = build_span(small);
  auto k = koszul_oracle(ls.base, ls.left_map, ls.right_map, small.ring, small.max_degree);
  CHECK(koszul_cells(ls, small.max_degree + 1) >= k->basis()->size());
}

TEST_CASE("overrides are validated") {
  SpanSpec s = rp_infinity_f2();
  s.ring = CoefficientRing::rationals();
  CHECK_THROWS_AS(run(s), ValidationError);
}

TEST_CASE("command-line exit codes") {
  CHECK(run_cli("list-fixtures") == 0);
  CHECK(run_cli("fixture cyclic_group:3 --max-degree 6") == 0);
  CHECK(run_cli("compute " + fixture_path("loop_cp_infty.yaml") + " --oracle") == 0);
  CHECK(run_cli("fixture nonexistent") == 2);
  CHECK(run_cli("frobnicate") == 2);
  CHECK(run_cli("fixture loop_cp_infty --max-degree -3") == 2);
  CHECK(run_cli("fixture rp_infinity_f2 --ring Q") == 2);
  std::string bad = temp_file("bad.yaml", "coefficients: Z\nbase:\n  a: 1\n");
  CHECK(run_cli("compute " + bad) == 2);
  std::string broken = temp_file("broken.yaml", "coefficients: Z\nbase: [a\n");
  CHECK(run_cli("compute " + broken) == 2);
  CHECK(run_cli("compute /nonexistent/span.yaml") == 2);
  CHECK(run_cli("fixture su4_u1 --max-degree 12 --outputs poincare") == 0);
  int status = std::system(("DGTOR_MAX_CELLS=50 " + std::string(DGTOR_CLI_PATH) + " fixture su4_u1 >/dev/null 2>&1").c_str());
  CHECK(WEXITSTATUS(status) == 3);

  std::string json = (std::filesystem::temp_directory_path() / "dgtor_test_report.json").string();
  CHECK(run_cli("fixture free_loop_cp_infty --max-degree 6 --json " + json) == 0);
  auto doc = nlohmann::json::parse(read_file(json));
  CHECK(doc["poincare"] == nlohmann::json::array({1, 1, 1, 1, 1, 1, 1}));
}
