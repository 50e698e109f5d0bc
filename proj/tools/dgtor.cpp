#include "dgtor/cli/fixtures.hpp"
#include "dgtor/cli/report.hpp"
#include "dgtor/cli/selftest.hpp"
#include "dgtor/core/errors.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace dgtor;

namespace {

struct Overrides {
  int max_degree = -1;
  std::string ring;
  bool oracle = false;
  std::vector<std::string> outputs;
  std::string json_path;
  bool timing = false;
};

void add_overrides(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--max-degree", o.max_degree, "Compute Tor through this total degree")->check(CLI::NonNegativeNumber);
  cmd->add_option("--ring", o.ring, "Coefficients: Z, Q or F<p>");
  cmd->add_flag("--oracle", o.oracle, "Compare with the Koszul route");
  cmd->add_option("--outputs", o.outputs, "poincare, bigraded, torsion, products, oracle_check")->delimiter(',');
  cmd->add_option("--json", o.json_path, "Also write the report as JSON to this path");
  cmd->add_flag("--timing", o.timing, "Include wall-clock seconds in the report");
}

int compute(SpanSpec spec, const Overrides& o) {
  if (o.max_degree >= 0) spec.max_degree = o.max_degree;
  if (!o.ring.empty()) spec.ring = CoefficientRing::parse(o.ring);
  if (!o.outputs.empty()) {
    std::vector<Output> outs;
    for (const auto& name : o.outputs) {
      bool found = false;
      for (Output x : {Output::Poincare, Output::Bigraded, Output::Torsion, Output::Products, Output::OracleCheck}) {
        if (output_name(x) == name) {
          outs.push_back(x);
          found = true;
        }
      }
      if (!found) throw ValidationError("unknown output '" + name + "'");
    }
    spec.set_outputs(outs);
  }
  if (o.oracle) {
    std::vector<Output> outs = spec.outputs;
    outs.push_back(Output::OracleCheck);
    spec.set_outputs(outs);
  }
  validate_spec(spec);
  RunOptions options;
  options.timing = o.timing;
  ReportDocument r = run(spec, options);
  std::cout << render_text(r);
  if (!o.json_path.empty()) {
    std::ofstream out(o.json_path);
    if (!out) throw ValidationError("cannot write '" + o.json_path + "'");
    out << render_json(r).dump(2) << "\n";
  }
  return r.oracle && !r.oracle->agrees ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tor of spans of free graded-commutative algebras"};
  app.require_subcommand(1);

  Overrides compute_opts, fixture_opts;
  std::string path, name;
  bool emit = false;

  CLI::App* compute_cmd = app.add_subcommand("compute", "Compute Tor for a span document");
  compute_cmd->add_option("file", path, "Span document")->required();
  add_overrides(compute_cmd, compute_opts);

  CLI::App* fixture_cmd = app.add_subcommand("fixture", "Compute Tor for a shipped fixture");
  fixture_cmd->add_option("name", name, "Fixture name, see list-fixtures")->required();
  fixture_cmd->add_flag("--emit", emit, "Print the fixture as a span document instead");
  add_overrides(fixture_cmd, fixture_opts);

  CLI::App* list_cmd = app.add_subcommand("list-fixtures", "List the shipped fixtures");
  CLI::App* selftest_cmd = app.add_subcommand("selftest", "Run the invariant suites on every fixture");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*compute_cmd) return compute(parse_spec_file(path), compute_opts);
    if (*fixture_cmd) {
      SpanSpec spec = fixture(name);
      if (emit) {
        std::cout << emit_spec(spec);
        return 0;
      }
      return compute(spec, fixture_opts);
    }
    if (*list_cmd) {
      for (const auto& f : list_fixtures()) std::cout << f.name << "  " << f.description << "\n";
      return 0;
    }
    if (*selftest_cmd) return selftest(std::cout) == 0 ? 0 : 1;
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const ResourceLimit& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 0;
}
