#include "dgtor/cli/report.hpp"

#include "dgtor/core/errors.hpp"
#include "dgtor/tor/koszul.hpp"

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <limits>
#include <map>
#include <sstream>

namespace dgtor {

namespace {

std::vector<double> dims(const FreeGca& g, int size) {
  std::vector<double> d(size, 0);
  for (int q = 0; q < size && q <= g.cutoff(); ++q) d[q] = static_cast<double>(g.basis()->size_in_degree(q));
  return d;
}

// sum over i + j + k < size of x_i w_j y_k
std::size_t triple_count(const std::vector<double>& x, const std::vector<double>& w, const std::vector<double>& y) {
  int size = static_cast<int>(x.size());
  double total = 0;
  for (int i = 0; i < size; ++i)
    for (int j = 0; i + j < size; ++j)
      for (int k = 0; i + j + k < size; ++k) total += x[i] * w[j] * y[k];
  if (total >= static_cast<double>(std::numeric_limits<std::size_t>::max() / 2))
    return std::numeric_limits<std::size_t>::max() / 2;
  return static_cast<std::size_t>(total);
}

std::string join_torsion(const std::vector<Integer>& t) {
  std::string out;
  for (const auto& x : t) out += (out.empty() ? "Z/" : " + Z/") + to_string(x);
  return out;
}

std::map<int, ModuleSummary> by_length(const TorGroup& g) {
  std::map<int, ModuleSummary> out;
  for (const auto& piece : g.pieces()) {
    ModuleSummary s = piece.group.summary();
    if (!s.is_zero()) out[piece.p] = s;
  }
  return out;
}

bool same_summary(const ModuleSummary& a, const ModuleSummary& b) {
  return a.free_rank == b.free_rank && a.torsion == b.torsion;
}

OracleVerdict compare_with_oracle(const BigradedTor& bar, const BigradedTor& oracle) {
  std::ostringstream why;
  for (int n = 0; n <= bar.max_degree(); ++n) {
    const TorGroup& a = bar.degree(n);
    const TorGroup& b = oracle.degree(n);
    if (!same_summary(a.summary(), b.summary())) {
      why << "degree " << n << " differs: bar route has rank " << a.rank() << ", Koszul route " << b.rank();
      return {false, why.str()};
    }
    if (bar.bigraded() && oracle.bigraded()) {
      auto pa = by_length(a), pb = by_length(b);
      bool same = pa.size() == pb.size();
      for (const auto& [p, s] : pa) same = same && pb.count(p) && same_summary(s, pb.at(p));
      if (!same) {
        why << "degree " << n << " splits differently by homological degree";
        return {false, why.str()};
      }
    }
  }
  why << (bar.bigraded() && oracle.bigraded() ? "bigraded" : "total-degree") << " groups agree through degree "
      << bar.max_degree();
  return {true, why.str()};
}

bool is_zero(const Coordinates& c) {
  return std::all_of(c.begin(), c.end(), [](const Rational& x) { return x == 0; });
}

std::string generator_name(int n, std::size_t i) { return "g" + std::to_string(n) + "." + std::to_string(i); }

nlohmann::ordered_json number(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return to_string(x);
}

nlohmann::ordered_json number(const Rational& x) {
  if (denominator(x) == 1) return number(Integer(numerator(x)));
  return to_string(x);
}

nlohmann::ordered_json numbers(const std::vector<Integer>& xs) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& x : xs) out.push_back(number(x));
  return out;
}

}  // namespace

std::size_t RunOptions::default_max_cells() {
  if (const char* env = std::getenv("DGTOR_MAX_CELLS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 5'000'000;
}

std::vector<std::size_t> ReportDocument::poincare() const {
  std::vector<std::size_t> out;
  for (const auto& row : degrees) out.push_back(row.rank);
  return out;
}

std::size_t two_sided_bar_cells(const Span& span, int cutoff) {
  const int size = cutoff + 1;
  std::vector<double> a = dims(*span.base, size + 1);
  std::vector<double> w(size, 0);
  w[0] = 1;
  for (int n = 1; n < size; ++n)
    for (int d = 2; d <= n + 1; ++d) w[n] += a[d] * w[n - d + 1];
  return triple_count(dims(*span.left, size), w, dims(*span.right, size));
}

std::size_t koszul_cells(const Span& span, int cutoff) {
  const int size = cutoff + 1;
  std::vector<double> e(size, 0);
  e[0] = 1;
  for (const auto& g : span.base->presentation().generators) {
    int w = g.degree - 1;
    for (int n = size - 1; n >= w; --n) e[n] += e[n - w];
  }
  return triple_count(dims(*span.left, size), e, dims(*span.right, size));
}

ReportDocument run(const SpanSpec& spec, const RunOptions& options) {
  auto start = std::chrono::steady_clock::now();
  ReportDocument r;
  r.spec = spec;
  Span span = build_span(spec);
  const int cutoff = spec.max_degree + 1;
  r.cells = two_sided_bar_cells(span, cutoff);
  if (r.cells > options.max_cells)
    throw ResourceLimit("the two-sided bar through degree " + std::to_string(spec.max_degree) + " has " +
                        std::to_string(r.cells) + " cells, above the limit of " + std::to_string(options.max_cells) +
                        " (DGTOR_MAX_CELLS)");
  if (spec.wants(Output::OracleCheck)) {
    std::size_t k = koszul_cells(span, cutoff);
    if (k > options.max_cells)
      throw ResourceLimit("the Koszul complex through degree " + std::to_string(spec.max_degree) + " has " +
                          std::to_string(k) + " cells, above the limit of " + std::to_string(options.max_cells) +
                          " (DGTOR_MAX_CELLS)");
  }

  TsbPtr bar = two_sided_bar(span.left_map, span.right_map, cutoff);
  r.tor = tor_bigraded(bar, spec.ring, spec.max_degree);
  const BigradedTor& tor = *r.tor;
  r.bigraded = tor.bigraded();
  for (int n = 0; n <= tor.max_degree(); ++n) {
    const TorGroup& g = tor.degree(n);
    ModuleSummary s = g.summary();
    r.degrees.push_back({n, g.rank(), s.free_rank, s.torsion});
    if (r.bigraded) {
      for (const auto& [p, piece] : by_length(g)) r.bidegrees.push_back({p, n + p, piece.free_rank, piece.torsion});
    }
    for (std::size_t i = 0; i < g.rank(); ++i) {
      const SparseVector& cycle = g.generators()[i];
      std::string lead = cycle.is_zero() ? "" : tor.basis()->name(cycle.begin()->index);
      r.generators.push_back({n, i, g.orders()[i], g.generator_length()[i], lead});
    }
  }

  if (spec.wants(Output::Products)) {
    r.ring = classical_product(r.tor);
    for (const auto& [key, value] : r.ring->table) {
      auto [n1, i, n2, j] = key;
      if (n1 == 0 || n1 > n2 || (n1 == n2 && i > j) || is_zero(value)) continue;
      r.products.push_back({static_cast<int>(n1), i, static_cast<int>(n2), j, value});
    }
  }

  if (spec.wants(Output::OracleCheck)) {
    TorPtr k = koszul_oracle(span.base, span.left_map, span.right_map, spec.ring, spec.max_degree);
    r.oracle = compare_with_oracle(tor, *k);
  }

  if (options.timing)
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string render_text(const ReportDocument& r) {
  const SpanSpec& s = r.spec;
  std::ostringstream out;
  out << "span          " << (s.name.empty() ? "(unnamed)" : s.name) << "\n";
  if (!s.description.empty()) out << "description   " << s.description << "\n";
  out << "coefficients  " << s.ring.name() << "\n";
  out << "max_degree    " << s.max_degree << "\n";
  out << "cells         " << r.cells << "\n";

  if (s.wants(Output::Poincare)) {
    out << "\npoincare     ";
    for (auto n : r.poincare()) out << " " << n;
    out << "\n";
  }

  if (s.wants(Output::Torsion)) {
    out << "\ndegree  rank  free  torsion\n";
    for (const auto& row : r.degrees) {
      out << std::setw(6) << row.degree << std::setw(6) << row.rank << std::setw(6) << row.free_rank;
      if (!row.torsion.empty()) out << "  " << join_torsion(row.torsion);
      out << "\n";
    }
  }

  if (s.wants(Output::Bigraded)) {
    if (!r.bigraded) {
      out << "\nbigraded      not available (nonzero differentials)\n";
    } else {
      out << "\n     p     q  free  torsion\n";
      for (const auto& row : r.bidegrees) {
        out << std::setw(6) << row.p << std::setw(6) << row.q << std::setw(6) << row.free_rank;
        if (!row.torsion.empty()) out << "  " << join_torsion(row.torsion);
        out << "\n";
      }
    }
  }

  if (s.wants(Output::Products)) {
    out << "\ngenerators\n";
    for (const auto& g : r.generators) {
      out << "  " << std::left << std::setw(8) << generator_name(g.degree, g.index) << std::right << " order "
          << std::setw(3) << to_string(g.order);
      if (g.length >= 0) out << "  length " << g.length;
      out << "  " << g.leading_cell << "\n";
    }
    out << "\nproducts" << (r.products.empty() ? "      all products of positive-degree generators vanish" : "") << "\n";
    for (const auto& p : r.products) {
      out << "  " << generator_name(p.n1, p.i) << " * " << generator_name(p.n2, p.j) << " =";
      bool first = true;
      for (std::size_t k = 0; k < p.value.size(); ++k) {
        if (p.value[k] == 0) continue;
        out << (first ? " " : " + ") << to_string(p.value[k]) << " " << generator_name(p.n1 + p.n2, k);
        first = false;
      }
      out << "\n";
    }
  }

  if (r.oracle) out << "\noracle_check  " << (r.oracle->agrees ? "agrees" : "DISAGREES") << " (" << r.oracle->detail << ")\n";
  if (r.seconds) out << "\nseconds       " << std::fixed << std::setprecision(3) << *r.seconds << "\n";
  return out.str();
}

nlohmann::ordered_json render_json(const ReportDocument& r) {
  using json = nlohmann::ordered_json;
  const SpanSpec& s = r.spec;
  json j;
  json spec;
  spec["name"] = s.name;
  spec["description"] = s.description;
  spec["coefficients"] = s.ring.name();
  spec["max_degree"] = s.max_degree;
  auto gens = [](const std::vector<GeneratorSpec>& gs) {
    json out = json::array();
    for (const auto& g : gs) out.push_back({{"name", g.name}, {"degree", g.degree}, {"polynomial", g.polynomial}});
    return out;
  };
  auto images = [](const std::vector<std::pair<std::string, std::string>>& m) {
    json out = json::object();
    for (const auto& [k, v] : m) out[k] = v;
    return out;
  };
  spec["base"] = gens(s.base);
  spec["left"] = gens(s.left);
  spec["right"] = gens(s.right);
  spec["left_map"] = images(s.left_map);
  spec["right_map"] = images(s.right_map);
  json outs = json::array();
  for (Output o : s.outputs) outs.push_back(output_name(o));
  spec["outputs"] = outs;
  j["spec"] = spec;
  j["cells"] = r.cells;

  json degrees = json::array();
  for (const auto& row : r.degrees)
    degrees.push_back(
        {{"degree", row.degree}, {"rank", row.rank}, {"free", row.free_rank}, {"torsion", numbers(row.torsion)}});
  j["degrees"] = degrees;
  j["poincare"] = r.poincare();
  j["bigraded"] = r.bigraded;
  if (s.wants(Output::Bigraded) && r.bigraded) {
    json table = json::array();
    for (const auto& row : r.bidegrees)
      table.push_back(
          {{"p", row.p}, {"q", row.q}, {"free", row.free_rank}, {"torsion", numbers(row.torsion)}});
    j["bidegrees"] = table;
  }
  if (s.wants(Output::Products)) {
    json gens_out = json::array();
    for (const auto& g : r.generators)
      gens_out.push_back({{"name", generator_name(g.degree, g.index)},
                          {"degree", g.degree},
                          {"order", number(g.order)},
                          {"length", g.length},
                          {"leading_cell", g.leading_cell}});
    j["generators"] = gens_out;
    json prods = json::array();
    for (const auto& p : r.products) {
      json value = json::array();
      for (const auto& c : p.value) value.push_back(number(c));
      prods.push_back({{"left", generator_name(p.n1, p.i)}, {"right", generator_name(p.n2, p.j)}, {"value", value}});
    }
    j["products"] = prods;
  }
  if (r.oracle) j["oracle_check"] = {{"agrees", r.oracle->agrees}, {"detail", r.oracle->detail}};
  if (r.seconds) j["seconds"] = *r.seconds;
  return j;
}

}  // namespace dgtor
