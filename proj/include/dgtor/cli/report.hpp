#pragma once

#include "dgtor/cli/span_spec.hpp"
#include "dgtor/tor/product.hpp"

#include <json.hpp>

#include <optional>

namespace dgtor {

struct RunOptions {
  /// Largest number of chain-level cells a run may build (DGTOR_MAX_CELLS).
  std::size_t max_cells = default_max_cells();
  /// Adds wall-clock seconds to the report, which then differs between runs.
  bool timing = false;

  static std::size_t default_max_cells();
};

struct DegreeRow {
  int degree = 0;
  std::size_t rank = 0;  // number of cyclic summands
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;
};

struct BidegreeRow {
  int p = 0;
  int q = 0;  // total degree q - p
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;
};

struct GeneratorRow {
  int degree = 0;
  std::size_t index = 0;
  Integer order;  // 0 for free classes
  int length = -1;
  std::string leading_cell;
};

/// g(n1, i) * g(n2, j) = sum value_k g(n1 + n2, k), for (n1, i) <= (n2, j).
struct ProductRow {
  int n1 = 0;
  std::size_t i = 0;
  int n2 = 0;
  std::size_t j = 0;
  Coordinates value;
};

struct OracleVerdict {
  bool agrees = false;
  std::string detail;
};

struct ReportDocument {
  SpanSpec spec;
  std::size_t cells = 0;
  std::vector<DegreeRow> degrees;
  bool bigraded = false;
  std::vector<BidegreeRow> bidegrees;  // nonzero entries only
  std::vector<GeneratorRow> generators;
  std::vector<ProductRow> products;  // nonzero entries only
  std::optional<OracleVerdict> oracle;
  std::optional<double> seconds;

  TorPtr tor;
  std::optional<RingStructure> ring;

  std::vector<std::size_t> poincare() const;
};

/// Cells of B(X, A, Y) in total degrees up to `cutoff`, counted from the
/// dimensions of the algebras without building anything.
std::size_t two_sided_bar_cells(const Span& span, int cutoff);
std::size_t koszul_cells(const Span& span, int cutoff);

/// Tor through the two-sided bar, with the requested outputs. Throws
/// ResourceLimit before building more than options.max_cells cells.
ReportDocument run(const SpanSpec& spec, const RunOptions& options = {});

std::string render_text(const ReportDocument& r);
nlohmann::ordered_json render_json(const ReportDocument& r);

}  // namespace dgtor
