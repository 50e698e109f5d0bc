#include "dgtor/algebra/free_gca.hpp"

#include "dgtor/core/errors.hpp"

#include <cctype>
#include <set>

namespace dgtor {
namespace {

std::string monomial_name(const std::vector<GeneratorSpec>& gens, const FreeGca::Exponents& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += gens[i].name;
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

void enumerate(const std::vector<GeneratorSpec>& gens, std::size_t pos, int budget, FreeGca::Exponents& current,
               std::vector<FreeGca::Exponents>& out) {
  if (pos == gens.size()) {
    out.push_back(current);
    return;
  }
  const GeneratorSpec& g = gens[pos];
  const int max_power = (g.degree % 2 == 1 && !g.polynomial) ? 1 : budget / g.degree;
  for (int k = 0; k <= max_power && k * g.degree <= budget; ++k) {
    current[pos] = k;
    enumerate(gens, pos + 1, budget - k * g.degree, current, out);
  }
  current[pos] = 0;
}

}  // namespace

FreeGcaPtr FreeGca::build(FreeGcaPresentation p) {
  std::set<std::string> names;
  for (const auto& g : p.generators) {
    if (g.degree < 1) throw ValidationError("generator '" + g.name + "' must have degree at least 1");
    if (g.name.empty() || !names.insert(g.name).second) throw ValidationError("duplicate or empty generator name");
    if (g.degree > p.cutoff) {
      throw CutoffTooSmall("generator '" + g.name + "' of degree " + std::to_string(g.degree) +
                           " exceeds cutoff " + std::to_string(p.cutoff));
    }
    if (g.polynomial && g.degree % 2 == 1 && p.ring.characteristic() != 2) {
      throw ValidationError("odd generator '" + g.name + "' may carry nonzero squares only in characteristic 2");
    }
  }

  auto gca = std::make_shared<FreeGca>();
  std::vector<Exponents> monomials;
  Exponents scratch(p.generators.size(), 0);
  enumerate(p.generators, 0, p.cutoff, scratch, monomials);

  std::vector<GradedBasis::Element> elements;
  for (const auto& e : monomials) {
    int degree = 0;
    for (std::size_t i = 0; i < e.size(); ++i) degree += e[i] * p.generators[i].degree;
    elements.push_back({monomial_name(p.generators, e), degree});
  }
  std::vector<Index> position;
  BasisPtr basis = GradedBasis::make(elements, p.cutoff, &position);
  gca->exponents_.resize(monomials.size());
  for (Index i = 0; i < monomials.size(); ++i) {
    gca->exponents_[position[i]] = monomials[i];
    gca->index_[monomials[i]] = position[i];
  }

  // the product owns its monomial table so the algebra may outlive this object
  struct Table {
    std::vector<Exponents> exponents;
    std::map<Exponents, Index> index;
    std::vector<int> degree;
    std::vector<bool> exterior;
  };
  auto table = std::make_shared<Table>();
  table->exponents = gca->exponents_;
  table->index = gca->index_;
  for (const auto& g : p.generators) {
    table->degree.push_back(g.degree);
    table->exterior.push_back(g.degree % 2 == 1 && !g.polynomial);
  }
  // x_j^{f_j} from the right factor moves past x_i^{e_i} for every i > j.
  Multiplication product = [table](Index a, Index b) {
    const Exponents& e = table->exponents[a];
    const Exponents& f = table->exponents[b];
    Exponents sum(e.size());
    long long sign = 0;
    int odd_left_suffix = 0;  // sum over i > j of e_i, odd generators only
    for (std::size_t j = e.size(); j-- > 0;) {
      sum[j] = e[j] + f[j];
      if (table->exterior[j] && sum[j] > 1) return SparseVector();
      if (table->degree[j] % 2 == 1) {
        sign += static_cast<long long>(f[j]) * odd_left_suffix;
        odd_left_suffix += e[j];
      }
    }
    auto it = table->index.find(sum);
    if (it == table->index.end()) return SparseVector();
    return SparseVector::unit(it->second, sign_power(sign));
  };

  GradedMap zero(basis, basis, 1);
  std::string name = p.name;
  if (name.empty()) {
    for (const auto& g : p.generators) name += (name.empty() ? "" : ",") + g.name;
    name = "k[" + name + "]";
  }
  gca->algebra_ = DgAlgebra::make({name, basis, zero, product, SparseVector::unit(0), true});
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    Exponents e(p.generators.size(), 0);
    e[i] = 1;
    gca->generator_index_.push_back(gca->index_.at(e));
  }
  gca->presentation_ = std::move(p);
  return gca;
}

std::optional<Index> FreeGca::monomial(const Exponents& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> FreeGca::generator_position(const std::string& name) const {
  for (std::size_t i = 0; i < presentation_.generators.size(); ++i) {
    if (presentation_.generators[i].name == name) return i;
  }
  return std::nullopt;
}

Index FreeGca::generator(const std::string& name) const {
  auto pos = generator_position(name);
  if (!pos) throw ValidationError("unknown generator '" + name + "'");
  return generator_index_[*pos];
}

// ------------------------------------------------------------------ parser

namespace {

class PolynomialParser {
 public:
  PolynomialParser(const std::string& text, const FreeGca& target) : text_(text), target_(target) {}

  SparseVector parse() {
    SparseVector total;
    skip();
    if (at_end()) fail("empty expression");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      total.add_scaled(term(), sign);
      first = false;
      skip();
    }
    return total;
  }

 private:
  SparseVector term() {
    Integer coeff = 1;
    bool have_number = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = number();
      have_number = true;
      skip();
      if (peek() == '*') {
        ++pos_;
        skip();
        if (!name_start()) fail("expected a generator after '*'");
      }
    }
    SparseVector value = SparseVector::unit(0);
    bool have_factor = false;
    while (name_start()) {
      std::string name = identifier();
      auto g = target_.generator_position(name);
      if (!g) fail("unknown generator '" + name + "'");
      SparseVector factor = SparseVector::unit(target_.generator(name));
      skip();
      long long power = 1;
      if (peek() == '^') {
        ++pos_;
        skip();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent");
        power = static_cast<long long>(number());
        skip();
      }
      for (long long k = 0; k < power; ++k) value = target_.algebra()->multiply(value, factor);
      have_factor = true;
      if (peek() == '*') {
        ++pos_;
        skip();
        if (!name_start()) fail("expected a generator after '*'");
      }
    }
    if (!have_number && !have_factor) fail("expected a term");
    return value.scaled(coeff);
  }

  Integer number() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return Integer(text_.substr(start, pos_ - start));
  }

  std::string identifier() {
    std::size_t start = pos_;
    while (name_char()) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  bool name_start() const {
    unsigned char c = static_cast<unsigned char>(peek());
    return std::isalpha(c) || c == '_' || c >= 0x80;
  }
  bool name_char() const {
    unsigned char c = static_cast<unsigned char>(peek());
    return std::isalnum(c) || c == '_' || c >= 0x80;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  bool at_end() const { return pos_ >= text_.size(); }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + text_ + "'");
  }

  const std::string& text_;
  const FreeGca& target_;
  std::size_t pos_ = 0;
};

}  // namespace

SparseVector parse_polynomial(const std::string& text, const FreeGca& target) {
  return PolynomialParser(text, target).parse();
}

AlgebraMorphism morphism_from_generator_images(const std::vector<SparseVector>& images, const FreeGcaPtr& source,
                                               const FreeGcaPtr& target) {
  const auto& gens = source->presentation().generators;
  if (images.size() != gens.size()) throw std::invalid_argument("one image per generator is required");
  const GradedBasis& tb = *target->basis();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (const auto& t : images[i]) {
      if (tb.degree(t.index) != gens[i].degree) {
        throw DegreeMismatch("image of '" + gens[i].name + "' contains '" + tb.name(t.index) + "' of degree " +
                             std::to_string(tb.degree(t.index)) + ", expected " + std::to_string(gens[i].degree));
      }
    }
  }
  const DgAlgebra& a = *target->algebra();
  GradedMap map = GradedMap::from_function(source->basis(), target->basis(), 0, [&](Index m) {
    const auto& e = source->exponents(m);
    SparseVector value = a.unit();
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (int k = 0; k < e[i]; ++k) value = a.multiply(value, images[i]);
    }
    return value;
  });
  AlgebraMorphism f{source->algebra(), target->algebra(), std::move(map)};
  CheckReport report = check_algebra_morphism(f);
  if (!report.ok()) throw NotAChainMap(report.describe());
  return f;
}

AlgebraMorphism evaluate_morphism(const std::map<std::string, std::string>& images, const FreeGcaPtr& source,
                                  const FreeGcaPtr& target) {
  std::vector<SparseVector> vectors(source->generator_count());
  for (const auto& [name, text] : images) {
    auto pos = source->generator_position(name);
    if (!pos) throw ValidationError("image given for unknown generator '" + name + "'");
    vectors[*pos] = parse_polynomial(text, *target);
  }
  return morphism_from_generator_images(vectors, source, target);
}

}  // namespace dgtor
