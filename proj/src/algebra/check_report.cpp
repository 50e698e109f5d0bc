#include "dgtor/algebra/check_report.hpp"

namespace dgtor {

bool CheckReport::failed(const std::string& axiom) const {
  for (const auto& f : failures) {
    if (f.axiom == axiom) return true;
  }
  return false;
}

void CheckReport::fail(const std::string& axiom, const std::string& witness) {
  if (!failed(axiom)) failures.push_back({axiom, witness});
}

void CheckReport::merge(const CheckReport& other) {
  for (const auto& f : other.failures) fail(f.axiom, f.witness);
}

std::string CheckReport::describe() const {
  if (ok()) return "ok";
  std::string out;
  for (const auto& f : failures) {
    if (!out.empty()) out += "; ";
    out += f.axiom + " fails at " + f.witness;
  }
  return out;
}

}  // namespace dgtor
