#include "dgtor/linalg/coefficient_ring.hpp"

#include "dgtor/core/errors.hpp"

#include <charconv>

namespace dgtor {

std::string to_string(const Integer& x) { return x.str(); }

std::string to_string(const Rational& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

CoefficientRing CoefficientRing::prime_field(std::uint32_t p) {
  if (!is_prime(p) || p >= (1u << 31)) {
    throw ValidationError("characteristic " + std::to_string(p) + " is not a supported prime");
  }
  return CoefficientRing(Kind::PrimeField, p);
}

CoefficientRing CoefficientRing::parse(std::string_view text) {
  if (text == "Z") return integers();
  if (text == "Q") return rationals();
  if (text.size() >= 2 && (text[0] == 'F' || text[0] == 'f')) {
    std::uint32_t p = 0;
    auto [ptr, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), p);
    if (ec == std::errc() && ptr == text.data() + text.size()) return prime_field(p);
  }
  throw ValidationError("unknown coefficient ring '" + std::string(text) + "' (expected Z, Q or F<p>)");
}

std::string CoefficientRing::name() const {
  switch (kind_) {
    case Kind::Integers: return "Z";
    case Kind::Rationals: return "Q";
    case Kind::PrimeField: return "F" + std::to_string(p_);
  }
  return "?";
}

Integer CoefficientRing::reduce(const Integer& x) const {
  if (kind_ != Kind::PrimeField) return x;
  return mod_floor(x, Integer(p_));
}

Rational CoefficientRing::reduce(const Rational& x) const {
  if (kind_ != Kind::PrimeField) return x;
  // a/b mod p with b invertible mod p
  Integer p(p_);
  Integer num = mod_floor(numerator(x), p);
  Integer den = mod_floor(denominator(x), p);
  if (den == 0) throw ValidationError("denominator divisible by the characteristic");
  Integer inv = powm(den, p - 2, p);
  return Rational(mod_floor(num * inv, p));
}

}  // namespace dgtor
