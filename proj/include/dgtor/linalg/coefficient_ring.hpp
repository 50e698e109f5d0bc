#pragma once

#include "dgtor/linalg/integer.hpp"

#include <cstdint>
#include <string>
#include <string_view>

namespace dgtor {

/// The ground ring: the integers, a prime field or the rationals.
class CoefficientRing {
 public:
  enum class Kind { Integers, PrimeField, Rationals };

  static CoefficientRing integers() { return CoefficientRing(Kind::Integers, 0); }
  static CoefficientRing rationals() { return CoefficientRing(Kind::Rationals, 0); }
  /// Throws ValidationError unless p is prime.
  static CoefficientRing prime_field(std::uint32_t p);
  /// Accepts "Z", "Q" and "F<p>".
  static CoefficientRing parse(std::string_view text);

  Kind kind() const { return kind_; }
  std::uint32_t characteristic() const { return p_; }
  bool is_field() const { return kind_ != Kind::Integers; }
  std::string name() const;

  /// Canonical representative: residues in [0, p) over a prime field,
  /// the value itself otherwise.
  Integer reduce(const Integer& x) const;
  Rational reduce(const Rational& x) const;

  bool operator==(const CoefficientRing& other) const = default;

 private:
  CoefficientRing(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}
  Kind kind_;
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace dgtor
