#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <optional>
#include <string>

#include "orthoscope/errors.hpp"

namespace orthoscope {

using Integer = mpz_class;

/// Exact rational number. GMP keeps the pair canonical (reduced, positive
/// denominator) after every arithmetic operation.
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

/// Polynomial degree. The zero polynomial has degree −∞, which compares below
/// every finite degree.
class Degree {
 public:
  constexpr explicit Degree(std::size_t d) : value_(d) {}
  static constexpr Degree neg_infinity() { return Degree(); }

  constexpr bool is_neg_infinity() const { return !value_.has_value(); }

  std::size_t value() const {
    if (!value_) throw DomainError("degree of the zero polynomial is -infinity");
    return *value_;
  }

  friend constexpr bool operator==(const Degree&, const Degree&) = default;
  friend constexpr std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
    if (a.is_neg_infinity() && b.is_neg_infinity()) return std::strong_ordering::equal;
    if (a.is_neg_infinity()) return std::strong_ordering::less;
    if (b.is_neg_infinity()) return std::strong_ordering::greater;
    return *a.value_ <=> *b.value_;
  }

  std::string to_string() const { return value_ ? std::to_string(*value_) : "-inf"; }

 private:
  constexpr Degree() = default;
  std::optional<std::size_t> value_;
};

}  // namespace orthoscope
