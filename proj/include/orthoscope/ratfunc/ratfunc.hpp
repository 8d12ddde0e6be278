#pragma once

#include <string>
#include <utility>

#include "orthoscope/algebra/unipoly.hpp"

namespace orthoscope {

/// Reduced rational function n/d over Q: gcd(n, d) = 1, d monic, and zero is
/// stored as 0/1.
class RatFunc {
 public:
  RatFunc() : num_({}), den_(UniPoly::constant(1)) {}
  RatFunc(const UniPoly& p) : num_(p), den_(UniPoly::constant(1, p.var())) {}  // NOLINT(implicit)
  static RatFunc constant(const Rational& c) { return RatFunc(UniPoly::constant(c)); }

  /// Reduces n/d and makes the denominator monic.
  static RatFunc normalize(const UniPoly& n, const UniPoly& d) {
    if (d.is_zero()) throw DomainError("rational function with zero denominator");
    RatFunc r;
    if (n.is_zero()) {
      r.den_ = UniPoly::constant(1, d.var());
      return r;
    }
    UniPoly g = poly_gcd(n, d);
    UniPoly nn = exact_div(n, g), dd = exact_div(d, g);
    Rational lc = dd.leading();
    r.num_ = nn / lc;
    r.den_ = dd / lc;
    return r;
  }

  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return is_polynomial() && num_.is_constant(); }
  /// deg num < deg den (zero counts as proper).
  bool is_proper() const { return num_.degree() < den_.degree(); }

  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  RatFunc operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return normalize(a.num_ + b.num_, a.den_);
    return normalize(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return normalize(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw DomainError("division by the zero rational function");
    return normalize(a.num_ * b.den_, a.den_ * b.num_);
  }
  friend RatFunc operator*(const RatFunc& a, const Rational& c) { return normalize(a.num_ * c, a.den_); }
  friend RatFunc operator*(const Rational& c, const RatFunc& a) { return a * c; }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

  RatFunc pow(int k) const {
    if (k < 0) return RatFunc::constant(1) / pow(-k);
    return normalize(num_.pow(static_cast<unsigned>(k)), den_.pow(static_cast<unsigned>(k)));
  }

  RatFunc derivative() const {
    return normalize(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
  }

  /// Polynomial part (quotient of num by den).
  UniPoly polynomial_part() const { return num_ / den_; }
  /// r minus its polynomial part.
  RatFunc proper_part() const { return normalize(num_ % den_, den_); }

  /// r(p(x)) for a polynomial substitution p.
  RatFunc compose(const UniPoly& p) const { return normalize(num_.compose(p), den_.compose(p)); }

  Rational eval(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d == 0) throw DomainError("rational function evaluated at a pole");
    return num_.eval(x) / d;
  }

  /// Parser-compatible rendering: "-1/x", "(x - 1)/x", "x^2 + 1".
  std::string to_string() const {
    if (is_polynomial()) return num_.to_string();
    std::string n = num_.to_string();
    bool plain_integer = num_.is_constant() && is_integer(num_.coeff(0));
    if (!plain_integer) n = "(" + n + ")";
    std::string d = den_.to_string();
    bool single_power = d.find(' ') == std::string::npos && d.find('*') == std::string::npos;
    if (!single_power) d = "(" + d + ")";
    return n + "/" + d;
  }

 private:
  UniPoly num_;
  UniPoly den_;
};

inline RatFunc normalize(const UniPoly& n, const UniPoly& d) { return RatFunc::normalize(n, d); }

/// Logarithmic derivative h'/h for d/dx.
inline RatFunc dlog(const RatFunc& h) {
  if (h.is_zero()) throw DomainError("logarithmic derivative of zero");
  return RatFunc::normalize(h.num().derivative() * h.den() - h.num() * h.den().derivative(), h.num() * h.den());
}

}  // namespace orthoscope
