#pragma once

#include <complex>
#include <string>

#include "orthoscope/algebra/unipoly.hpp"

namespace orthoscope {

/// Element of Q(α) = Q[x]/(q) for a monic irreducible modulus q, held as the
/// reduced representative of degree < deg q. Irreducibility of q is the
/// caller's responsibility (factor_rationals produces such moduli).
class NumberFieldElement {
 public:
  NumberFieldElement(UniPoly modulus, const UniPoly& representative)
      : modulus_(std::move(modulus)) {
    if (modulus_.is_zero() || modulus_.is_constant())
      throw DomainError("number field modulus must be nonconstant");
    if (modulus_.leading() != 1) throw DomainError("number field modulus must be monic");
    rep_ = (representative % modulus_).with_var(modulus_.var());
  }

  static NumberFieldElement rational(const UniPoly& modulus, const Rational& c) {
    return NumberFieldElement(modulus, UniPoly::constant(c, modulus.var()));
  }
  /// The class of x itself, i.e. the root α.
  static NumberFieldElement generator(const UniPoly& modulus) {
    return NumberFieldElement(modulus, UniPoly::variable(modulus.var()));
  }

  const UniPoly& modulus() const { return modulus_; }
  const UniPoly& representative() const { return rep_; }

  bool is_zero() const { return rep_.is_zero(); }
  bool is_rational() const { return rep_.is_constant(); }
  /// Value of a rational element; throws unless is_rational().
  Rational to_rational() const {
    if (!is_rational()) throw DomainError("number field element is not rational");
    return rep_.coeff(0);
  }

  friend bool operator==(const NumberFieldElement& a, const NumberFieldElement& b) {
    return a.modulus_ == b.modulus_ && a.rep_ == b.rep_;
  }

  friend NumberFieldElement operator+(const NumberFieldElement& a, const NumberFieldElement& b) {
    check_same(a, b);
    return {a.modulus_, a.rep_ + b.rep_};
  }
  friend NumberFieldElement operator-(const NumberFieldElement& a, const NumberFieldElement& b) {
    check_same(a, b);
    return {a.modulus_, a.rep_ - b.rep_};
  }
  NumberFieldElement operator-() const { return {modulus_, -rep_}; }
  friend NumberFieldElement operator*(const NumberFieldElement& a, const NumberFieldElement& b) {
    check_same(a, b);
    return {a.modulus_, a.rep_ * b.rep_};
  }
  friend NumberFieldElement operator*(const NumberFieldElement& a, const Rational& c) {
    return {a.modulus_, a.rep_ * c};
  }

  NumberFieldElement inverse() const {
    if (is_zero()) throw DomainError("inverse of zero in a number field");
    ExtendedGcd e = extended_gcd(rep_, modulus_);
    if (!e.g.is_constant()) throw DomainError("modulus is reducible: element is a zero divisor");
    return {modulus_, e.s};
  }
  friend NumberFieldElement operator/(const NumberFieldElement& a, const NumberFieldElement& b) {
    return a * b.inverse();
  }

  /// Sum of the conjugates: trace of multiplication by this element.
  Rational trace() const {
    const std::size_t n = modulus_.size() - 1;
    Rational tr = 0;
    UniPoly basis = UniPoly::constant(1, modulus_.var());
    for (std::size_t i = 0; i < n; ++i) {
      tr += ((rep_ * basis) % modulus_).coeff(i);
      basis = (basis * UniPoly::variable(modulus_.var())) % modulus_;
    }
    return tr;
  }

  /// Value at a numerical approximation of one root of the modulus.
  std::complex<double> approximate_at(std::complex<double> root) const { return rep_.eval(root); }

  /// Exact serialization: "root of <modulus>, component <representative>".
  std::string to_string() const {
    if (is_rational()) return to_rational().get_str();
    return "root of " + modulus_.to_string() + ", component " + rep_.to_string();
  }

 private:
  static void check_same(const NumberFieldElement& a, const NumberFieldElement& b) {
    if (!(a.modulus_ == b.modulus_)) throw DomainError("number field modulus mismatch");
  }

  UniPoly modulus_;
  UniPoly rep_;
};

}  // namespace orthoscope
