#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "orthoscope/algebra/rational.hpp"

namespace orthoscope {

/// Dense univariate polynomial over Q. Coefficients are indexed by degree and
/// the leading coefficient is nonzero unless the polynomial is zero (empty
/// coefficient vector). The variable name only affects printing.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs, std::string var = "x")
      : coeffs_(std::move(coeffs)), var_(std::move(var)) {
    canonicalize_coeffs();
  }
  UniPoly(std::initializer_list<Rational> coeffs, std::string var = "x")
      : coeffs_(coeffs), var_(std::move(var)) {
    canonicalize_coeffs();
  }

  static UniPoly constant(const Rational& c, std::string var = "x") {
    return UniPoly(std::vector<Rational>{c}, std::move(var));
  }
  static UniPoly monomial(const Rational& c, std::size_t k, std::string var = "x") {
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return UniPoly(std::move(v), std::move(var));
  }
  static UniPoly variable(std::string var = "x") { return monomial(1, 1, std::move(var)); }

  Degree degree() const {
    return coeffs_.empty() ? Degree::neg_infinity() : Degree(coeffs_.size() - 1);
  }
  /// Number of stored coefficients: degree + 1, or 0 for the zero polynomial.
  std::size_t size() const { return coeffs_.size(); }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  const Rational& coeff(std::size_t i) const {
    static const Rational zero(0);
    return i < coeffs_.size() ? coeffs_[i] : zero;
  }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& leading() const {
    if (coeffs_.empty()) throw DomainError("leading coefficient of the zero polynomial");
    return coeffs_.back();
  }

  const std::string& var() const { return var_; }
  UniPoly with_var(std::string var) const { return UniPoly(coeffs_, std::move(var)); }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  UniPoly operator-() const {
    UniPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  UniPoly& operator+=(const UniPoly& o) {
    adopt_var(o);
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    adopt_var(o);
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  UniPoly& operator*=(const Rational& c) {
    if (c == 0) {
      coeffs_.clear();
      return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
  }
  UniPoly& operator/=(const Rational& c) {
    if (c == 0) throw DomainError("polynomial division by zero scalar");
    for (auto& x : coeffs_) x /= c;
    return *this;
  }

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
  friend UniPoly operator/(UniPoly a, const Rational& c) { return a /= c; }

  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly({}, a.pick_var(b));
    std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return UniPoly(std::move(r), a.pick_var(b));
  }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

  /// Euclidean division: returns (q, r) with a = q*b + r and deg r < deg b.
  friend std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    std::string v = a.pick_var(b);
    if (a.coeffs_.size() < b.coeffs_.size()) return {UniPoly({}, v), a.with_var(v)};
    std::vector<Rational> rem = a.coeffs_;
    std::vector<Rational> quo(a.coeffs_.size() - b.coeffs_.size() + 1);
    const Rational& lb = b.coeffs_.back();
    for (std::size_t k = quo.size(); k-- > 0;) {
      Rational c = rem[k + b.coeffs_.size() - 1] / lb;
      quo[k] = c;
      if (c == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) rem[k + j] -= c * b.coeffs_[j];
    }
    rem.resize(b.coeffs_.size() - 1);
    return {UniPoly(std::move(quo), v), UniPoly(std::move(rem), v)};
  }
  friend UniPoly operator/(const UniPoly& a, const UniPoly& b) { return divmod(a, b).first; }
  friend UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }

  /// Quotient a/b, throwing unless b divides a exactly.
  friend UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw DomainError("inexact polynomial division");
    return q;
  }

  bool divides(const UniPoly& other) const { return (other % *this).is_zero(); }

  UniPoly derivative() const {
    if (coeffs_.size() <= 1) return UniPoly({}, var_);
    std::vector<Rational> r(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) r[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return UniPoly(std::move(r), var_);
  }

  /// Antiderivative with zero constant term.
  UniPoly antiderivative() const {
    if (coeffs_.empty()) return *this;
    std::vector<Rational> r(coeffs_.size() + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i + 1] = coeffs_[i] / static_cast<unsigned long>(i + 1);
    return UniPoly(std::move(r), var_);
  }

  Rational eval(const Rational& x) const {
    Rational acc = 0;
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
    return acc;
  }

  std::complex<double> eval(std::complex<double> z) const {
    std::complex<double> acc = 0.0;
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * z + coeffs_[k].get_d();
    return acc;
  }

  /// p(q(x)).
  UniPoly compose(const UniPoly& q) const {
    UniPoly acc({}, q.var_);
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * q + UniPoly::constant(coeffs_[k], q.var_);
    return acc;
  }

  UniPoly pow(unsigned n) const {
    UniPoly result = UniPoly::constant(1, var_), base = *this;
    while (n) {
      if (n & 1U) result *= base;
      n >>= 1U;
      if (n) base *= base;
    }
    return result;
  }

  UniPoly monic() const {
    if (is_zero()) return *this;
    return *this / leading();
  }

  /// Positive rational c with p/c primitive in Z[x] and positive leading
  /// coefficient sign preserved in c's sign.
  Rational content() const {
    if (is_zero()) return 0;
    Integer num = 0, den = 1;
    for (const auto& c : coeffs_) {
      num = gcd(num, c.get_num());
      den = lcm(den, c.get_den());
    }
    Rational r = make_rational(num, den);
    return leading() < 0 ? Rational(-r) : r;
  }

  /// Integer coefficients of p / content(p); the leading one is positive.
  std::vector<Integer> primitive_integer() const {
    std::vector<Integer> out;
    if (is_zero()) return out;
    Rational c = content();
    out.reserve(coeffs_.size());
    for (const auto& x : coeffs_) {
      Rational q = x / c;
      out.push_back(q.get_num());
    }
    return out;
  }

  static UniPoly from_integers(const std::vector<Integer>& v, std::string var = "x") {
    std::vector<Rational> c;
    c.reserve(v.size());
    for (const auto& z : v) c.emplace_back(z);
    return UniPoly(std::move(c), std::move(var));
  }

  std::string to_string() const;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  // Callers may hand in mpq values such as 2/4 built without canonicalization.
  void canonicalize_coeffs() {
    for (auto& c : coeffs_) c.canonicalize();
    trim();
  }
  const std::string& pick_var(const UniPoly& o) const {
    return (is_constant() && !o.is_constant()) ? o.var_ : var_;
  }
  void adopt_var(const UniPoly& o) {
    if (is_constant() && !o.is_constant()) var_ = o.var_;
  }

  std::vector<Rational> coeffs_;
  std::string var_ = "x";
};

namespace detail {

/// Appends `c*mono` to a sum being printed, where `mono` is a product of
/// powers ("" for the constant monomial).
inline void append_term(std::string& out, const Rational& c, const std::string& mono) {
  Rational a = abs(c);
  bool neg = c < 0;
  if (out.empty()) {
    if (neg) out += "-";
  } else {
    out += neg ? " - " : " + ";
  }
  if (mono.empty()) {
    out += a.get_str();
  } else if (a == 1) {
    out += mono;
  } else {
    out += a.get_str() + "*" + mono;
  }
}

inline std::string power_str(const std::string& var, std::size_t k) {
  if (k == 0) return "";
  if (k == 1) return var;
  return var + "^" + std::to_string(k);
}

}  // namespace detail

/// Parser-compatible rendering, highest degree first: "x^3 - 1/2*x + 2".
inline std::string UniPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (coeffs_[k] == 0) continue;
    detail::append_term(out, coeffs_[k], detail::power_str(var_, k));
  }
  return out;
}

/// Monic greatest common divisor; gcd(0, 0) = 0.
inline UniPoly poly_gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = a % b;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

struct ExtendedGcd {
  UniPoly s, t, g;  // s*a + t*b = g, g monic
};

inline ExtendedGcd extended_gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly r0 = a, r1 = b;
  UniPoly s0 = UniPoly::constant(1, a.var()), s1({}, a.var());
  UniPoly t0({}, a.var()), t1 = UniPoly::constant(1, a.var());
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.is_zero()) return {s0, t0, r0};
  Rational lc = r0.leading();
  return {s0 / lc, t0 / lc, r0 / lc};
}

/// Solves s*a + t*b = c with deg s < deg b, given gcd(a, b) | c.
inline std::pair<UniPoly, UniPoly> solve_bezout(const UniPoly& a, const UniPoly& b, const UniPoly& c) {
  ExtendedGcd e = extended_gcd(a, b);
  auto [q, r] = divmod(c, e.g);
  if (!r.is_zero()) throw DomainError("bezout right-hand side not divisible by gcd");
  UniPoly s = e.s * q, t = e.t * q;
  if (b.is_zero()) return {s, t};
  auto [qq, rr] = divmod(s, b);
  return {rr, t + qq * a};
}

inline UniPoly lcm(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly({}, a.var());
  return exact_div(a * b, poly_gcd(a, b)).monic();
}

struct FactorPart {
  UniPoly factor;  // monic, nonconstant
  unsigned multiplicity;
};

struct SquarefreeFactorization {
  Rational content;
  std::vector<FactorPart> parts;

  UniPoly expand(const std::string& var = "x") const {
    UniPoly r = UniPoly::constant(content, var);
    for (const auto& p : parts) r *= p.factor.pow(p.multiplicity);
    return r;
  }
};

/// Yun's squarefree decomposition. Parts are listed by increasing
/// multiplicity; the content is the leading coefficient of the input.
inline SquarefreeFactorization squarefree_decompose(const UniPoly& p) {
  if (p.is_zero()) throw DomainError("squarefree decomposition of the zero polynomial");
  SquarefreeFactorization out{p.leading(), {}};
  if (p.is_constant()) return out;
  UniPoly a = p.monic();
  UniPoly da = a.derivative();
  UniPoly b = poly_gcd(a, da);
  UniPoly c = exact_div(a, b);
  UniPoly d = exact_div(da, b) - c.derivative();
  for (unsigned i = 1; !c.is_constant(); ++i) {
    UniPoly ai = poly_gcd(c, d);
    c = exact_div(c, ai);
    d = exact_div(d, ai) - c.derivative();
    if (!ai.is_constant()) out.parts.push_back({ai, i});
  }
  return out;
}

/// Product of the distinct monic irreducible factors.
inline UniPoly squarefree_part(const UniPoly& p) {
  if (p.is_zero()) throw DomainError("squarefree part of the zero polynomial");
  if (p.is_constant()) return UniPoly::constant(1, p.var());
  return exact_div(p, poly_gcd(p, p.derivative())).monic();
}

inline bool is_squarefree(const UniPoly& p) {
  return !p.is_zero() && poly_gcd(p, p.derivative()).is_constant();
}

}  // namespace orthoscope
