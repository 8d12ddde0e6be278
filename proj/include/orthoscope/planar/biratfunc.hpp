#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orthoscope/algebra/bipoly.hpp"
#include "orthoscope/ratfunc/ratfunc.hpp"

namespace orthoscope {

namespace detail {

// Polynomials in y over Q[x]; entry j is the coefficient of y^j, trimmed.
using YPoly = std::vector<UniPoly>;

inline void ytrim(YPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline YPoly to_ypoly(const BiPoly& p) {
  YPoly r = p.coeffs_in_y();
  ytrim(r);
  return r;
}

inline BiPoly from_ypoly(const YPoly& p) { return BiPoly::from_coeffs_in_y(p); }

/// Monic gcd of the x-coefficients.
inline UniPoly ycontent(const YPoly& p) {
  UniPoly g({}, "x");
  for (const auto& c : p) {
    g = poly_gcd(g, c);
    if (!g.is_zero() && g.is_constant()) break;
  }
  return g;
}

inline YPoly yprimitive(const YPoly& p) {
  if (p.empty()) return p;
  UniPoly c = ycontent(p);
  YPoly r;
  r.reserve(p.size());
  for (const auto& a : p) r.push_back(exact_div(a, c));
  // Scale so the leading x-coefficient of the leading y-coefficient is 1.
  Rational lc = r.back().leading();
  for (auto& a : r) a /= lc;
  return r;
}

/// Pseudo-remainder of a by b in y.
inline YPoly yprem(YPoly a, const YPoly& b) {
  const std::size_t n = b.size();
  while (a.size() >= n && !a.empty()) {
    UniPoly la = a.back();
    const std::size_t shift = a.size() - n;
    for (auto& c : a) c = c * b.back();
    for (std::size_t j = 0; j < n; ++j) a[j + shift] -= la * b[j];
    ytrim(a);
  }
  return a;
}

/// gcd in Q[x][y] up to a unit of Q, via content splitting and a primitive
/// remainder sequence in y.
inline YPoly ygcd(const YPoly& a, const YPoly& b) {
  if (a.empty()) return yprimitive(b);
  if (b.empty()) return yprimitive(a);
  UniPoly cont = poly_gcd(ycontent(a), ycontent(b));
  YPoly p = yprimitive(a), q = yprimitive(b);
  if (p.size() < q.size()) std::swap(p, q);
  while (!q.empty() && q.size() > 1) {
    YPoly r = yprem(p, q);
    p = std::move(q);
    q = yprimitive(r);
  }
  YPoly g = q.empty() ? p : YPoly{UniPoly::constant(1, "x")};
  for (auto& c : g) c = c * cont;
  return g;
}

/// a / b when b divides a exactly in Q[x][y].
inline std::optional<YPoly> ydiv_exact(YPoly a, const YPoly& b) {
  if (b.empty()) throw DomainError("division by the zero polynomial");
  if (a.empty()) return YPoly{};
  if (a.size() < b.size()) return std::nullopt;
  YPoly q(a.size() - b.size() + 1, UniPoly({}, "x"));
  while (!a.empty()) {
    if (a.size() < b.size()) return std::nullopt;
    auto [c, rem] = divmod(a.back(), b.back());
    if (!rem.is_zero()) return std::nullopt;
    const std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[j + shift] -= c * b[j];
    if (!a.back().is_zero()) return std::nullopt;
    ytrim(a);
  }
  ytrim(q);
  return q;
}

}  // namespace detail

/// b divides a in Q[x,y]; returns the quotient or nothing.
inline std::optional<BiPoly> bipoly_divide(const BiPoly& a, const BiPoly& b) {
  auto q = detail::ydiv_exact(detail::to_ypoly(a), detail::to_ypoly(b));
  if (!q) return std::nullopt;
  return detail::from_ypoly(*q);
}

/// gcd in Q[x,y], leading coefficient 1 in the y-degree-then-x-degree order.
inline BiPoly bipoly_gcd(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() && b.is_zero()) return BiPoly();
  return detail::from_ypoly(detail::yprimitive(detail::ygcd(detail::to_ypoly(a), detail::to_ypoly(b))));
}

/// Reduced bivariate rational function. The denominator's leading coefficient,
/// ordering monomials by y-degree then x-degree, is 1; zero is 0/1.
class BiRatFunc {
 public:
  BiRatFunc() : den_(BiPoly::constant(1)) {}
  BiRatFunc(const BiPoly& p) : num_(p), den_(BiPoly::constant(1)) {}  // NOLINT(implicit)
  BiRatFunc(const RatFunc& r)                                          // NOLINT(implicit)
      : num_(BiPoly::from_uni(r.num())), den_(BiPoly::from_uni(r.den())) {}
  static BiRatFunc constant(const Rational& c) { return BiRatFunc(BiPoly::constant(c)); }

  static BiRatFunc normalize(const BiPoly& n, const BiPoly& d) {
    if (d.is_zero()) throw DomainError("bivariate rational function with zero denominator");
    BiRatFunc r;
    if (n.is_zero()) return r;
    BiPoly g = bipoly_gcd(n, d);
    BiPoly nn = *bipoly_divide(n, g), dd = *bipoly_divide(d, g);
    Rational lc = detail::to_ypoly(dd).back().leading();
    r.num_ = nn * (1 / lc);
    r.den_ = dd * (1 / lc);
    return r;
  }

  const BiPoly& num() const { return num_; }
  const BiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return is_polynomial() && num_.is_constant(); }
  bool free_of(Var v) const { return num_.free_of(v) && den_.free_of(v); }

  friend bool operator==(const BiRatFunc& a, const BiRatFunc& b) { return a.num_ * b.den_ == b.num_ * a.den_; }

  BiRatFunc operator-() const {
    BiRatFunc r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend BiRatFunc operator+(const BiRatFunc& a, const BiRatFunc& b) {
    if (a.den_ == b.den_) return normalize(a.num_ + b.num_, a.den_);
    return normalize(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend BiRatFunc operator-(const BiRatFunc& a, const BiRatFunc& b) { return a + (-b); }
  friend BiRatFunc operator*(const BiRatFunc& a, const BiRatFunc& b) {
    return normalize(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend BiRatFunc operator/(const BiRatFunc& a, const BiRatFunc& b) {
    if (b.is_zero()) throw DomainError("division by the zero rational function");
    return normalize(a.num_ * b.den_, a.den_ * b.num_);
  }
  friend BiRatFunc operator*(const BiRatFunc& a, const Rational& c) { return normalize(a.num_ * c, a.den_); }
  friend BiRatFunc operator*(const Rational& c, const BiRatFunc& a) { return a * c; }

  BiRatFunc pow(int k) const {
    if (k < 0) return constant(1) / pow(-k);
    return normalize(num_.pow(static_cast<unsigned>(k)), den_.pow(static_cast<unsigned>(k)));
  }

  BiRatFunc partial(Var v) const {
    return normalize(num_.partial(v) * den_ - num_ * den_.partial(v), den_ * den_);
  }

  /// r(sx, sy) for polynomial substitutions.
  BiRatFunc substitute(const BiPoly& sx, const BiPoly& sy) const {
    return normalize(num_.substitute(sx, sy), den_.substitute(sx, sy));
  }

  /// r(x, 0) as a univariate rational function.
  RatFunc restrict_y0() const {
    UniPoly d = den_.at_y_zero();
    if (d.is_zero()) throw DomainError("restriction to y = 0 meets the polar locus");
    return RatFunc::normalize(num_.at_y_zero(), d);
  }

  /// Univariate view, valid when free of y.
  RatFunc to_ratfunc() const {
    if (!free_of(Var::y)) throw DomainError("rational function depends on y");
    return RatFunc::normalize(num_.to_uni(), den_.to_uni());
  }

  std::string to_string() const {
    if (is_polynomial()) return (num_ * (1 / den_.constant_term())).to_string();
    std::string n = num_.to_string(), d = den_.to_string();
    bool plain = num_.is_constant() && is_integer(num_.constant_term());
    if (!plain) n = "(" + n + ")";
    if (d.find(' ') != std::string::npos || d.find('*') != std::string::npos) d = "(" + d + ")";
    return n + "/" + d;
  }

 private:
  BiPoly num_;
  BiPoly den_;
};

}  // namespace orthoscope
