#pragma once

#include "orthoscope/ratfunc/ratfunc.hpp"

namespace orthoscope {

/// r = derivative_part' + remainder, with remainder proper and of squarefree
/// denominator. derivative_part carries no constant term.
struct HermiteDecomposition {
  RatFunc derivative_part;
  RatFunc remainder;
};

/// Hermite reduction (Mack's linear variant). The polynomial part of r is
/// integrated directly; the proper part is reduced against the squarefree
/// structure of the denominator.
inline HermiteDecomposition hermite_reduce(const RatFunc& r) {
  auto [poly, a] = divmod(r.num(), r.den());
  RatFunc g(poly.antiderivative());
  if (a.is_zero()) return {g, RatFunc()};

  const UniPoly& d = r.den();
  UniPoly d_minus = poly_gcd(d, d.derivative());
  UniPoly d_star = exact_div(d, d_minus);
  while (!d_minus.is_constant()) {
    UniPoly d_minus2 = poly_gcd(d_minus, d_minus.derivative());
    UniPoly d_minus_star = exact_div(d_minus, d_minus2);
    UniPoly lhs = -exact_div(d_star * d_minus.derivative(), d_minus);
    auto [b, c] = solve_bezout(lhs, d_minus_star, a);
    a = c - exact_div(b.derivative() * d_star, d_minus_star);
    g += RatFunc::normalize(b, d_minus);
    d_minus = d_minus2;
  }
  return {g, RatFunc::normalize(a, d_star)};
}

}  // namespace orthoscope
