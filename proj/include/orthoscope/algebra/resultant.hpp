#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "orthoscope/algebra/unipoly.hpp"

namespace orthoscope {

/// Polynomial in a main variable x whose coefficients are polynomials in a
/// parameter t; entry k is the coefficient of x^k. Trailing zero entries are
/// ignored.
using PolyOverPoly = std::vector<UniPoly>;

namespace detail {

inline PolyOverPoly trimmed(PolyOverPoly p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

}  // namespace detail

/// Lifts a univariate polynomial in x to a PolyOverPoly with constant
/// coefficients in the parameter `param`.
inline PolyOverPoly lift_constant_coeffs(const UniPoly& p, const std::string& param = "t") {
  PolyOverPoly out;
  out.reserve(p.size());
  for (const auto& c : p.coeffs()) out.push_back(UniPoly::constant(c, param));
  return out;
}

/// Resultant with respect to the main variable, computed as the determinant
/// of the Sylvester matrix by fraction-free (Bareiss) elimination over Q[t].
/// If one side has x-degree zero the constant-resultant convention applies:
/// Res(a0, b) = a0^deg(b), and Res(a0, b0) = 1.
inline UniPoly resultant_x(const PolyOverPoly& a_in, const PolyOverPoly& b_in, const std::string& param = "t") {
  PolyOverPoly a = detail::trimmed(a_in), b = detail::trimmed(b_in);
  if (a.empty() || b.empty()) throw DomainError("resultant of a zero polynomial");
  const std::size_t m = a.size() - 1, n = b.size() - 1;
  if (m == 0) return a[0].pow(static_cast<unsigned>(n)).with_var(param);
  if (n == 0) return b[0].pow(static_cast<unsigned>(m)).with_var(param);

  const std::size_t N = m + n;
  const UniPoly zero({}, param);
  std::vector<std::vector<UniPoly>> M(N, std::vector<UniPoly>(N, zero));
  // Rows 0..n-1 hold shifted copies of a, rows n..N-1 of b; columns run from
  // the highest power of x down.
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= m; ++k) M[r][r + (m - k)] = a[k];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= n; ++k) M[n + r][r + (n - k)] = b[k];

  bool negate = false;
  UniPoly prev = UniPoly::constant(1, param);
  for (std::size_t k = 0; k + 1 < N; ++k) {
    if (M[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < N && M[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == N) return zero;
      std::swap(M[k], M[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < N; ++i) {
      for (std::size_t j = k + 1; j < N; ++j)
        M[i][j] = exact_div(M[k][k] * M[i][j] - M[i][k] * M[k][j], prev);
      M[i][k] = zero;
    }
    prev = M[k][k];
  }
  UniPoly det = M[N - 1][N - 1];
  return negate ? -det : det;
}

/// Resultant of two univariate polynomials over Q.
inline Rational resultant(const UniPoly& a, const UniPoly& b) {
  UniPoly r = resultant_x(lift_constant_coeffs(a), lift_constant_coeffs(b));
  return r.coeff(0);
}

}  // namespace orthoscope
