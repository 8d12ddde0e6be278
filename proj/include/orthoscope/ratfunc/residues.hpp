#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "orthoscope/algebra/factor.hpp"
#include "orthoscope/algebra/number_field.hpp"
#include "orthoscope/algebra/resultant.hpp"
#include "orthoscope/ratfunc/hermite.hpp"

namespace orthoscope {

/// Residue at a pole: rational when the locus is linear, otherwise an element
/// of Q[x]/(locus) evaluated at any root of the locus.
using Residue = std::variant<Rational, NumberFieldElement>;

inline bool residue_is_rational(const Residue& r) {
  return std::holds_alternative<Rational>(r) || std::get<NumberFieldElement>(r).is_rational();
}
inline Rational residue_rational(const Residue& r) {
  if (auto q = std::get_if<Rational>(&r)) return *q;
  return std::get<NumberFieldElement>(r).to_rational();
}
inline bool residue_is_zero(const Residue& r) {
  if (auto q = std::get_if<Rational>(&r)) return *q == 0;
  return std::get<NumberFieldElement>(r).is_zero();
}
inline std::string residue_to_string(const Residue& r) {
  if (auto q = std::get_if<Rational>(&r)) return q->get_str();
  return std::get<NumberFieldElement>(r).to_string();
}

struct AffinePole {
  UniPoly locus;  // monic irreducible
  unsigned multiplicity;
  Residue residue;  // order-1 Laurent coefficient at a root of the locus

  /// Sum of the residues over all roots of the locus.
  Rational residue_trace() const {
    if (auto q = std::get_if<Rational>(&residue)) return *q * static_cast<unsigned long>(locus.size() - 1);
    return std::get<NumberFieldElement>(residue).trace();
  }
};

struct InfinityPole {
  unsigned multiplicity;
  Rational residue;
};

/// Poles of r·dx on the projective line.
struct PoleSpectrum {
  std::vector<AffinePole> affine;
  std::optional<InfinityPole> infinity;

  bool empty() const { return affine.empty() && !infinity; }
  bool has_simple() const {
    for (const auto& p : affine)
      if (p.multiplicity == 1) return true;
    return infinity && infinity->multiplicity == 1;
  }
  bool has_multiple() const {
    for (const auto& p : affine)
      if (p.multiplicity >= 2) return true;
    return infinity && infinity->multiplicity >= 2;
  }
  /// Total residue over P^1; zero whenever the infinity chart was analyzed.
  Rational residue_sum() const {
    Rational s = infinity ? infinity->residue : Rational(0);
    for (const auto& p : affine) s += p.residue_trace();
    return s;
  }
};

/// Residue of the proper, squarefree-denominator function a/b at the roots of
/// the irreducible factor q of b: a / b' in Q[x]/(q).
inline Residue simple_pole_residue(const UniPoly& a, const UniPoly& b, const UniPoly& q) {
  if (q.degree() == Degree(1)) {
    Rational root = -q.coeff(0) / q.leading();
    return a.eval(root) / b.derivative().eval(root);
  }
  NumberFieldElement num(q, a), den(q, b.derivative());
  return num / den;
}

namespace detail {

/// Residue at u = 0 of -r(1/u)/u^2 and the pole order there (0 when regular).
inline std::optional<InfinityPole> infinity_pole(const RatFunc& r) {
  if (r.is_zero()) return std::nullopt;
  const std::size_t dn = r.num().size() - 1, dd = r.den().size() - 1;
  long order = static_cast<long>(dn) - static_cast<long>(dd) + 2;
  if (order <= 0) return std::nullopt;
  // n_rev(u) / d_rev(u) as a power series; need the coefficient of u^(order-1).
  auto rev = [](const UniPoly& p, std::size_t k) {
    return p.coeff(p.size() - 1 - k);
  };
  std::vector<Rational> s(static_cast<std::size_t>(order));
  const Rational& d0 = r.den().leading();
  for (std::size_t k = 0; k < s.size(); ++k) {
    Rational acc = k <= dn ? rev(r.num(), k) : Rational(0);
    for (std::size_t i = 1; i <= k && i <= dd; ++i) acc -= rev(r.den(), i) * s[k - i];
    s[k] = acc / d0;
  }
  return InfinityPole{static_cast<unsigned>(order), -s.back()};
}

}  // namespace detail

/// Pole loci of r with multiplicities and residues. With `projective`, the
/// point at infinity is analyzed for the form r·dx in the chart u = 1/x.
inline PoleSpectrum pole_spectrum(const RatFunc& r, bool projective = true) {
  PoleSpectrum out;
  if (r.is_zero()) return out;
  if (projective) out.infinity = detail::infinity_pole(r);
  if (r.is_polynomial()) return out;
  HermiteDecomposition h = hermite_reduce(r);
  const UniPoly& a = h.remainder.num();
  const UniPoly& b = h.remainder.den();
  for (const auto& part : factor_rationals(r.den()).parts) {
    Residue res = Rational(0);
    if (!h.remainder.is_zero() && part.factor.divides(b)) {
      res = simple_pole_residue(a, b, part.factor);
    } else if (part.factor.degree() != Degree(1)) {
      res = NumberFieldElement::rational(part.factor, 0);
    }
    out.affine.push_back({part.factor, part.multiplicity, res});
  }
  return out;
}

/// Rothstein–Trager data for the simple-pole part of a function: rho is monic
/// in t and its roots (with multiplicity) are the residues at the roots of the
/// squarefree source denominator.
struct ResiduePolynomial {
  UniPoly rho;                 // in t
  UniPoly source_denominator;  // squarefree, in x
};

/// rho(t) = Res_x(d, n - t·d') for the Hermite remainder n/d of r.
inline ResiduePolynomial residue_polynomial(const RatFunc& r) {
  RatFunc rem = hermite_reduce(r).remainder;
  const UniPoly& n = rem.num();
  const UniPoly& d = rem.den();
  if (!is_squarefree(d)) throw DomainError("residue polynomial needs a squarefree denominator");
  if (d.is_constant()) return {UniPoly::constant(1, "t"), d};
  UniPoly dprime = d.derivative();
  PolyOverPoly lhs = lift_constant_coeffs(d);
  PolyOverPoly rhs(std::max(n.size(), dprime.size()));
  UniPoly t = UniPoly::variable("t");
  for (std::size_t k = 0; k < rhs.size(); ++k)
    rhs[k] = UniPoly::constant(n.coeff(k), "t") - t * dprime.coeff(k);
  UniPoly rho = resultant_x(lhs, rhs);
  if (rho.is_zero()) throw DomainError("degenerate residue polynomial");
  return {rho.monic(), d};
}

/// True iff every pairwise ratio of roots of rho is rational, decided from
/// Phi(s) = Res_t(rho(t), s^n rho(t/s)), whose roots are exactly those ratios:
/// the answer is yes iff Phi splits into rational linear factors.
inline bool ratio_all_rational(const UniPoly& rho) {
  if (rho.is_zero()) throw DomainError("ratio test on the zero polynomial");
  if (rho.coeff(0) == 0) throw DomainError("ratio test: rho has a zero root");
  UniPoly sq = squarefree_part(rho).with_var("t");
  const std::size_t n = sq.size() - 1;
  if (n <= 1) return true;
  PolyOverPoly first = lift_constant_coeffs(sq, "s");
  PolyOverPoly second(n + 1);
  for (std::size_t k = 0; k <= n; ++k) second[k] = UniPoly::monomial(sq.coeff(k), n - k, "s");
  UniPoly phi = resultant_x(first, second, "s");
  for (const auto& part : factor_rationals(phi).parts)
    if (part.factor.degree() != Degree(1)) return false;
  return true;
}

inline bool ratio_all_rational(const ResiduePolynomial& rp) { return ratio_all_rational(rp.rho); }

}  // namespace orthoscope
