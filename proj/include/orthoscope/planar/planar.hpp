#pragma once

#include <optional>
#include <string>

#include "orthoscope/criteria/criteria.hpp"
#include "orthoscope/planar/biratfunc.hpp"

namespace orthoscope {

/// v = fx ∂/∂x + fy ∂/∂y with polynomial coefficients.
struct PlanarVectorField {
  BiPoly fx;
  BiPoly fy;

  friend bool operator==(const PlanarVectorField&, const PlanarVectorField&) = default;

  bool is_zero() const { return fx.is_zero() && fy.is_zero(); }

  /// v applied to a polynomial.
  BiPoly apply(const BiPoly& p) const { return fx * p.partial(Var::x) + fy * p.partial(Var::y); }

  std::string to_string() const { return "x' = " + fx.to_string() + "; y' = " + fy.to_string(); }
};

inline PlanarVectorField operator-(const PlanarVectorField& v) { return {-v.fx, -v.fy}; }
inline PlanarVectorField operator+(const PlanarVectorField& a, const PlanarVectorField& b) {
  return {a.fx + b.fx, a.fy + b.fy};
}

/// [v, w] = (v·∇)w − (w·∇)v. Some texts use the opposite sign.
inline PlanarVectorField lie_bracket(const PlanarVectorField& v, const PlanarVectorField& w) {
  return {v.apply(w.fx) - w.apply(v.fx), v.apply(w.fy) - w.apply(v.fy)};
}

struct InvariantLineReport {
  bool invariant = false;
  std::optional<BiPoly> cofactor_g1;  // fy = y·g1
};

/// Whether y = 0 is invariant, i.e. y divides fy.
inline InvariantLineReport invariant_line(const PlanarVectorField& v) {
  InvariantLineReport rep;
  BiPoly::Terms shifted;
  for (const auto& [e, c] : v.fy.terms()) {
    if (e.second == 0) return rep;
    shifted.emplace(BiPoly::Exponent{e.first, e.second - 1}, c);
  }
  rep.invariant = true;
  rep.cofactor_g1 = BiPoly(std::move(shifted));
  return rep;
}

/// x' = f(x,0), y' = y·g1(x,0): the linear system on the normal bundle of y = 0.
struct LinearizedSystem {
  UniPoly base_f0;
  UniPoly fiber_hZ;

  PlanarVectorField as_vector_field() const {
    return {BiPoly::from_uni(base_f0), BiPoly::y() * BiPoly::from_uni(fiber_hZ)};
  }
};

inline LinearizedSystem linearize_along_line(const PlanarVectorField& v) {
  InvariantLineReport rep = invariant_line(v);
  if (!rep.invariant) throw ShapeError("the line y = 0 is not invariant: y does not divide y' = " + v.fy.to_string());
  LinearizedSystem lin{v.fx.at_y_zero(), rep.cofactor_g1->at_y_zero()};
  if (lin.base_f0.is_zero()) throw ShapeError("f(x,0) is identically zero");
  return lin;
}

/// δ(h) = fx·∂h/∂x + fy·∂h/∂y.
inline BiRatFunc system_derivative(const PlanarVectorField& v, const BiRatFunc& h) {
  return BiRatFunc(v.fx) * h.partial(Var::x) + BiRatFunc(v.fy) * h.partial(Var::y);
}

inline BiRatFunc system_dlog(const PlanarVectorField& v, const BiRatFunc& h) {
  if (h.is_zero()) throw DomainError("logarithmic derivative of zero");
  return system_derivative(v, h) / h;
}

/// [w, v] = c·w.
struct FoliationLinearization {
  BiRatFunc cofactor_c;
};

inline FoliationLinearization foliation_linearize(const PlanarVectorField& v, const PlanarVectorField& w) {
  if (w.is_zero()) throw DomainError("foliation_linearize: w is zero");
  PlanarVectorField b = lie_bracket(w, v);
  BiRatFunc c = !w.fx.is_zero() ? BiRatFunc::normalize(b.fx, w.fx) : BiRatFunc::normalize(b.fy, w.fy);
  if (!(c * BiRatFunc(w.fx) == BiRatFunc(b.fx)) || !(c * BiRatFunc(w.fy) == BiRatFunc(b.fy)))
    throw DomainError("[w, v] is not a multiple of w");
  return {c};
}

/// Exact check of k·a = c + dlog_δ(h).
inline bool verify_gauge_identity(const PlanarVectorField& v, const BiRatFunc& a, const BiRatFunc& h,
                                  const Rational& c, const Integer& k) {
  if (h.is_zero()) throw DomainError("verify_gauge_identity: h is zero");
  if (k == 0) throw DomainError("verify_gauge_identity: k is zero");
  return a * Rational(k) == BiRatFunc::constant(c) + system_dlog(v, h);
}

/// Cofactor of the rank-one equation w' = a·w after w ↦ w/h.
inline BiRatFunc gauge_transform(const PlanarVectorField& v, const BiRatFunc& a, const BiRatFunc& h) {
  return a - system_dlog(v, h);
}

/// v in the coordinates X = a·x + b, Y = u·y.
inline PlanarVectorField transform_affine(const PlanarVectorField& v, const Rational& a, const Rational& b,
                                          const Rational& u) {
  if (a == 0 || u == 0) throw DomainError("degenerate coordinate change");
  BiPoly sx = BiPoly::x() * (1 / a) - BiPoly::constant(b / a);
  BiPoly sy = BiPoly::y() * (1 / u);
  return {v.fx.substitute(sx, sy) * a, v.fy.substitute(sx, sy) * u};
}

/// Invariant-line lifting test: hypotheses (i) base orthogonality of f(x,0) and
/// (ii) no beta making (g1(x,0) − beta)/f(x,0) a rational-residue dlog. Both
/// holding gives orthogonality of the generic type; (ii) failing says nothing
/// about the total space.
inline SystemVerdict classify_invariant_line_lift(const PlanarVectorField& v) {
  LinearizedSystem lin = linearize_along_line(v);
  SystemVerdict verdict;
  verdict.base = base_orthogonal(lin.base_f0);
  verdict.fibration = beta_search_log(lin.base_f0, lin.fiber_hZ, ResidueClass::rational);
  if (!verdict.base.orthogonal) {
    verdict.conclusion = Conclusion::base_nonorthogonal_criterion_inapplicable;
    return verdict;
  }
  switch (verdict.fibration.status) {
    case SearchStatus::none: verdict.conclusion = Conclusion::orthogonal_to_constants; break;
    case SearchStatus::found: verdict.conclusion = Conclusion::inconclusive_for_lift; break;
    case SearchStatus::inconclusive: verdict.conclusion = Conclusion::inconclusive; break;
  }
  return verdict;
}

}  // namespace orthoscope
