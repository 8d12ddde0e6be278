#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orthoscope/ratfunc/dlog_witness.hpp"

namespace orthoscope {

// ---------------------------------------------------------------------------
// Verdict types

enum class OrthogonalityEvidence {
  multiple_and_simple_pole,
  irrational_residue_ratio,
  rational_residue_ratios,
  only_multiple_poles,
  degenerate_low_degree,
};

inline std::string to_string(OrthogonalityEvidence e) {
  switch (e) {
    case OrthogonalityEvidence::multiple_and_simple_pole: return "multiple-and-simple-pole";
    case OrthogonalityEvidence::irrational_residue_ratio: return "irrational-residue-ratio";
    case OrthogonalityEvidence::rational_residue_ratios: return "rational-residue-ratios";
    case OrthogonalityEvidence::only_multiple_poles: return "only-multiple-poles";
    case OrthogonalityEvidence::degenerate_low_degree: return "degenerate-low-degree";
  }
  return "";
}

/// Rosenlicht-style verdict on x' = f(x), read off the poles of dx/f.
struct OrthogonalityVerdict {
  bool orthogonal = false;
  OrthogonalityEvidence evidence = OrthogonalityEvidence::degenerate_low_degree;
  PoleSpectrum spectrum;  // of 1/f, projective
};

enum class SearchStatus { found, none, inconclusive };

inline std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::none: return "none";
    case SearchStatus::inconclusive: return "inconclusive";
  }
  return "";
}

/// How a beta search reached its answer.
///  A: beta pinned (or refuted) by conditions affine in beta over Q coming
///     from the multiple poles, so the answer is complete over C.
///  B: beta free of those conditions and forced rational by a residue anchor;
///     the Q-linear residue system decides completely.
///  C: only conjugate-coupled residue conditions remain; an irrational beta is
///     not excluded and the search does not decide.
enum class CompletenessCase { A, B, C };

inline std::string to_string(CompletenessCase c) {
  switch (c) {
    case CompletenessCase::A: return "A";
    case CompletenessCase::B: return "B";
    case CompletenessCase::C: return "C";
  }
  return "";
}

struct BetaSearchResult {
  SearchStatus status = SearchStatus::none;
  std::optional<Rational> beta;
  std::optional<DlogWitness> dlog_witness;      // log family
  std::optional<RatFunc> derivative_witness;    // derivative family: (g-beta)/f = h'
  CompletenessCase completeness_case = CompletenessCase::A;
  PoleSpectrum residue_table;  // of (g-beta)/f at the returned beta
  std::vector<std::string> notes;
};

enum class Conclusion {
  orthogonal_to_constants,
  nonorthogonal_uniformly_almost_internal,
  base_nonorthogonal_criterion_inapplicable,
  inconclusive,
  inconclusive_for_lift,
};

inline std::string to_string(Conclusion c) {
  switch (c) {
    case Conclusion::orthogonal_to_constants: return "orthogonal-to-constants";
    case Conclusion::nonorthogonal_uniformly_almost_internal: return "nonorthogonal-uniformly-almost-internal";
    case Conclusion::base_nonorthogonal_criterion_inapplicable: return "base-nonorthogonal-criterion-inapplicable";
    case Conclusion::inconclusive: return "inconclusive";
    case Conclusion::inconclusive_for_lift: return "inconclusive-for-lift";
  }
  return "";
}

enum class InternalityKind { internal, almost };

inline std::string to_string(InternalityKind k) { return k == InternalityKind::internal ? "internal" : "almost"; }

struct SystemVerdict {
  OrthogonalityVerdict base;
  BetaSearchResult fibration;
  Conclusion conclusion = Conclusion::inconclusive;
  std::optional<InternalityKind> internality_kind;
};

// ---------------------------------------------------------------------------
// Base orthogonality

inline OrthogonalityVerdict base_orthogonal(const RatFunc& f) {
  if (f.is_zero()) throw DomainError("base_orthogonal: f is zero");
  RatFunc inv = RatFunc::constant(1) / f;
  OrthogonalityVerdict v;
  v.spectrum = pole_spectrum(inv, true);
  if (f.is_polynomial() && f.num().size() <= 2) {
    v.orthogonal = false;
    v.evidence = OrthogonalityEvidence::degenerate_low_degree;
    return v;
  }
  const bool simple = v.spectrum.has_simple(), multiple = v.spectrum.has_multiple();
  if (simple && multiple) {
    v.orthogonal = true;
    v.evidence = OrthogonalityEvidence::multiple_and_simple_pole;
    return v;
  }
  if (!simple) {
    v.orthogonal = false;
    v.evidence = OrthogonalityEvidence::only_multiple_poles;
    return v;
  }
  UniPoly rho = residue_polynomial(inv).rho;
  if (v.spectrum.infinity) rho *= UniPoly({-v.spectrum.infinity->residue, 1}, "t");
  bool rational = ratio_all_rational(rho);
  v.orthogonal = !rational;
  v.evidence = rational ? OrthogonalityEvidence::rational_residue_ratios
                        : OrthogonalityEvidence::irrational_residue_ratio;
  return v;
}

// ---------------------------------------------------------------------------
// Beta searches

namespace detail {

/// Equations a_i − beta·b_i = 0 over Q in the single unknown beta.
class AffineBetaSystem {
 public:
  enum class Kind { free, pinned, empty };

  void add(const Rational& a, const Rational& b) {
    if (a != 0 || b != 0) eqs_.emplace_back(a, b);
  }
  /// Coefficientwise p − beta·q = 0.
  void add(const UniPoly& p, const UniPoly& q) {
    for (std::size_t k = 0; k < std::max(p.size(), q.size()); ++k) add(p.coeff(k), q.coeff(k));
  }
  /// P − beta·Q = 0 for rational functions, by cross-multiplication.
  void add(const RatFunc& p, const RatFunc& q) { add(p.num() * q.den(), q.num() * p.den()); }

  std::pair<Kind, Rational> solve() const {
    std::optional<Rational> beta;
    for (const auto& [a, b] : eqs_)
      if (b != 0) {
        beta = a / b;
        break;
      }
    if (!beta) return {eqs_.empty() ? Kind::free : Kind::empty, 0};
    for (const auto& [a, b] : eqs_)
      if (a != *beta * b) return {Kind::empty, 0};
    return {Kind::pinned, *beta};
  }

 private:
  std::vector<std::pair<Rational, Rational>> eqs_;
};

inline NumberFieldElement residue_element(const RatFunc& r, const UniPoly& locus) {
  if (r.is_zero() || !locus.divides(r.den())) return NumberFieldElement::rational(locus, 0);
  Residue res = simple_pole_residue(r.num(), r.den(), locus);
  if (auto q = std::get_if<Rational>(&res)) return NumberFieldElement::rational(locus, *q);
  return std::get<NumberFieldElement>(res);
}

/// Smallest-|n| search for beta = (a0 − n)/b0 with a_q − beta·b_q integral for
/// every pair; the integrality pattern is periodic in n with the lcm of the
/// denominators of b_q/b0.
inline std::optional<Rational> integral_beta(const std::vector<std::pair<Rational, Rational>>& ab) {
  const std::pair<Rational, Rational>* anchor = nullptr;
  for (const auto& p : ab)
    if (p.second != 0) {
      anchor = &p;
      break;
    }
  if (!anchor) {
    for (const auto& [a, b] : ab)
      if (!is_integer(a)) return std::nullopt;
    return Rational(0);
  }
  Integer period = 1;
  for (const auto& [a, b] : ab) period = lcm(period, Rational(b / anchor->second).get_den());
  for (Integer n = 0; n < period; ++n) {
    Rational beta = (anchor->first - Rational(n)) / anchor->second;
    bool ok = true;
    for (const auto& [a, b] : ab)
      if (!is_integer(Rational(a - beta * b))) {
        ok = false;
        break;
      }
    if (ok) return beta;
  }
  return std::nullopt;
}

inline void finish_found(BetaSearchResult& res, const RatFunc& A, const RatFunc& B, const Rational& beta,
                         const DlogWitness& w) {
  res.status = SearchStatus::found;
  res.beta = beta;
  res.dlog_witness = w;
  RatFunc F = A - B * beta;
  res.residue_table = pole_spectrum(F, true);
  if (!verify_dlog_witness(F, w))
    throw InconsistencyError("beta search produced an unverified dlog witness");
}

}  // namespace detail

/// Decides whether some beta makes (g − beta)/f have, on P^1, only simple
/// poles with residues in `cls`. (g − beta)/f = A − beta·B with A = g/f and
/// B = 1/f, and Hermite reduction is linear, so the no-multiple-pole
/// conditions (vanishing polynomial part and vanishing proper part of the
/// Hermite derivative part) are affine in beta over Q.
inline BetaSearchResult beta_search_log(const RatFunc& f, const RatFunc& g, ResidueClass cls) {
  if (f.is_zero()) throw DomainError("beta_search_log: f is zero");
  const RatFunc B = RatFunc::constant(1) / f;
  const RatFunc A = g * B;
  BetaSearchResult res;

  HermiteDecomposition hA = hermite_reduce(A), hB = hermite_reduce(B);
  detail::AffineBetaSystem multiple;
  multiple.add(A.polynomial_part(), B.polynomial_part());
  multiple.add(hA.derivative_part.proper_part(), hB.derivative_part.proper_part());
  auto [kind, beta] = multiple.solve();

  if (kind != detail::AffineBetaSystem::Kind::free) {
    res.completeness_case = CompletenessCase::A;
    if (kind == detail::AffineBetaSystem::Kind::empty) {
      res.status = SearchStatus::none;
      res.notes.push_back("no beta removes every multiple pole");
      return res;
    }
    RatFunc F = A - B * beta;
    DlogWitnessOutcome w = dlog_witness(F, cls);
    if (w.witness) {
      detail::finish_found(res, A, B, beta, *w.witness);
    } else {
      res.status = SearchStatus::none;
      res.beta = beta;
      res.residue_table = w.spectrum;
      res.notes.push_back("beta = " + beta.get_str() + " is forced by the multiple poles; residues fail: " +
                          to_string(*w.reason));
    }
    return res;
  }

  // Free case: A and B are proper with simple poles only.
  UniPoly loci_poly = lcm(A.den(), B.den());
  std::vector<std::pair<NumberFieldElement, NumberFieldElement>> data;
  bool forced_rational = false;
  detail::AffineBetaSystem rational_system;
  if (!loci_poly.is_constant()) {
    for (const auto& part : factor_rationals(loci_poly).parts) {
      NumberFieldElement a = detail::residue_element(A, part.factor);
      NumberFieldElement b = detail::residue_element(B, part.factor);
      if (b.trace() != 0) forced_rational = true;
      for (std::size_t k = 1; k < part.factor.size() - 1; ++k)
        rational_system.add(a.representative().coeff(k), b.representative().coeff(k));
      data.emplace_back(a, b);
    }
  }
  auto [rkind, rbeta] = rational_system.solve();
  res.completeness_case = forced_rational ? CompletenessCase::B : CompletenessCase::C;

  std::optional<Rational> candidate;
  if (rkind == detail::AffineBetaSystem::Kind::pinned) {
    candidate = rbeta;
  } else if (rkind == detail::AffineBetaSystem::Kind::free) {
    // All residues of A and B are rational: a_q − beta·b_q.
    if (cls == ResidueClass::rational) {
      candidate = Rational(0);
    } else {
      std::vector<std::pair<Rational, Rational>> ab;
      for (const auto& [a, b] : data) ab.emplace_back(a.to_rational(), b.to_rational());
      candidate = detail::integral_beta(ab);
    }
  }

  if (candidate) {
    RatFunc F = A - B * *candidate;
    DlogWitnessOutcome w = dlog_witness(F, cls);
    if (w.witness) {
      res.completeness_case = CompletenessCase::B;
      detail::finish_found(res, A, B, *candidate, *w.witness);
      return res;
    }
    res.residue_table = w.spectrum;
  }
  if (forced_rational) {
    res.status = SearchStatus::none;
    res.notes.push_back("beta is forced rational by a residue trace and the rational system has no solution");
  } else {
    res.status = SearchStatus::inconclusive;
    res.notes.push_back("only conjugate-coupled residue conditions remain; an irrational beta is not excluded");
  }
  return res;
}

/// Decides whether some beta makes (g − beta)/f the derivative of a rational
/// function: the Hermite remainder rem(A) − beta·rem(B) must vanish, a
/// Q-affine condition, so the decision is complete.
inline BetaSearchResult beta_search_derivative(const RatFunc& f, const RatFunc& g) {
  if (f.is_zero()) throw DomainError("beta_search_derivative: f is zero");
  const RatFunc B = RatFunc::constant(1) / f;
  const RatFunc A = g * B;
  HermiteDecomposition hA = hermite_reduce(A), hB = hermite_reduce(B);
  detail::AffineBetaSystem sys;
  sys.add(hA.remainder, hB.remainder);
  auto [kind, beta] = sys.solve();

  BetaSearchResult res;
  res.completeness_case =
      kind == detail::AffineBetaSystem::Kind::free ? CompletenessCase::B : CompletenessCase::A;
  if (kind == detail::AffineBetaSystem::Kind::empty) {
    res.status = SearchStatus::none;
    res.notes.push_back("no beta makes every residue vanish");
    return res;
  }
  RatFunc h = hA.derivative_part - hB.derivative_part * beta;
  RatFunc F = A - B * beta;
  if (!verify_derivative_witness(F, h))
    throw InconsistencyError("derivative witness failed verification for " + F.to_string());
  res.status = SearchStatus::found;
  res.beta = beta;
  res.derivative_witness = h;
  res.residue_table = pole_spectrum(F, true);
  return res;
}

// ---------------------------------------------------------------------------
// Family classifiers

/// y' = y·g(x), x' = f(x).
inline SystemVerdict classify_log_family(const RatFunc& f, const RatFunc& g) {
  SystemVerdict v;
  v.base = base_orthogonal(f);
  v.fibration = beta_search_log(f, g, ResidueClass::rational);
  if (!v.base.orthogonal) {
    v.conclusion = Conclusion::base_nonorthogonal_criterion_inapplicable;
    return v;
  }
  switch (v.fibration.status) {
    case SearchStatus::found:
      v.conclusion = Conclusion::nonorthogonal_uniformly_almost_internal;
      v.internality_kind = v.fibration.dlog_witness->scaling == 1 ? InternalityKind::internal : InternalityKind::almost;
      break;
    case SearchStatus::none: v.conclusion = Conclusion::orthogonal_to_constants; break;
    case SearchStatus::inconclusive: v.conclusion = Conclusion::inconclusive; break;
  }
  return v;
}

/// y' = g(x), x' = f(x).
inline SystemVerdict classify_derivative_family(const RatFunc& f, const RatFunc& g) {
  SystemVerdict v;
  v.base = base_orthogonal(f);
  v.fibration = beta_search_derivative(f, g);
  if (!v.base.orthogonal) {
    v.conclusion = Conclusion::base_nonorthogonal_criterion_inapplicable;
    return v;
  }
  if (v.fibration.status == SearchStatus::found) {
    v.conclusion = Conclusion::nonorthogonal_uniformly_almost_internal;
    v.internality_kind = InternalityKind::internal;
  } else {
    v.conclusion = Conclusion::orthogonal_to_constants;
  }
  return v;
}

}  // namespace orthoscope
