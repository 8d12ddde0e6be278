#pragma once

#include <map>
#include <optional>
#include <string>

#include "orthoscope/ratfunc/residues.hpp"

namespace orthoscope {

enum class ResidueClass { integer, rational };

inline std::string to_string(ResidueClass c) { return c == ResidueClass::integer ? "integer" : "rational"; }

/// scaling · (witnessed function) = dlog(h), scaling > 0.
struct DlogWitness {
  RatFunc h;
  Integer scaling;
};

enum class NoWitnessReason { multiple_pole, non_class_residue, improper_at_infinity };

inline std::string to_string(NoWitnessReason r) {
  switch (r) {
    case NoWitnessReason::multiple_pole: return "multiple pole";
    case NoWitnessReason::non_class_residue: return "non-class residue";
    case NoWitnessReason::improper_at_infinity: return "improper at infinity";
  }
  return "";
}

struct DlogWitnessOutcome {
  std::optional<DlogWitness> witness;
  std::optional<NoWitnessReason> reason;  // set exactly when witness is empty
  PoleSpectrum spectrum;

  explicit operator bool() const { return witness.has_value(); }
};

/// Independent check of N·r = dlog(h).
inline bool verify_dlog_witness(const RatFunc& r, const DlogWitness& w) {
  if (w.scaling <= 0 || w.h.is_zero()) return false;
  return dlog(w.h) == r * Rational(w.scaling);
}

/// Independent check of r = h'.
inline bool verify_derivative_witness(const RatFunc& r, const RatFunc& h) { return h.derivative() == r; }

/// Decides whether N·r is a logarithmic derivative, with N = 1 for the integer
/// class and N = lcm of residue denominators for the rational class. Success
/// requires only simple poles on P^1 with residues in the class; the returned
/// h = ∏ gcd(d, n − m·d')^m over the distinct integer residues m of N·r.
inline DlogWitnessOutcome dlog_witness(const RatFunc& r, ResidueClass cls) {
  DlogWitnessOutcome out;
  out.spectrum = pole_spectrum(r, true);
  if (r.is_zero()) {
    out.witness = DlogWitness{RatFunc::constant(1), 1};
    return out;
  }
  if (out.spectrum.infinity && out.spectrum.infinity->multiplicity >= 2) {
    out.reason = NoWitnessReason::improper_at_infinity;
    return out;
  }
  for (const auto& p : out.spectrum.affine)
    if (p.multiplicity >= 2) {
      out.reason = NoWitnessReason::multiple_pole;
      return out;
    }

  Integer scaling = 1;
  for (const auto& p : out.spectrum.affine) {
    if (!residue_is_rational(p.residue)) {
      out.reason = NoWitnessReason::non_class_residue;
      return out;
    }
    scaling = lcm(scaling, residue_rational(p.residue).get_den());
  }
  if (out.spectrum.infinity) scaling = lcm(scaling, out.spectrum.infinity->residue.get_den());
  if (cls == ResidueClass::integer && scaling != 1) {
    out.reason = NoWitnessReason::non_class_residue;
    return out;
  }

  // Group loci by their (scaled, integer) residue.
  const UniPoly& n = r.num();
  const UniPoly& d = r.den();
  std::map<Rational, bool> seen;
  RatFunc h = RatFunc::constant(1);
  for (const auto& p : out.spectrum.affine) {
    Rational m = residue_rational(p.residue) * Rational(scaling);
    if (seen[m]) continue;
    seen[m] = true;
    UniPoly gk = poly_gcd(d, n * Rational(scaling) - d.derivative() * m);
    h *= RatFunc(gk).pow(static_cast<int>(m.get_num().get_si()));
  }
  DlogWitness w{h, scaling};
  if (!verify_dlog_witness(r, w))
    throw InconsistencyError("dlog witness failed verification for " + r.to_string());
  out.witness = w;
  return out;
}

}  // namespace orthoscope
