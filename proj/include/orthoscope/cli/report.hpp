#pragma once

#include <chrono>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "orthoscope/cli/parser.hpp"

namespace orthoscope {

/// An identity `scaling·target = dlog(h)` or `target = h'`, kept with its
/// ingredients so it can be checked again when the report is emitted.
struct WitnessRecord {
  enum class Kind { dlog, derivative } kind;
  RatFunc target;
  RatFunc h;
  Integer scaling = 1;
  std::string target_text;  // as the user would write it, e.g. (g - beta)/f unreduced

  bool verify() const {
    if (kind == Kind::dlog) return verify_dlog_witness(target, DlogWitness{h, scaling});
    return verify_derivative_witness(target, h);
  }
  std::string identity() const {
    if (kind == Kind::derivative) return target_text + " = (" + h.to_string() + ")'";
    std::string lhs = scaling == 1 ? target_text : scaling.get_str() + "*" + target_text;
    return lhs + " = dlog(" + h.to_string() + ")";
  }
};

struct Report {
  std::string command;
  std::string shape;
  std::string input;  // canonical serialization of the parsed source
  std::string verdict;
  std::optional<OrthogonalityVerdict> base;
  std::optional<BetaSearchResult> search;
  std::optional<InternalityKind> internality_kind;
  std::optional<WitnessRecord> witness;
  PoleSpectrum residues;
  std::vector<std::pair<std::string, std::string>> facts;
  std::vector<std::string> notes;
  double elapsed_ms = 0;
};

struct RunOptions {
  ResidueClass residue_class = ResidueClass::rational;
  std::optional<std::string> with;  // second vector field for bracket
  std::optional<std::string> h;     // function for dlog-sys
};

inline const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"classify", "base",    "beta-log",  "beta-der",
                                                  "residues", "is-dlog", "is-derivative", "bracket",
                                                  "linearize", "lift",   "dlog-sys"};
  return names;
}

namespace detail {

inline std::string paren(const std::string& s) {
  bool bare = s.find(' ') == std::string::npos && s.find('/') == std::string::npos;
  return bare ? s : "(" + s + ")";
}

inline std::string quotient_text(const RatFunc& num, const RatFunc& den) {
  if (den.is_constant() && den.num().coeff(0) == 1) return num.to_string();
  return paren(num.to_string()) + "/" + paren(den.to_string());
}

inline void attach_search(Report& rep, const BetaSearchResult& s, const RatFunc& f, const RatFunc& g) {
  rep.search = s;
  rep.residues = s.residue_table;
  for (const auto& n : s.notes) rep.notes.push_back(n);
  if (s.status != SearchStatus::found) return;
  RatFunc num = g - RatFunc::constant(*s.beta);
  WitnessRecord w;
  w.target = num / f;
  w.target_text = quotient_text(num, f);
  if (s.dlog_witness) {
    w.kind = WitnessRecord::Kind::dlog;
    w.h = s.dlog_witness->h;
    w.scaling = s.dlog_witness->scaling;
  } else {
    w.kind = WitnessRecord::Kind::derivative;
    w.h = *s.derivative_witness;
  }
  rep.witness = w;
}

inline std::string conclusion_sentence(Conclusion c) {
  switch (c) {
    case Conclusion::orthogonal_to_constants:
      return "The generic solution is orthogonal to the constants.";
    case Conclusion::nonorthogonal_uniformly_almost_internal:
      return "The system is not orthogonal to the constants: the fibration is uniformly internal to the constants over an orthogonal base.";
    case Conclusion::base_nonorthogonal_criterion_inapplicable:
      return "The base equation x' = f(x) is itself nonorthogonal to the constants, so the fibration criterion does not apply.";
    case Conclusion::inconclusive:
      return "Undecided: only conjugate-coupled residue conditions remain and an irrational beta is not excluded.";
    case Conclusion::inconclusive_for_lift:
      return "The linearized fibration is uniformly internal, so the lifting test gives no conclusion about the full system.";
  }
  return "";
}

inline void attach_system(Report& rep, const SystemVerdict& v, const RatFunc& f, const RatFunc& g) {
  rep.verdict = to_string(v.conclusion);
  rep.base = v.base;
  rep.internality_kind = v.internality_kind;
  attach_search(rep, v.fibration, f, g);
}

[[noreturn]] inline void shape_mismatch(const std::string& command, const ParsedSystem& p, const std::string& wanted,
                                        const std::string& hint) {
  throw ShapeError("command '" + command + "' needs " + wanted + ", but the input is a " + shape_name(p) + ". " + hint);
}

inline PlanarVectorField planar_or_throw(const std::string& command, const ParsedSystem& p) {
  if (auto pl = std::get_if<Planar>(&p)) return pl->v;
  shape_mismatch(command, p, "a planar system (x' = f(x,y); y' = g(x,y) with y in x')",
                 "For univariate families use 'classify', 'beta-log' or 'beta-der'.");
}

inline const UnivariateFamily& family_or_throw(const std::string& command, const ParsedSystem& p) {
  if (auto u = std::get_if<UnivariateFamily>(&p)) return *u;
  shape_mismatch(command, p, "a family x' = f(x); y' = y*g(x) or y' = g(x)",
                 std::holds_alternative<Planar>(p) ? "For planar systems use 'lift' or 'linearize'."
                                                   : "Write the system with both x' and y' statements.");
}

inline RatFunc function_or_throw(const std::string& command, const ParsedSystem& p) {
  if (auto fn = std::get_if<Function>(&p)) return fn->r;
  shape_mismatch(command, p, "a single expression in x", "Pass just the function, e.g. '1/(x^2 - x)'.");
}

inline void add_linearization_facts(Report& rep, const PlanarVectorField& v) {
  InvariantLineReport line = invariant_line(v);
  rep.facts.emplace_back("invariant line y = 0", line.invariant ? "yes" : "no");
  if (!line.invariant) return;
  rep.facts.emplace_back("g1", line.cofactor_g1->to_string());
  LinearizedSystem lin = linearize_along_line(v);
  rep.facts.emplace_back("E_lin", lin.as_vector_field().to_string());
  PlanarVectorField dy{BiPoly(), BiPoly::constant(1)};
  try {
    BiRatFunc c = foliation_linearize(v, dy).cofactor_c;
    rep.facts.emplace_back("tangent fiber", "z' = (" + c.to_string() + ")*z");
    BiRatFunc gauged = gauge_transform(v, c, BiRatFunc(BiPoly::y()));
    rep.facts.emplace_back("gauge by h = y", "w' = (" + gauged.to_string() + ")*w");
    rep.notes.push_back("dlog of y along the system is " + system_dlog(v, BiRatFunc(BiPoly::y())).to_string() +
                        "; the transformed tangent cofactor is " + gauged.to_string());
  } catch (const DomainError&) {
    rep.notes.push_back("[dy, v] is not a multiple of dy; no tangent fiber equation along the vertical foliation");
  }
}

}  // namespace detail

/// Dispatches a command on a parsed source.
inline Report run(const std::string& command, const SystemSource& source, const RunOptions& opt = {}) {
  auto start = std::chrono::steady_clock::now();
  Report rep;
  rep.command = command;
  rep.shape = shape_name(source.parsed);
  rep.input = serialize(source.parsed);
  const ParsedSystem& p = source.parsed;

  if (command == "classify") {
    if (std::holds_alternative<Planar>(p)) {
      PlanarVectorField v = std::get<Planar>(p).v;
      LinearizedSystem lin = linearize_along_line(v);
      detail::attach_system(rep, classify_invariant_line_lift(v), lin.base_f0, lin.fiber_hZ);
      rep.notes.push_back("planar input: classified by the invariant-line lifting test");
    } else {
      const UnivariateFamily& u = detail::family_or_throw(command, p);
      SystemVerdict v = u.kind == FamilyKind::log ? classify_log_family(u.f, u.g) : classify_derivative_family(u.f, u.g);
      detail::attach_system(rep, v, u.f, u.g);
    }
  } else if (command == "base") {
    RatFunc f = std::holds_alternative<Function>(p) ? std::get<Function>(p).r : detail::family_or_throw(command, p).f;
    rep.base = base_orthogonal(f);
    rep.verdict = rep.base->orthogonal ? "orthogonal" : "nonorthogonal";
    rep.residues = rep.base->spectrum;
  } else if (command == "beta-log" || command == "beta-der") {
    const UnivariateFamily& u = detail::family_or_throw(command, p);
    BetaSearchResult s = command == "beta-log" ? beta_search_log(u.f, u.g, opt.residue_class)
                                               : beta_search_derivative(u.f, u.g);
    rep.verdict = to_string(s.status);
    detail::attach_search(rep, s, u.f, u.g);
  } else if (command == "residues") {
    RatFunc r;
    if (std::holds_alternative<Function>(p)) {
      r = std::get<Function>(p).r;
    } else {
      r = RatFunc::constant(1) / detail::family_or_throw(command, p).f;
      rep.notes.push_back("residues of 1/f dx for the base equation");
    }
    rep.residues = pole_spectrum(r, true);
    rep.verdict = "residues";
  } else if (command == "is-dlog") {
    RatFunc r = detail::function_or_throw(command, p);
    DlogWitnessOutcome out = dlog_witness(r, opt.residue_class);
    rep.residues = out.spectrum;
    if (out.witness) {
      rep.verdict = "dlog";
      rep.witness = WitnessRecord{WitnessRecord::Kind::dlog, r, out.witness->h, out.witness->scaling,
                                  detail::paren(r.to_string())};
    } else {
      rep.verdict = "not-dlog";
      rep.notes.push_back("reason: " + to_string(*out.reason));
    }
  } else if (command == "is-derivative") {
    RatFunc r = detail::function_or_throw(command, p);
    HermiteDecomposition hd = hermite_reduce(r);
    rep.residues = pole_spectrum(r, true);
    if (hd.remainder.is_zero()) {
      rep.verdict = "derivative";
      rep.witness = WitnessRecord{WitnessRecord::Kind::derivative, r, hd.derivative_part, 1, detail::paren(r.to_string())};
    } else {
      rep.verdict = "not-derivative";
      rep.facts.emplace_back("hermite remainder", hd.remainder.to_string());
    }
  } else if (command == "bracket") {
    PlanarVectorField v = detail::planar_or_throw(command, p);
    PlanarVectorField w{BiPoly(), BiPoly::constant(1)};
    if (opt.with) {
      SystemSource ws = parse_system(*opt.with);
      if (auto pl = std::get_if<Planar>(&ws.parsed)) w = pl->v;
      else if (auto u = std::get_if<UnivariateFamily>(&ws.parsed); u && u->f.is_polynomial() && u->g.is_polynomial())
        w = {BiPoly::from_uni(u->f.num()),
             u->kind == FamilyKind::log ? BiPoly::y() * BiPoly::from_uni(u->g.num()) : BiPoly::from_uni(u->g.num())};
      else throw ShapeError("--with needs a polynomial vector field");
    }
    PlanarVectorField b = lie_bracket(v, w);
    rep.verdict = "bracket";
    rep.facts.emplace_back("w", w.to_string());
    rep.facts.emplace_back("[v,w]", b.to_string());
    try {
      rep.facts.emplace_back("[w,v] = c*w, c", foliation_linearize(v, w).cofactor_c.to_string());
    } catch (const DomainError&) {
      rep.notes.push_back("[w,v] is not a multiple of w");
    }
    rep.notes.push_back("convention: [v,w] = (v.grad)w - (w.grad)v");
  } else if (command == "linearize") {
    PlanarVectorField v = detail::planar_or_throw(command, p);
    rep.verdict = "linearized";
    detail::add_linearization_facts(rep, v);
  } else if (command == "lift") {
    PlanarVectorField v = detail::planar_or_throw(command, p);
    LinearizedSystem lin = linearize_along_line(v);
    detail::attach_system(rep, classify_invariant_line_lift(v), lin.base_f0, lin.fiber_hZ);
    rep.facts.emplace_back("E_lin", lin.as_vector_field().to_string());
  } else if (command == "dlog-sys") {
    PlanarVectorField v = detail::planar_or_throw(command, p);
    BiRatFunc h = BiRatFunc(BiPoly::y());
    if (opt.h) {
      detail::Parser hp(*opt.h);
      h = hp.single_expression();
    }
    rep.verdict = "dlog-sys";
    rep.facts.emplace_back("h", h.to_string());
    rep.facts.emplace_back("dlog(h)", system_dlog(v, h).to_string());
  } else {
    throw ShapeError("unknown command '" + command + "'");
  }
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

namespace detail {

inline nlohmann::ordered_json residues_json(const PoleSpectrum& s) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& p : s.affine)
    arr.push_back({{"locus", p.locus.to_string()},
                   {"multiplicity", p.multiplicity},
                   {"residue", residue_to_string(p.residue)}});
  if (s.infinity)
    arr.push_back({{"locus", "infinity"},
                   {"multiplicity", s.infinity->multiplicity},
                   {"residue", s.infinity->residue.get_str()}});
  return arr;
}

inline void check_witness(const Report& rep) {
  if (rep.witness && !rep.witness->verify())
    throw InconsistencyError("witness failed verification at emission: " + rep.witness->identity());
}

inline std::string residues_text(const PoleSpectrum& s) {
  if (s.empty()) return "  (no poles)\n";
  std::ostringstream os;
  for (const auto& p : s.affine) {
    os << "  " << p.locus.to_string() << "  multiplicity " << p.multiplicity << "  residue "
       << residue_to_string(p.residue);
    if (!residue_is_rational(p.residue)) {
      // Decimal hint at one root of the locus, for orientation only.
      UniPoly q = p.locus;
      std::complex<double> z = 1.0;
      for (int it = 0; it < 200; ++it) {
        std::complex<double> d = q.derivative().eval(z);
        if (std::abs(d) < 1e-300) break;
        z -= q.eval(z) / d;
      }
      auto approx = std::get<NumberFieldElement>(p.residue).approximate_at(z);
      os << "  (approx. " << approx.real();
      if (std::abs(approx.imag()) > 1e-12) os << (approx.imag() < 0 ? " - " : " + ") << std::abs(approx.imag()) << "i";
      os << " at one root)";
    }
    os << "\n";
  }
  if (s.infinity)
    os << "  infinity  multiplicity " << s.infinity->multiplicity << "  residue " << s.infinity->residue.get_str()
       << "\n";
  return os.str();
}

}  // namespace detail

inline std::string emit_json(const Report& rep) {
  detail::check_witness(rep);
  nlohmann::ordered_json j;
  j["command"] = rep.command;
  j["input"] = rep.input;
  j["verdict"] = rep.verdict;
  if (rep.base) {
    j["base"] = {{"orthogonal", rep.base->orthogonal},
                 {"evidence", to_string(rep.base->evidence)},
                 {"residues", detail::residues_json(rep.base->spectrum)}};
  } else {
    j["base"] = nullptr;
  }
  j["beta"] = rep.search && rep.search->beta ? nlohmann::ordered_json(rep.search->beta->get_str()) : nullptr;
  if (rep.witness) {
    j["witness"] = {{"kind", rep.witness->kind == WitnessRecord::Kind::dlog ? "dlog" : "derivative"},
                    {"h", rep.witness->h.to_string()},
                    {"scaling", rep.witness->scaling.get_si()},
                    {"identity", rep.witness->identity()}};
  } else {
    j["witness"] = nullptr;
  }
  j["residues"] = detail::residues_json(rep.residues);
  j["completeness_case"] =
      rep.search ? nlohmann::ordered_json(to_string(rep.search->completeness_case)) : nlohmann::ordered_json(nullptr);
  j["internality_kind"] =
      rep.internality_kind ? nlohmann::ordered_json(to_string(*rep.internality_kind)) : nlohmann::ordered_json(nullptr);
  auto facts = nlohmann::ordered_json::array();
  for (const auto& [k, v] : rep.facts) facts.push_back({{"name", k}, {"value", v}});
  j["facts"] = facts;
  j["notes"] = rep.notes;
  return j.dump(2);
}

/// `details` adds the residue tables, the witness identity and the facts.
inline std::string emit_text(const Report& rep, bool details = true) {
  detail::check_witness(rep);
  std::ostringstream os;
  os << "input: " << rep.input << "  [" << rep.shape << "]\n";
  os << "verdict: " << rep.verdict << "\n";
  for (Conclusion c : {Conclusion::orthogonal_to_constants, Conclusion::nonorthogonal_uniformly_almost_internal,
                       Conclusion::base_nonorthogonal_criterion_inapplicable, Conclusion::inconclusive,
                       Conclusion::inconclusive_for_lift})
    if (rep.verdict == to_string(c)) os << detail::conclusion_sentence(c) << "\n";
  if (rep.base) {
    os << "base: " << (rep.base->orthogonal ? "orthogonal" : "nonorthogonal") << " ("
       << to_string(rep.base->evidence) << ")\n";
    if (details) os << "poles of dx/f:\n" << detail::residues_text(rep.base->spectrum);
  }
  if (rep.search) {
    os << "beta search: " << to_string(rep.search->status) << ", case " << to_string(rep.search->completeness_case);
    if (rep.search->beta) os << ", beta = " << rep.search->beta->get_str();
    os << "\n";
  }
  if (rep.internality_kind) os << "internality: " << to_string(*rep.internality_kind) << "\n";
  if (rep.witness) os << "witness: " << rep.witness->identity() << "  (verified exactly)\n";
  if (details && (!rep.residues.empty() || rep.command == "residues"))
    os << "residue table:\n" << detail::residues_text(rep.residues);
  for (const auto& [k, v] : rep.facts) os << k << ": " << v << "\n";
  for (const auto& n : rep.notes) os << "note: " << n << "\n";
  os << "time: " << rep.elapsed_ms << " ms\n";
  return os.str();
}

enum class Format { text, json };

inline std::string emit(const Report& rep, Format fmt, bool details = true) {
  return fmt == Format::json ? emit_json(rep) : emit_text(rep, details);
}

/// Process exit status for an error escaping a command: 2 parse, 3 shape or
/// hypothesis, 4 a witness that failed its identity, 1 anything else.
inline int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return 2;
  if (dynamic_cast<const InconsistencyError*>(&e)) return 4;
  if (dynamic_cast<const ShapeError*>(&e) || dynamic_cast<const DomainError*>(&e)) return 3;
  return 1;
}

inline const char* error_label(const std::exception& e) {
  switch (exit_code_for(e)) {
    case 2: return "parse error";
    case 3: return "shape error";
    case 4: return "internal inconsistency";
    default: return "error";
  }
}

}  // namespace orthoscope
