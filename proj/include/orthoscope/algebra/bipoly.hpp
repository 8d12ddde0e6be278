#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "orthoscope/algebra/unipoly.hpp"

namespace orthoscope {

enum class Var { x, y };

/// Sparse bivariate polynomial over Q in x and y. Keys are exponent pairs
/// (i, j) for x^i y^j; zero coefficients are never stored.
class BiPoly {
 public:
  using Exponent = std::pair<unsigned, unsigned>;
  using Terms = std::map<Exponent, Rational>;

  BiPoly() = default;
  explicit BiPoly(Terms terms) : terms_(std::move(terms)) {
    for (auto& [e, c] : terms_) c.canonicalize();
    prune();
  }

  static BiPoly constant(const Rational& c) { return term(c, 0, 0); }
  static BiPoly term(const Rational& c, unsigned i, unsigned j) {
    BiPoly p;
    if (c != 0) {
      p.terms_[{i, j}] = c;
      p.terms_[{i, j}].canonicalize();
    }
    return p;
  }
  static BiPoly x() { return term(1, 1, 0); }
  static BiPoly y() { return term(1, 0, 1); }

  /// Embeds a univariate polynomial as a polynomial in x (or y).
  static BiPoly from_uni(const UniPoly& p, Var v = Var::x) {
    BiPoly out;
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (p.coeff(k) == 0) continue;
      auto e = static_cast<unsigned>(k);
      out.terms_[v == Var::x ? Exponent{e, 0} : Exponent{0, e}] = p.coeff(k);
    }
    return out;
  }

  /// Inverse of coeffs_in_y: sum of coeffs[j](x) * y^j.
  static BiPoly from_coeffs_in_y(const std::vector<UniPoly>& coeffs) {
    BiPoly out;
    for (std::size_t j = 0; j < coeffs.size(); ++j)
      for (std::size_t i = 0; i < coeffs[j].size(); ++i)
        if (coeffs[j].coeff(i) != 0)
          out.terms_[{static_cast<unsigned>(i), static_cast<unsigned>(j)}] = coeffs[j].coeff(i);
    return out;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{0, 0}); }
  Rational constant_term() const {
    auto it = terms_.find({0, 0});
    return it == terms_.end() ? Rational(0) : it->second;
  }

  unsigned degree_in(Var v) const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, v == Var::x ? e.first : e.second);
    return d;
  }
  bool free_of(Var v) const { return degree_in(v) == 0; }

  friend bool operator==(const BiPoly&, const BiPoly&) = default;

  BiPoly operator-() const {
    BiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  BiPoly& operator+=(const BiPoly& o) {
    for (const auto& [e, c] : o.terms_) {
      auto [it, inserted] = terms_.try_emplace(e, c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
      }
    }
    return *this;
  }
  BiPoly& operator-=(const BiPoly& o) { return *this += -o; }
  BiPoly& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(BiPoly a, const Rational& s) { return a *= s; }
  friend BiPoly operator*(const Rational& s, BiPoly a) { return a *= s; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e{ea.first + eb.first, ea.second + eb.second};
        auto [it, inserted] = r.terms_.try_emplace(e, ca * cb);
        if (!inserted) it->second += ca * cb;
      }
    r.prune();
    return r;
  }
  BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }

  BiPoly pow(unsigned n) const {
    BiPoly r = constant(1), b = *this;
    while (n) {
      if (n & 1U) r *= b;
      n >>= 1U;
      if (n) b *= b;
    }
    return r;
  }

  /// Formal partial derivative.
  BiPoly partial(Var v) const {
    BiPoly r;
    for (const auto& [e, c] : terms_) {
      unsigned k = v == Var::x ? e.first : e.second;
      if (k == 0) continue;
      Exponent ne = v == Var::x ? Exponent{e.first - 1, e.second} : Exponent{e.first, e.second - 1};
      r.terms_[ne] = c * static_cast<unsigned long>(k);
    }
    return r;
  }

  /// Coefficients as a polynomial in y: entry j is the coefficient of y^j.
  std::vector<UniPoly> coeffs_in_y() const {
    std::vector<std::vector<Rational>> raw(degree_in(Var::y) + 1);
    for (const auto& [e, c] : terms_) {
      auto& row = raw[e.second];
      if (row.size() <= e.first) row.resize(e.first + 1);
      row[e.first] = c;
    }
    std::vector<UniPoly> out;
    out.reserve(raw.size());
    for (auto& r : raw) out.emplace_back(std::move(r), "x");
    if (is_zero()) out.clear();
    return out;
  }

  /// p(x, 0).
  UniPoly at_y_zero() const {
    std::vector<Rational> c;
    for (const auto& [e, v] : terms_) {
      if (e.second != 0) continue;
      if (c.size() <= e.first) c.resize(e.first + 1);
      c[e.first] = v;
    }
    return UniPoly(std::move(c), "x");
  }

  /// p as a univariate polynomial, valid only when free of the other variable.
  UniPoly to_uni(Var v = Var::x) const {
    if (!free_of(v == Var::x ? Var::y : Var::x)) throw DomainError("polynomial depends on both variables");
    std::vector<Rational> c;
    for (const auto& [e, val] : terms_) {
      unsigned k = v == Var::x ? e.first : e.second;
      if (c.size() <= k) c.resize(k + 1);
      c[k] = val;
    }
    return UniPoly(std::move(c), v == Var::x ? "x" : "y");
  }

  /// p(sx, sy) for bivariate substitutions sx, sy.
  BiPoly substitute(const BiPoly& sx, const BiPoly& sy) const {
    BiPoly r;
    std::map<unsigned, BiPoly> px, py;
    auto power = [](std::map<unsigned, BiPoly>& cache, const BiPoly& b, unsigned k) -> const BiPoly& {
      auto it = cache.find(k);
      if (it != cache.end()) return it->second;
      return cache.emplace(k, b.pow(k)).first->second;
    };
    for (const auto& [e, c] : terms_) r += power(px, sx, e.first) * power(py, sy, e.second) * c;
    return r;
  }

  Rational eval(const Rational& xv, const Rational& yv) const {
    Rational acc = 0;
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (unsigned k = 0; k < e.first; ++k) t *= xv;
      for (unsigned k = 0; k < e.second; ++k) t *= yv;
      acc += t;
    }
    return acc;
  }

  /// Parser-compatible rendering, terms by descending total degree then
  /// descending x-degree: "x*y + 1/2*y^2".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::vector<std::pair<Exponent, Rational>> ordered(terms_.begin(), terms_.end());
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
      unsigned da = a.first.first + a.first.second, db = b.first.first + b.first.second;
      if (da != db) return da > db;
      return a.first.first > b.first.first;
    });
    std::string out;
    for (const auto& [e, c] : ordered) {
      std::string mono = detail::power_str("x", e.first);
      std::string ym = detail::power_str("y", e.second);
      if (!mono.empty() && !ym.empty()) mono += "*";
      mono += ym;
      detail::append_term(out, c, mono);
    }
    return out;
  }

 private:
  void prune() {
    for (auto it = terms_.begin(); it != terms_.end();) it = it->second == 0 ? terms_.erase(it) : std::next(it);
  }

  Terms terms_;
};

/// Formal partial derivative (module-level spelling of BiPoly::partial).
inline BiPoly bipoly_partial(const BiPoly& p, Var v) { return p.partial(v); }

}  // namespace orthoscope
