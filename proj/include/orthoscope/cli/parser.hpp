#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "orthoscope/planar/planar.hpp"

namespace orthoscope {

enum class FamilyKind { log, derivative };

inline std::string to_string(FamilyKind k) { return k == FamilyKind::log ? "log" : "derivative"; }

/// x' = f(x), y' = y·g(x) (log) or y' = g(x) (derivative).
struct UnivariateFamily {
  RatFunc f;
  RatFunc g;
  FamilyKind kind;
  friend bool operator==(const UnivariateFamily&, const UnivariateFamily&) = default;
};

struct Planar {
  PlanarVectorField v;
  friend bool operator==(const Planar&, const Planar&) = default;
};

/// A bare expression r(x), the input of the single-function commands.
struct Function {
  RatFunc r;
  friend bool operator==(const Function&, const Function&) = default;
};

using ParsedSystem = std::variant<UnivariateFamily, Planar, Function>;

struct SystemSource {
  std::string raw_text;
  ParsedSystem parsed;
};

namespace detail {

/// Recursive descent over
///   program   := statement ((';' | newline) statement)* | expr
///   statement := ('x' | 'y') "'" '=' expr
///   expr      := term (('+' | '-') term)*
///   term      := unary (('*' | '/') unary)*
///   unary     := ('+' | '-') unary | power
///   power     := atom ('^' integer)?
///   atom      := integer | 'x' | 'y' | '(' expr ')'
class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  struct Statement {
    char lhs;
    BiRatFunc value;
    std::size_t offset;  // start of the right-hand side
  };

  bool looks_like_system() {
    std::size_t save = pos_;
    skip_space(true);
    bool sys = pos_ + 1 < s_.size() && (s_[pos_] == 'x' || s_[pos_] == 'y');
    if (sys) {
      std::size_t p = pos_ + 1;
      while (p < s_.size() && (s_[p] == ' ' || s_[p] == '\t')) ++p;
      sys = p < s_.size() && s_[p] == '\'';
    }
    pos_ = save;
    return sys;
  }

  std::vector<Statement> statements() {
    std::vector<Statement> out;
    skip_separators();
    while (pos_ < s_.size()) {
      skip_space(false);
      std::size_t at = pos_;
      if (pos_ >= s_.size() || (s_[pos_] != 'x' && s_[pos_] != 'y'))
        throw ParseError("expected x' or y'", at);
      char lhs = s_[pos_++];
      skip_space(false);
      expect('\'');
      skip_space(false);
      expect('=');
      skip_space(false);
      std::size_t rhs = pos_;
      BiRatFunc value = expr();
      out.push_back({lhs, value, rhs});
      skip_space(false);
      if (pos_ < s_.size() && s_[pos_] != ';' && s_[pos_] != '\n')
        throw ParseError("expected ';' or newline", pos_);
      skip_separators();
    }
    return out;
  }

  BiRatFunc single_expression() {
    skip_space(true);
    BiRatFunc value = expr();
    skip_space(true);
    if (pos_ < s_.size()) throw ParseError("unexpected '" + std::string(1, s_[pos_]) + "'", pos_);
    return value;
  }

 private:
  void skip_space(bool newlines) {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\r' ||
                                (newlines && s_[pos_] == '\n')))
      ++pos_;
  }
  void skip_separators() {
    while (pos_ < s_.size() && (std::isspace(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == ';')) ++pos_;
  }
  void expect(char c) {
    if (pos_ >= s_.size() || s_[pos_] != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }
  bool accept(char c) {
    skip_space(false);
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  BiRatFunc expr() {
    BiRatFunc acc = term();
    for (;;) {
      if (accept('+')) acc = acc + term();
      else if (accept('-')) acc = acc - term();
      else return acc;
    }
  }

  BiRatFunc term() {
    BiRatFunc acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        skip_space(false);
        std::size_t at = pos_;
        BiRatFunc d = unary();
        if (d.is_zero()) throw ParseError("division by zero", at);
        acc = acc / d;
      } else {
        return acc;
      }
    }
  }

  BiRatFunc unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  BiRatFunc power() {
    BiRatFunc base = atom();
    if (!accept('^')) return base;
    skip_space(false);
    std::size_t at = pos_;
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      throw ParseError("exponent must be a nonnegative integer", at);
    Integer e = integer_literal();
    skip_space(false);
    if (pos_ < s_.size() && (s_[pos_] == '.' || s_[pos_] == '^'))
      throw ParseError("exponent must be a nonnegative integer", at);
    if (e > 1000) throw ParseError("exponent too large", at);
    return base.pow(static_cast<int>(e.get_si()));
  }

  BiRatFunc atom() {
    skip_space(false);
    if (pos_ >= s_.size()) throw ParseError("expected an expression", pos_);
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return BiRatFunc::constant(Rational(integer_literal()));
    if (c == 'x' || c == 'y') {
      std::size_t at = pos_++;
      if (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_])))
        throw ParseError("unknown symbol", at);
      return BiRatFunc(c == 'x' ? BiPoly::x() : BiPoly::y());
    }
    if (c == '(') {
      ++pos_;
      BiRatFunc inner = expr();
      skip_space(false);
      expect(')');
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) throw ParseError("unknown symbol", pos_);
    throw ParseError("expected an expression", pos_);
  }

  Integer integer_literal() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ < s_.size() && s_[pos_] == '.')
      throw ParseError("decimal literals are not supported; write a ratio such as 3/2", pos_);
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

inline BiPoly require_polynomial(const BiRatFunc& r, std::size_t offset, const char* slot) {
  if (!r.is_polynomial())
    throw ParseError(std::string("planar systems need a polynomial ") + slot, offset);
  return r.num();
}

}  // namespace detail

/// Parses either a system of two statements or a bare expression in x.
inline SystemSource parse_system(const std::string& text) {
  detail::Parser parser(text);
  if (!parser.looks_like_system()) {
    BiRatFunc r = detail::Parser(text).single_expression();
    if (!r.free_of(Var::y)) throw ParseError("a single function must not depend on y", 0);
    return {text, Function{r.to_ratfunc()}};
  }
  auto stmts = parser.statements();
  const detail::Parser::Statement *sx = nullptr, *sy = nullptr;
  for (const auto& st : stmts) {
    auto& slot = st.lhs == 'x' ? sx : sy;
    if (slot) throw ParseError(std::string("duplicate ") + st.lhs + "' statement", st.offset);
    slot = &st;
  }
  if (!sx) throw ParseError("missing x' statement", text.size());
  if (!sy) throw ParseError("missing y' statement", text.size());

  const BiRatFunc& fx = sx->value;
  const BiRatFunc& fy = sy->value;
  if (fx.free_of(Var::y) && !fx.is_zero()) {
    BiRatFunc g = fy / BiRatFunc(BiPoly::y());
    if (fy.is_zero() || (g.free_of(Var::y) && !fy.free_of(Var::y)))
      return {text, UnivariateFamily{fx.to_ratfunc(), g.to_ratfunc(), FamilyKind::log}};
    if (fy.free_of(Var::y)) return {text, UnivariateFamily{fx.to_ratfunc(), fy.to_ratfunc(), FamilyKind::derivative}};
  }
  if (!fx.free_of(Var::y) && !fx.is_polynomial())
    throw ParseError("division by a polynomial containing y", sx->offset);
  if (!fy.is_polynomial() && !fy.den().free_of(Var::y) && fx.free_of(Var::y))
    throw ParseError("division by a polynomial containing y in y'", sy->offset);
  return {text, Planar{{detail::require_polynomial(fx, sx->offset, "x'"),
                        detail::require_polynomial(fy, sy->offset, "y'")}}};
}

/// Canonical text that reparses to the same value.
inline std::string serialize(const ParsedSystem& p) {
  if (auto u = std::get_if<UnivariateFamily>(&p)) {
    std::string rhs = u->kind == FamilyKind::log ? "y*(" + u->g.to_string() + ")" : u->g.to_string();
    return "x' = " + u->f.to_string() + "; y' = " + rhs;
  }
  if (auto pl = std::get_if<Planar>(&p)) return pl->v.to_string();
  return std::get<Function>(p).r.to_string();
}

inline std::string shape_name(const ParsedSystem& p) {
  if (auto u = std::get_if<UnivariateFamily>(&p)) return to_string(u->kind) + " family";
  return std::holds_alternative<Planar>(p) ? "planar system" : "single function";
}

}  // namespace orthoscope
