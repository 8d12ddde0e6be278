#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <tuple>
#include <utility>
#include <vector>

#include "orthoscope/algebra/unipoly.hpp"

namespace orthoscope {

struct IrreducibleFactorization {
  Rational content;
  std::vector<FactorPart> parts;  // monic irreducible, pairwise distinct

  UniPoly expand(const std::string& var = "x") const {
    UniPoly r = UniPoly::constant(content, var);
    for (const auto& p : parts) r *= p.factor.pow(p.multiplicity);
    return r;
  }
};

namespace detail::modp {

// Dense polynomials over Z/p, p < 2^31, low degree first, no trailing zeros.
using Poly = std::vector<std::uint64_t>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1U) r = r * b % p;
    b = b * b % p;
    e >>= 1U;
  }
  return r;
}

inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

inline Poly sub(Poly a, const Poly& b, std::uint64_t p) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

inline Poly mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  return r;
}

inline std::pair<Poly, Poly> divmod(Poly a, const Poly& b, std::uint64_t p) {
  if (a.size() < b.size()) return {{}, a};
  std::uint64_t inv = inv_mod(b.back(), p);
  Poly q(a.size() - b.size() + 1, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    std::uint64_t c = a[k + b.size() - 1] * inv % p;
    q[k] = c;
    if (!c) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] = (a[k + j] + p - c * b[j] % p) % p;
  }
  a.resize(b.size() - 1);
  trim(a);
  trim(q);
  return {q, a};
}

inline Poly rem(const Poly& a, const Poly& b, std::uint64_t p) { return divmod(a, b, p).second; }

inline Poly monic(Poly a, std::uint64_t p) {
  if (a.empty()) return a;
  std::uint64_t inv = inv_mod(a.back(), p);
  for (auto& c : a) c = c * inv % p;
  return a;
}

inline Poly gcd(Poly a, Poly b, std::uint64_t p) {
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

/// (s, t, g) with s*a + t*b = g monic.
inline std::tuple<Poly, Poly, Poly> ext_gcd(Poly a, Poly b, std::uint64_t p) {
  Poly s0{1}, s1{}, t0{}, t1{1};
  while (!b.empty()) {
    auto [q, r] = divmod(a, b, p);
    a = std::exchange(b, r);
    s0 = std::exchange(s1, sub(s0, mul(q, s1, p), p));
    t0 = std::exchange(t1, sub(t0, mul(q, t1, p), p));
  }
  std::uint64_t inv = inv_mod(a.back(), p);
  for (auto* v : {&a, &s0, &t0})
    for (auto& c : *v) c = c * inv % p;
  return {s0, t0, a};
}

inline Poly powmod(Poly base, Integer e, const Poly& m, std::uint64_t p) {
  Poly r{1};
  base = rem(base, m, p);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = rem(mul(r, base, p), m, p);
    e >>= 1;
    if (e > 0) base = rem(mul(base, base, p), m, p);
  }
  return r;
}

inline Poly derivative(const Poly& a, std::uint64_t p) {
  if (a.size() <= 1) return {};
  Poly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * (i % p) % p;
  trim(r);
  return r;
}

/// Equal-degree splitting (Cantor–Zassenhaus) of a monic squarefree f whose
/// irreducible factors all have degree d; p odd.
inline void equal_degree_split(const Poly& f, std::size_t d, std::uint64_t p, std::mt19937_64& rng,
                               std::vector<Poly>& out) {
  if (f.size() - 1 == d) {
    out.push_back(f);
    return;
  }
  Integer e;
  mpz_ui_pow_ui(e.get_mpz_t(), p, d);
  e = (e - 1) / 2;
  std::uniform_int_distribution<std::uint64_t> coeff(0, p - 1);
  for (;;) {
    Poly a(f.size() - 1);
    for (auto& c : a) c = coeff(rng);
    trim(a);
    if (a.size() <= 1) continue;
    Poly g = gcd(a, f, p);
    if (g.size() > 1 && g.size() < f.size()) {
      equal_degree_split(g, d, p, rng, out);
      equal_degree_split(divmod(f, g, p).first, d, p, rng, out);
      return;
    }
    Poly b = powmod(a, e, f, p);
    b = sub(b, Poly{1}, p);
    g = gcd(b, f, p);
    if (g.size() > 1 && g.size() < f.size()) {
      equal_degree_split(g, d, p, rng, out);
      equal_degree_split(divmod(f, g, p).first, d, p, rng, out);
      return;
    }
  }
}

/// Complete factorization of a monic squarefree polynomial over Z/p.
inline std::vector<Poly> factor_squarefree(Poly f, std::uint64_t p) {
  std::vector<Poly> out;
  std::mt19937_64 rng(0x5eed ^ p);
  Poly h{0, 1};  // x
  const Poly x{0, 1};
  for (std::size_t d = 1; 2 * d <= f.size() - 1; ++d) {
    h = powmod(h, Integer(static_cast<unsigned long>(p)), f, p);
    Poly g = gcd(sub(h, x, p), f, p);
    if (g.size() > 1) {
      equal_degree_split(g, d, p, rng, out);
      f = divmod(f, g, p).first;
      h = rem(h, f, p);
    }
  }
  if (f.size() > 1) out.push_back(f);
  return out;
}

}  // namespace detail::modp

namespace detail {

using ZPoly = std::vector<Integer>;  // integer polynomial, low degree first

inline ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

inline Integer mod_pos(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

inline ZPoly zmod(ZPoly a, const Integer& m) {
  for (auto& c : a) c = mod_pos(c, m);
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

inline ZPoly zsymmetric(ZPoly a, const Integer& m) {
  Integer half = m / 2;
  for (auto& c : a) {
    c = mod_pos(c, m);
    if (c > half) c -= m;
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

inline modp::Poly to_modp(const ZPoly& a, std::uint64_t p) {
  modp::Poly r;
  r.reserve(a.size());
  Integer pz(static_cast<unsigned long>(p));
  for (const auto& c : a) r.push_back(mod_pos(c, pz).get_ui());
  modp::trim(r);
  return r;
}

inline ZPoly from_modp(const modp::Poly& a) {
  ZPoly r;
  r.reserve(a.size());
  for (auto c : a) r.emplace_back(static_cast<unsigned long>(c));
  return r;
}

/// One linear Hensel step. On entry target ≡ g*h (mod m), g monic, and
/// s*g + t*h ≡ 1 (mod p); on exit the congruence holds modulo m*p.
inline void hensel_step(const ZPoly& target, ZPoly& g, ZPoly& h, const modp::Poly& s, const modp::Poly& t,
                        std::uint64_t p, const Integer& m) {
  ZPoly diff = target;
  ZPoly gh = zmul(g, h);
  if (gh.size() > diff.size()) diff.resize(gh.size(), 0);
  for (std::size_t i = 0; i < gh.size(); ++i) diff[i] -= gh[i];
  for (auto& c : diff) c /= m;  // exact
  modp::Poly e = to_modp(diff, p);
  auto [q, dg] = modp::divmod(modp::mul(t, e, p), to_modp(g, p), p);
  modp::Poly dh = modp::mul(s, e, p);
  modp::Poly qh = modp::mul(q, to_modp(h, p), p);
  if (qh.size() > dh.size()) dh.resize(qh.size(), 0);
  for (std::size_t i = 0; i < qh.size(); ++i) dh[i] = (dh[i] + qh[i]) % p;
  modp::trim(dh);

  ZPoly dgz = from_modp(dg), dhz = from_modp(dh);
  if (dgz.size() > g.size()) g.resize(dgz.size(), 0);
  for (std::size_t i = 0; i < dgz.size(); ++i) g[i] += m * dgz[i];
  if (dhz.size() > h.size()) h.resize(dhz.size(), 0);
  for (std::size_t i = 0; i < dhz.size(); ++i) h[i] += m * dhz[i];
  Integer mp = m * Integer(static_cast<unsigned long>(p));
  g = zmod(g, mp);
  h = zmod(h, mp);
}

inline bool divides_exactly(const UniPoly& d, const UniPoly& n) { return (n % d).is_zero(); }

/// Factors a primitive squarefree integer polynomial of degree >= 2 with
/// nonzero constant term into irreducibles over Z (up to sign).
inline std::vector<ZPoly> zassenhaus(const ZPoly& f) {
  const std::size_t n = f.size() - 1;
  const Integer& lc = f.back();

  UniPoly fq = UniPoly::from_integers(f);
  std::uint64_t p = 0;
  modp::Poly fp;
  for (std::uint64_t cand = 3;; cand += 2) {
    bool prime = true;
    for (std::uint64_t d = 3; d * d <= cand; d += 2)
      if (cand % d == 0) {
        prime = false;
        break;
      }
    if (!prime) continue;
    if (mod_pos(lc, Integer(static_cast<unsigned long>(cand))) == 0) continue;
    modp::Poly fc = to_modp(f, cand);
    if (modp::gcd(fc, modp::derivative(fc, cand), cand).size() != 1) continue;
    p = cand;
    fp = modp::monic(fc, p);
    break;
  }

  std::vector<modp::Poly> local = modp::factor_squarefree(fp, p);
  if (local.size() == 1) return {f};

  // Coefficient bound for any factor, scaled by the leading coefficient.
  Integer norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Integer norm = sqrt(norm2) + 1;
  Integer bound = 2 * abs(lc) * (Integer(1) << static_cast<unsigned>(n)) * norm;
  Integer pz(static_cast<unsigned long>(p));
  Integer modulus = pz;
  unsigned k = 1;
  while (modulus <= bound) {
    modulus *= pz;
    ++k;
  }

  // Multifactor lift by peeling one monic factor at a time.
  std::vector<ZPoly> lifted;
  ZPoly target = f;
  for (std::size_t i = 0; i + 1 < local.size(); ++i) {
    modp::Poly gmod = local[i];
    modp::Poly tmod = to_modp(target, p);
    modp::Poly hmod = modp::divmod(tmod, gmod, p).first;
    auto [s, t, one] = modp::ext_gcd(gmod, hmod, p);
    ZPoly g = from_modp(gmod), h = from_modp(hmod);
    Integer m = pz;
    for (unsigned step = 1; step < k; ++step) {
      hensel_step(target, g, h, s, t, p, m);
      m *= pz;
    }
    lifted.push_back(g);
    target = zmod(h, modulus);
  }
  {
    // Last factor: target / lc made monic modulo p^k.
    Integer lcm_inv;
    Integer lct = mod_pos(target.back(), modulus);
    mpz_invert(lcm_inv.get_mpz_t(), lct.get_mpz_t(), modulus.get_mpz_t());
    ZPoly last = target;
    for (auto& c : last) c = mod_pos(c * lcm_inv, modulus);
    lifted.push_back(zmod(last, modulus));
  }

  // Recombination over subsets of increasing size.
  std::vector<ZPoly> result;
  UniPoly remaining = fq;
  std::vector<ZPoly> pool = lifted;
  std::size_t s = 1;
  while (2 * s <= pool.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    Integer rlc = remaining.leading().get_num();
    while (true) {
      ZPoly prod{rlc};
      for (auto i : idx) prod = zmod(zmul(prod, pool[i]), modulus);
      ZPoly cand = zsymmetric(prod, modulus);
      UniPoly candq = UniPoly::from_integers(cand);
      if (!candq.is_constant()) {
        UniPoly prim = UniPoly::from_integers(candq.primitive_integer());
        if (divides_exactly(prim, remaining)) {
          result.push_back(prim.primitive_integer());
          remaining = exact_div(remaining, prim);
          std::vector<ZPoly> next;
          for (std::size_t j = 0; j < pool.size(); ++j)
            if (std::find(idx.begin(), idx.end(), j) == idx.end()) next.push_back(pool[j]);
          pool = std::move(next);
          found = true;
          break;
        }
      }
      // Next combination.
      std::size_t pos = s;
      while (pos > 0 && idx[pos - 1] == pool.size() - s + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t j = pos; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (!remaining.is_constant()) result.push_back(remaining.primitive_integer());
  return result;
}

/// Rational roots of a primitive integer polynomial by the rational-root
/// test. Returns nullopt when the candidate set would be too large to
/// enumerate by trial division.
inline std::optional<std::vector<Rational>> rational_root_candidates_roots(const ZPoly& f) {
  auto divisors = [](Integer a) -> std::optional<std::vector<Integer>> {
    a = abs(a);
    if (a > Integer("1000000000000")) return std::nullopt;
    std::vector<Integer> small, large;
    for (Integer d = 1; d * d <= a; ++d) {
      if (a % d == 0) {
        small.push_back(d);
        if (d * d != a) large.push_back(a / d);
      }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
  };
  auto num = divisors(f.front());
  auto den = divisors(f.back());
  if (!num || !den) return std::nullopt;
  UniPoly fq = UniPoly::from_integers(f);
  std::vector<Rational> roots;
  for (const auto& a : *num)
    for (const auto& b : *den) {
      if (gcd(a, b) != 1) continue;
      for (int sign : {1, -1}) {
        Rational r = make_rational(sign * a, b);
        if (fq.eval(r) == 0) roots.push_back(r);
      }
    }
  return roots;
}

}  // namespace detail

/// Complete factorization over Q into monic irreducible factors with
/// multiplicities. Squarefree decomposition first, then the factor x and
/// rational roots are split off, and whatever remains goes through Zassenhaus.
inline IrreducibleFactorization factor_rationals(const UniPoly& p) {
  if (p.is_zero()) throw DomainError("factorization of the zero polynomial");
  IrreducibleFactorization out{p.leading(), {}};
  if (p.is_constant()) return out;
  SquarefreeFactorization sqf = squarefree_decompose(p);
  const std::string& var = p.var();
  for (const auto& part : sqf.parts) {
    UniPoly rest = part.factor.with_var("x");
    std::vector<UniPoly> irreducibles;
    if (rest.coeff(0) == 0) {
      irreducibles.push_back(UniPoly::variable());
      rest = exact_div(rest, UniPoly::variable());
    }
    if (!rest.is_constant()) {
      detail::ZPoly z = rest.primitive_integer();
      if (auto roots = detail::rational_root_candidates_roots(z)) {
        for (const auto& r : *roots) {
          UniPoly lin({-r, 1});
          irreducibles.push_back(lin);
          rest = exact_div(rest, lin);
        }
      }
    }
    if (rest.degree() == Degree(1)) {
      irreducibles.push_back(rest.monic());
    } else if (!rest.is_constant()) {
      for (const auto& z : detail::zassenhaus(rest.primitive_integer()))
        irreducibles.push_back(UniPoly::from_integers(z).monic());
    }
    for (auto& q : irreducibles) out.parts.push_back({q.with_var(var), part.multiplicity});
  }
  std::sort(out.parts.begin(), out.parts.end(), [](const FactorPart& a, const FactorPart& b) {
    if (a.factor.size() != b.factor.size()) return a.factor.size() < b.factor.size();
    for (std::size_t i = a.factor.size(); i-- > 0;)
      if (a.factor.coeff(i) != b.factor.coeff(i)) return a.factor.coeff(i) < b.factor.coeff(i);
    return a.multiplicity < b.multiplicity;
  });
  return out;
}

/// Rational roots of p (distinct), in increasing order.
inline std::vector<Rational> rational_roots(const UniPoly& p) {
  std::vector<Rational> roots;
  if (p.is_zero()) throw DomainError("rational roots of the zero polynomial");
  for (const auto& part : factor_rationals(p).parts)
    if (part.factor.degree() == Degree(1)) roots.push_back(-part.factor.coeff(0));
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace orthoscope
