#include <catch2/catch_amalgamated.hpp>

#include "support/oracles.hpp"

using namespace orthoscope;
using oracle::C;
using oracle::X;

TEST_CASE("gcd of products keeps the shared factor", "[property][algebra]") {
  oracle::Gen gen(11);
  for (int i = 0; i < 300; ++i) {
    UniPoly p = gen.poly_up_to(8), q = gen.poly_up_to(8), r = gen.poly_up_to(4);
    UniPoly g = poly_gcd(p * r, q * r);
    INFO("p = " << p.to_string() << ", q = " << q.to_string() << ", r = " << r.to_string());
    CHECK(r.monic().divides(g));
    CHECK(g.divides(p * r));
    CHECK(g.divides(q * r));
  }
}

TEST_CASE("squarefree decomposition re-expands exactly", "[property][algebra]") {
  oracle::Gen gen(12);
  for (int i = 0; i < 500; ++i) {
    UniPoly p = gen.poly(static_cast<std::size_t>(gen.integer(0, 3)));
    for (int k = 0, n = static_cast<int>(gen.integer(1, 3)); k < n; ++k)
      p *= gen.poly(static_cast<std::size_t>(gen.integer(1, 2)), -4, 4).pow(static_cast<unsigned>(gen.integer(1, 3)));
    auto sf = squarefree_decompose(p);
    INFO(p.to_string());
    CHECK(sf.expand() == p);
    for (std::size_t a = 0; a < sf.parts.size(); ++a) {
      CHECK(sf.parts[a].factor.leading() == 1);
      CHECK(is_squarefree(sf.parts[a].factor));
      CHECK_FALSE(sf.parts[a].factor.is_constant());
      for (std::size_t b = a + 1; b < sf.parts.size(); ++b)
        CHECK(poly_gcd(sf.parts[a].factor, sf.parts[b].factor) == C(1));
    }
  }
}

TEST_CASE("irreducible factorization is complete", "[property][algebra]") {
  oracle::Gen gen(13);
  for (int i = 0; i < 200; ++i) {
    UniPoly p = C(gen.nonzero(-5, 5));
    for (int k = 0, n = static_cast<int>(gen.integer(1, 4)); k < n; ++k)
      p *= gen.poly(static_cast<std::size_t>(gen.integer(1, 3)), -6, 6);
    auto fac = factor_rationals(p);
    INFO(p.to_string());
    CHECK(fac.expand() == p);
    for (const auto& part : fac.parts) {
      std::size_t d = part.factor.size() - 1;
      if (d >= 2 && d <= 3) CHECK(oracle::brute_rational_roots(part.factor).empty());
      if (d >= 2) CHECK(rational_roots(part.factor).empty());
    }
  }
}

TEST_CASE("resultant vanishes exactly on common roots", "[property][algebra]") {
  oracle::Gen gen(14);
  for (int i = 0; i < 200; ++i) {
    UniPoly a = gen.poly(static_cast<std::size_t>(gen.integer(1, 4)), -5, 5);
    UniPoly b = gen.poly(static_cast<std::size_t>(gen.integer(1, 4)), -5, 5);
    if (i % 2 == 0) {
      UniPoly common = X() - C(gen.integer(-3, 3));
      a *= common;
      b *= common;
    }
    Rational r = resultant(a, b);
    INFO(a.to_string() << " , " << b.to_string());
    CHECK((r == 0) == !poly_gcd(a, b).is_constant());
    CHECK(r == oracle::sylvester_resultant(a, b));
  }
}

TEST_CASE("resultant in a parameter specializes correctly", "[property][algebra]") {
  oracle::Gen gen(15);
  UniPoly t = UniPoly::variable("t");
  for (int i = 0; i < 100; ++i) {
    UniPoly a = gen.poly(static_cast<std::size_t>(gen.integer(1, 3)), -4, 4);
    UniPoly n = gen.poly(static_cast<std::size_t>(gen.integer(0, 2)), -4, 4), d = gen.poly(2, -4, 4);
    PolyOverPoly rhs(std::max(n.size(), d.size()));
    for (std::size_t k = 0; k < rhs.size(); ++k) rhs[k] = UniPoly::constant(n.coeff(k), "t") - t * d.coeff(k);
    UniPoly rho = resultant_x(lift_constant_coeffs(a), rhs);
    Rational t0 = gen.rational(-5, 5);
    UniPoly special = n - d * t0;
    if (special.size() != rhs.size()) continue;  // leading coefficient vanishes at t0
    Rational want = oracle::sylvester_resultant(a, special);
    CHECK(rho.eval(t0) == want);
  }
}

TEST_CASE("number field inverses", "[property][algebra]") {
  oracle::Gen gen(16);
  std::vector<UniPoly> moduli = {X() * X() - C(2), X() * X() + C(1), X() * X() * X() - C(2)};
  int done = 0;
  while (done < 200) {
    const UniPoly& q = moduli[static_cast<std::size_t>(done % 3)];
    UniPoly rep = gen.poly_up_to(q.size() - 2, -7, 7) * Rational(1, gen.integer(1, 5));
    NumberFieldElement e(q, rep);
    if (e.is_zero()) continue;
    CHECK((e * e.inverse()).is_rational());
    CHECK((e * e.inverse()).to_rational() == 1);
    ++done;
  }
}
