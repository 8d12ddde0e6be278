#include <catch2/catch_amalgamated.hpp>

#include "support/oracles.hpp"

using namespace orthoscope;
using oracle::C;
using oracle::X;

namespace {

struct Instance {
  RatFunc f, g;
};

Instance random_instance(oracle::Gen& gen) {
  UniPoly f = C(gen.nonzero(-3, 3));
  for (int k = 0, n = static_cast<int>(gen.integer(1, 3)); k < n; ++k)
    f *= gen.poly(static_cast<std::size_t>(gen.integer(1, 2)), -3, 3).pow(static_cast<unsigned>(gen.integer(1, 3)));
  UniPoly g = gen.poly_up_to(3, -4, 4);
  if (gen.integer(0, 3) == 0) return {f, RatFunc::normalize(g, X() - C(gen.integer(-2, 2)))};
  return {f, RatFunc(g)};
}

std::vector<Instance> fixture_instances() {
  UniPoly x = X();
  return {{x * x * (x - C(1)), RatFunc(x)},
          {x * x * x * (x - C(1)), RatFunc(x)},
          {x * x * (x - C(1)) * (x + C(1)), RatFunc(x)},
          {x * (x - C(1)), RatFunc(x)},
          {x * x * x - C(2), RatFunc()}};
}

/// f(x) ↦ a·f((x − b)/a), g ↦ g((x − b)/a).
Instance transform(const Instance& in, const Rational& a, const Rational& b) {
  UniPoly sub = (X() - UniPoly::constant(b)) * Rational(Rational(1) / a);
  return {in.f.compose(sub) * a, in.g.compose(sub)};
}

void check_found_witness(const BetaSearchResult& r, const Instance& in) {
  if (r.status != SearchStatus::found) return;
  RatFunc F = (in.g - RatFunc::constant(*r.beta)) / in.f;
  if (r.dlog_witness) CHECK(oracle::quotient_rule(r.dlog_witness->h) / r.dlog_witness->h == F * Rational(r.dlog_witness->scaling));
  if (r.derivative_witness) CHECK(oracle::quotient_rule(*r.derivative_witness) == F);
}

}  // namespace

TEST_CASE("beta search status is invariant under scaling the fiber", "[property][criteria]") {
  oracle::Gen gen(31);
  auto cases = fixture_instances();
  for (int i = 0; i < 100; ++i) cases.push_back(random_instance(gen));
  for (const auto& in : cases) {
    long k = gen.nonzero(-5, 5);
    INFO("f = " << in.f.to_string() << ", g = " << in.g.to_string() << ", k = " << k);
    auto plain = beta_search_log(in.f, in.g, ResidueClass::rational);
    auto scaled = beta_search_log(in.f, in.g * Rational(k), ResidueClass::rational);
    CHECK(plain.status == scaled.status);
    check_found_witness(plain, in);
    check_found_witness(scaled, {in.f, in.g * Rational(k)});
  }
}

TEST_CASE("verdicts are invariant under affine changes of x", "[property][criteria]") {
  oracle::Gen gen(32);
  auto cases = fixture_instances();
  for (int i = 0; i < 50; ++i) cases.push_back(random_instance(gen));
  for (const auto& in : cases) {
    Rational a = gen.nonzero_rational(-4, 4, 3), b = gen.rational(-4, 4, 3);
    Instance t = transform(in, a, b);
    INFO("f = " << in.f.to_string() << ", g = " << in.g.to_string() << ", a = " << a << ", b = " << b);
    CHECK(base_orthogonal(in.f).orthogonal == base_orthogonal(t.f).orthogonal);
    CHECK(beta_search_log(in.f, in.g, ResidueClass::rational).status ==
          beta_search_log(t.f, t.g, ResidueClass::rational).status);
    CHECK(beta_search_log(in.f, in.g, ResidueClass::integer).status ==
          beta_search_log(t.f, t.g, ResidueClass::integer).status);
    auto d1 = beta_search_derivative(in.f, in.g), d2 = beta_search_derivative(t.f, t.g);
    CHECK(d1.status == d2.status);
    check_found_witness(d1, in);
    check_found_witness(d2, t);
  }
}

TEST_CASE("constructed instances are always found", "[property][criteria]") {
  oracle::Gen gen(33);
  for (int i = 0; i < 100; ++i) {
    // f has a double root, so the multiple-pole conditions pin beta.
    UniPoly f = (X() - C(gen.integer(-3, 3))).pow(2) * gen.poly(static_cast<std::size_t>(gen.integer(0, 2)), -3, 3);
    Rational beta0 = gen.rational(-5, 5);
    UniPoly p = gen.distinct_linear(static_cast<std::size_t>(gen.integer(1, 3)), -5, 5);
    RatFunc sum;
    std::vector<Rational> wanted;
    for (const auto& part : factor_rationals(p).parts) {
      Rational r = gen.nonzero_rational(-4, 4, 3);
      wanted.push_back(r);
      sum += RatFunc::normalize(part.factor.derivative(), part.factor) * r;
    }
    RatFunc g = RatFunc::constant(beta0) + RatFunc(f) * sum;
    INFO("f = " << f.to_string() << ", g = " << g.to_string() << ", beta0 = " << beta0);
    auto res = beta_search_log(f, g, ResidueClass::rational);
    REQUIRE(res.status == SearchStatus::found);
    CHECK(*res.beta == beta0);
    std::vector<Rational> got;
    for (const auto& pole : res.residue_table.affine) got.push_back(residue_rational(pole.residue));
    std::sort(got.begin(), got.end());
    std::sort(wanted.begin(), wanted.end());
    CHECK(got == wanted);
    check_found_witness(res, {f, g});
  }
}

TEST_CASE("found results are verified and none results are complete", "[property][criteria]") {
  oracle::Gen gen(34);
  for (int i = 0; i < 100; ++i) {
    Instance in = random_instance(gen);
    for (auto cls : {ResidueClass::integer, ResidueClass::rational}) {
      auto r = beta_search_log(in.f, in.g, cls);
      check_found_witness(r, in);
      if (r.status == SearchStatus::none) CHECK(r.completeness_case != CompletenessCase::C);
      if (r.status == SearchStatus::inconclusive) CHECK(r.completeness_case == CompletenessCase::C);
    }
    check_found_witness(beta_search_derivative(in.f, in.g), in);
  }
}

TEST_CASE("derivative search agrees with a brute-force scan over small beta", "[property][criteria]") {
  oracle::Gen gen(35);
  for (int i = 0; i < 60; ++i) {
    Instance in = random_instance(gen);
    auto r = beta_search_derivative(in.f, in.g);
    // A residue-free (g - beta)/f for some beta in a small grid must be seen.
    for (long num = -12; num <= 12; ++num)
      for (long den : {1L, 2L, 3L, 4L}) {
        Rational beta(num, den);
        bool is_der = hermite_reduce((in.g - RatFunc::constant(beta)) / in.f).remainder.is_zero();
        if (is_der) CHECK(r.status == SearchStatus::found);
      }
  }
}
