#include <catch2/catch_amalgamated.hpp>

#include "support/oracles.hpp"

using namespace orthoscope;

namespace {

PlanarVectorField random_field(oracle::Gen& gen) { return {gen.bipoly(3), gen.bipoly(3)}; }

BiRatFunc random_nonzero(oracle::Gen& gen) {
  BiPoly p;
  while (p.is_zero()) p = gen.bipoly(2, -3, 3, 3);
  return p;
}

bool divisible_by_y_power(const BiPoly& p, unsigned k) {
  for (const auto& [e, c] : p.terms())
    if (e.second < k) return false;
  return true;
}

}  // namespace

TEST_CASE("the bracket is antisymmetric and satisfies Jacobi", "[property][planar]") {
  oracle::Gen gen(41);
  for (int i = 0; i < 100; ++i) {
    PlanarVectorField u = random_field(gen), v = random_field(gen), w = random_field(gen);
    INFO(u.to_string() << " | " << v.to_string() << " | " << w.to_string());
    CHECK(lie_bracket(u, v) == -lie_bracket(v, u));
    PlanarVectorField j = lie_bracket(u, lie_bracket(v, w)) + lie_bracket(v, lie_bracket(w, u)) +
                          lie_bracket(w, lie_bracket(u, v));
    CHECK(j.is_zero());
  }
}

TEST_CASE("the system derivative is a derivation", "[property][planar]") {
  oracle::Gen gen(42);
  for (int i = 0; i < 200; ++i) {
    PlanarVectorField v = random_field(gen);
    BiRatFunc h = random_nonzero(gen), k = random_nonzero(gen) / random_nonzero(gen);
    CHECK(system_derivative(v, h + k) == system_derivative(v, h) + system_derivative(v, k));
    CHECK(system_derivative(v, h * k) == h * system_derivative(v, k) + k * system_derivative(v, h));
  }
}

TEST_CASE("the logarithmic derivative is a homomorphism", "[property][planar]") {
  oracle::Gen gen(43);
  for (int i = 0; i < 200; ++i) {
    PlanarVectorField v = random_field(gen);
    BiRatFunc h = random_nonzero(gen), k = random_nonzero(gen) / random_nonzero(gen);
    CHECK(system_dlog(v, h * k) == system_dlog(v, h) + system_dlog(v, k));
    CHECK(system_dlog(v, h.pow(-2)) == system_dlog(v, h) * Rational(-2));
    Rational c = gen.nonzero_rational(-5, 5);
    CHECK(verify_gauge_identity(v, system_dlog(v, h) + BiRatFunc::constant(c), h, c, 1));
  }
}

TEST_CASE("linearization is idempotent and drops only higher-order terms", "[property][planar]") {
  oracle::Gen gen(44);
  for (int i = 0; i < 100; ++i) {
    BiPoly y = BiPoly::y();
    PlanarVectorField v{gen.bipoly(3) * y + BiPoly::from_uni(gen.poly(static_cast<std::size_t>(gen.integer(1, 4)), -4, 4)),
                        gen.bipoly(3) * y};
    LinearizedSystem lin = linearize_along_line(v);
    PlanarVectorField e = lin.as_vector_field();
    CHECK(linearize_along_line(e).as_vector_field() == e);
    CHECK(divisible_by_y_power(v.fx - e.fx, 1));
    CHECK(divisible_by_y_power(v.fy - e.fy, 2));
  }
}

TEST_CASE("lift verdicts are invariant under affine coordinate changes", "[property][planar]") {
  oracle::Gen gen(45);
  BiPoly y = BiPoly::y();
  int checked = 0;
  while (checked < 50) {
    UniPoly f0 = gen.distinct_linear(static_cast<std::size_t>(gen.integer(1, 2)), -3, 3);
    f0 *= gen.distinct_linear(static_cast<std::size_t>(gen.integer(1, 2)), -3, 3);
    if (gen.integer(0, 1)) f0 *= UniPoly::variable("x") * UniPoly::variable("x") - UniPoly::constant(2);
    PlanarVectorField v{BiPoly::from_uni(f0) + y * gen.bipoly(2, -2, 2, 2),
                        y * BiPoly::from_uni(gen.poly_up_to(2, -3, 3)) + y * y * gen.bipoly(1, -2, 2, 2)};
    Rational a = gen.nonzero_rational(-3, 3, 2), b = gen.rational(-3, 3, 2), u = gen.nonzero_rational(-3, 3, 2);
    INFO(v.to_string() << " with a = " << a << ", b = " << b << ", u = " << u);
    PlanarVectorField t = transform_affine(v, a, b, u);
    CHECK(classify_invariant_line_lift(v).conclusion == classify_invariant_line_lift(t).conclusion);
    ++checked;
  }
}
