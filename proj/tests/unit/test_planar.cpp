#include <catch2/catch_amalgamated.hpp>

#include "support/oracles.hpp"

using namespace orthoscope;

namespace {

const BiPoly x = BiPoly::x(), y = BiPoly::y(), one = BiPoly::constant(1);
const BiPoly base = x * x * x * (x - one);
// x' = x^3(x-1), y' = xy + y^2/2.
const PlanarVectorField tangent{base, x * y + y * y * Rational(1, 2)};
const PlanarVectorField dx{one, BiPoly()}, dy{BiPoly(), one};

}  // namespace

TEST_CASE("BiRatFunc reduces common factors", "[planar]") {
  BiRatFunc r = BiRatFunc::normalize((x + y) * (x * x - y), (x + y) * (y * y + x) * Rational(3));
  CHECK(r.den() == y * y + x);
  CHECK(r.num() == (x * x - y) * Rational(1, 3));
  BiRatFunc s = BiRatFunc::normalize(x * y + y * y * Rational(1, 2), y);
  CHECK(s.is_polynomial());
  CHECK(s == BiRatFunc(x + y * Rational(1, 2)));
  CHECK(BiRatFunc::normalize(BiPoly(), y).is_zero());
  CHECK_THROWS_AS(BiRatFunc::normalize(x, BiPoly()), DomainError);
  // Cross-multiplied equality agrees with the canonical form.
  BiRatFunc a = BiRatFunc::normalize(x * y, y * y), b = BiRatFunc::normalize(x * Rational(2), y * Rational(2));
  CHECK(a == b);
  CHECK(a.num() == b.num());
  CHECK(a.den() == b.den());
}

TEST_CASE("lie_bracket", "[planar]") {
  PlanarVectorField b = lie_bracket(tangent, dy);
  CHECK(b.fx.is_zero());
  CHECK(b.fy == -(x + y));
  CHECK(lie_bracket(tangent, tangent).is_zero());
  PlanarVectorField xdy{BiPoly(), x};
  PlanarVectorField r = lie_bracket(dx, xdy);
  CHECK(r.fx.is_zero());
  CHECK(r.fy == one);
}

TEST_CASE("invariant_line", "[planar]") {
  auto rep = invariant_line(tangent);
  CHECK(rep.invariant);
  CHECK(*rep.cofactor_g1 == x + y * Rational(1, 2));
  CHECK_FALSE(invariant_line(PlanarVectorField{x, x}).invariant);
  auto zero = invariant_line(PlanarVectorField{x, BiPoly()});
  CHECK(zero.invariant);
  CHECK(zero.cofactor_g1->is_zero());
}

TEST_CASE("linearize_along_line", "[planar]") {
  auto lin = linearize_along_line(tangent);
  CHECK(lin.base_f0 == base.to_uni());
  CHECK(lin.fiber_hZ == UniPoly::variable("x"));
  CHECK(lin.as_vector_field() == PlanarVectorField{base, x * y});

  // Fiberwise-linear fields are fixed points.
  PlanarVectorField linear{x * x - one, y * (x + one)};
  CHECK(linearize_along_line(linear).as_vector_field() == linear);

  // Higher-order family with f1 = 1, g2 = x.
  PlanarVectorField e67{base + y, x * y + x * y * y};
  auto l67 = linearize_along_line(e67);
  CHECK(l67.base_f0 == base.to_uni());
  CHECK(l67.fiber_hZ == UniPoly::variable("x"));

  CHECK_THROWS_AS(linearize_along_line(PlanarVectorField{x, x}), ShapeError);
  CHECK_THROWS_AS(linearize_along_line(PlanarVectorField{y, y}), ShapeError);
}

TEST_CASE("system_derivative and system_dlog", "[planar]") {
  CHECK(system_derivative(tangent, BiRatFunc(x)) == BiRatFunc(tangent.fx));
  CHECK(system_derivative(tangent, BiRatFunc(y)) == BiRatFunc(tangent.fy));
  CHECK(system_dlog(tangent, BiRatFunc(y)) == BiRatFunc(x + y * Rational(1, 2)));
  CHECK(system_dlog(tangent, BiRatFunc(y * y)) == BiRatFunc(x * Rational(2) + y));
  CHECK(system_dlog(tangent, BiRatFunc::constant(4)).is_zero());
  CHECK_THROWS_AS(system_dlog(tangent, BiRatFunc()), DomainError);

  BiRatFunc h1 = BiRatFunc::normalize(x + y, x * y - one), h2 = BiRatFunc::normalize(y * y, x + one);
  CHECK(system_derivative(tangent, h1 * h2) ==
        system_derivative(tangent, h1) * h2 + h1 * system_derivative(tangent, h2));
}

TEST_CASE("foliation_linearize", "[planar]") {
  CHECK(foliation_linearize(tangent, dy).cofactor_c == BiRatFunc(x + y));
  PlanarVectorField fiberwise{x * x - one, y * (x * x + one)};
  CHECK(foliation_linearize(fiberwise, dy).cofactor_c == BiRatFunc(x * x + one));
  CHECK(foliation_linearize(dx, dy).cofactor_c.is_zero());
  CHECK_THROWS_AS(foliation_linearize(tangent, PlanarVectorField{}), DomainError);
  // [dy, v] has an x-component when fx depends on y.
  CHECK_THROWS_AS(foliation_linearize(PlanarVectorField{y, BiPoly()}, dy), DomainError);
  // Restricted to y = 0 the cofactor is the linearized fiber coefficient.
  CHECK(foliation_linearize(tangent, dy).cofactor_c.restrict_y0() ==
        RatFunc(linearize_along_line(tangent).fiber_hZ));
}

TEST_CASE("verify_gauge_identity", "[planar]") {
  BiRatFunc a = BiRatFunc(x + y);
  for (long c : {-3L, 0L, 1L, 5L})
    CHECK_FALSE(verify_gauge_identity(tangent, a, BiRatFunc(y), c, 1));
  CHECK(gauge_transform(tangent, a, BiRatFunc(y)) == BiRatFunc(y * Rational(1, 2)));

  CHECK(verify_gauge_identity(tangent, BiRatFunc(), BiRatFunc::constant(1), 0, 1));
  CHECK_FALSE(verify_gauge_identity(tangent, BiRatFunc(x), BiRatFunc::constant(1), 0, 1));

  BiRatFunc h0 = BiRatFunc::normalize(x * y + one, x - y);
  Rational c = Rational(3, 2);
  long k = 3;
  BiRatFunc built = (BiRatFunc::constant(c) + system_dlog(tangent, h0)) * Rational(1, k);
  CHECK(verify_gauge_identity(tangent, built, h0, c, k));

  CHECK_THROWS_AS(verify_gauge_identity(tangent, a, BiRatFunc(), 0, 1), DomainError);
  CHECK_THROWS_AS(verify_gauge_identity(tangent, a, BiRatFunc(y), 0, 0), DomainError);
}

TEST_CASE("classify_invariant_line_lift", "[planar]") {
  auto v = classify_invariant_line_lift(tangent);
  CHECK(v.conclusion == Conclusion::orthogonal_to_constants);
  CHECK(v.base.orthogonal);
  CHECK(v.fibration.status == SearchStatus::none);
  CHECK(v.fibration.completeness_case == CompletenessCase::A);

  CHECK(classify_invariant_line_lift(PlanarVectorField{base + y, x * y + x * y * y}).conclusion ==
        Conclusion::orthogonal_to_constants);

  auto fails = classify_invariant_line_lift(PlanarVectorField{x * x * (x - one) + y, x * y});
  CHECK(fails.conclusion == Conclusion::inconclusive_for_lift);
  CHECK(*fails.fibration.beta == 0);

  CHECK(classify_invariant_line_lift(PlanarVectorField{x * (x - one), x * y}).conclusion ==
        Conclusion::base_nonorthogonal_criterion_inapplicable);
  CHECK_THROWS_AS(classify_invariant_line_lift(PlanarVectorField{x, one}), ShapeError);
}

TEST_CASE("gauge step on the tangent system", "[planar]") {
  // The tangent cofactor x + y gauged by h = y leaves y/2. The literal
  // restriction to y = 0 of the two cofactors differs (x versus 0), so only
  // the statuses of the valuation-adjusted data are comparable.
  BiRatFunc a = foliation_linearize(tangent, dy).cofactor_c;
  BiRatFunc b = gauge_transform(tangent, a, BiRatFunc(y));
  CHECK(b == BiRatFunc(y * Rational(1, 2)));
  RatFunc f0 = linearize_along_line(tangent).base_f0;
  auto sa = beta_search_log(f0, a.restrict_y0(), ResidueClass::rational);
  auto sb = beta_search_log(f0, b.restrict_y0(), ResidueClass::rational);
  CHECK(sa.status == SearchStatus::none);
  CHECK(sb.status == SearchStatus::found);
  // Dividing the gauged cofactor by y (its valuation along the line) gives
  // 1/2, and scaling by 2 gives the same status as the integer cofactor 1.
  RatFunc b_shift = (b / BiRatFunc(y)).restrict_y0();
  CHECK(beta_search_log(f0, b_shift, ResidueClass::rational).status ==
        beta_search_log(f0, b_shift * Rational(2), ResidueClass::rational).status);
}

TEST_CASE("transform_affine preserves the invariant line", "[planar]") {
  PlanarVectorField t = transform_affine(tangent, 2, 3, 5);
  CHECK(invariant_line(t).invariant);
  CHECK(classify_invariant_line_lift(t).conclusion == Conclusion::orthogonal_to_constants);
  CHECK_THROWS_AS(transform_affine(tangent, 0, 1, 1), DomainError);
}
