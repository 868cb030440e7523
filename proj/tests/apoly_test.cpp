#include <gtest/gtest.h>

#include "qtwist/apoly/apoly.hpp"
#include "qtwist/errors.hpp"
#include "qtwist/exactalg/poly_io.hpp"
#include "qtwist/jones/jones.hpp"
#include "test_util.hpp"

using namespace qtwist;
using namespace qtwist::apoly;
using exactalg::parse_poly;
using exactalg::substitute;

namespace {

LaurentPoly P(const char* text) { return parse_poly(text); }

RatFunc at_ones(const LaurentPoly& f) { return substitute(f, {{Var::l, RatFunc(1)}, {Var::m, RatFunc(1)}}); }

}  // namespace

TEST(Coefficients, CAndDAtOne) {
  auto [c, d] = cd_coefficients();
  EXPECT_EQ(at_ones(c), RatFunc(8));
  EXPECT_EQ(at_ones(d), RatFunc(16));
}

TEST(Coefficients, AClearsToC) {
  auto [c, d] = cd_coefficients();
  RatFunc lhs = substitute(a_coefficient(), {{Var::x, solve_meridian_x()}}) * RatFunc(P("m^2 + l").pow(2));
  EXPECT_EQ(lhs, RatFunc(c));
  EXPECT_EQ(d, P("m^4") * P("m^2 + l").pow(4));
}

TEST(APolynomial, InitialConditions) {
  EXPECT_EQ(a_polynomial(1).poly, P("l + m^6"));
  EXPECT_EQ(a_polynomial(0).poly, LaurentPoly(1));
  EXPECT_EQ(a_polynomial(-1).poly, P("-l + l*m^2 + m^4 + 2*l*m^4 + l^2*m^4 + l*m^6 - l*m^8"));
  EXPECT_EQ(a_polynomial(2).poly.max_degree(Var::l), 3);
  EXPECT_EQ(a_polynomial(1).poly.to_string(), "l + m^6");
}

TEST(APolynomial, OneRecursionStep) {
  auto [c, d] = cd_coefficients();
  EXPECT_EQ(a_polynomial(3).poly, c * a_polynomial(2).poly - d * a_polynomial(1).poly);
  EXPECT_EQ(a_polynomial(-2).poly, c * a_polynomial(-1).poly - d);
  EXPECT_EQ(a_polynomial(3).poly,
            P("l^5 + l^4*m^14 - l^4*m^12 + 3*l^4*m^4 + 4*l^4*m^2 - 2*l^4 - 2*l^3*m^18 + 5*l^3*m^16"
              " + l^3*m^14 - 4*l^3*m^12 + 6*l^3*m^8 + 5*l^3*m^6 + 2*l^3*m^4 - 4*l^3*m^2 + l^3"
              " + l^2*m^22 - 4*l^2*m^20 + 2*l^2*m^18 + 5*l^2*m^16 + 6*l^2*m^14 - 4*l^2*m^10"
              " + l^2*m^8 + 5*l^2*m^6 - 2*l^2*m^4 - 2*l*m^22 + 4*l*m^20 + 3*l*m^18 - l*m^10"
              " + l*m^8 + m^22"));
}

TEST(APolynomial, LDegree) {
  for (int p = -6; p <= 6; ++p) {
    if (p == 0) continue;
    int expected = p > 0 ? 2 * p - 1 : -2 * p;
    EXPECT_EQ(a_polynomial(p).poly.max_degree(Var::l), expected) << p;
  }
}

TEST(MeridianX, Values) {
  RatFunc xh = solve_meridian_x();
  EXPECT_EQ(substitute(xh, {{Var::l, RatFunc(1)}}), RatFunc(1));
  EXPECT_EQ(substitute(xh, {{Var::m, RatFunc(1)}}), RatFunc(1));
}

TEST(MeridianX, SolvesFirstRatioAtQOne) {
  // f_0(1, m^2, x, y) = x (1 - 1/(x m^2)) / (1 - x/m^2)
  RatFunc xh = solve_meridian_x();
  RatFunc m2(P("m^2"));
  RatFunc f0 = xh * (RatFunc(1) - (xh * m2).inverse()) / (RatFunc(1) - xh / m2);
  EXPECT_EQ(f0, RatFunc(P("l")));
}

TEST(HPolynomial, SmallCases) {
  EXPECT_EQ(h_polynomial(0).poly, LaurentPoly(1));
  EXPECT_EQ(h_polynomial(1).poly, P("m^2 - x + m^-2"));
  EXPECT_EQ(h_polynomial(-1).poly, P("x^2 + x - x*m^2 - x*m^-2 + 1"));
}

TEST(HPolynomial, ThreeTermRecursionBothWays) {
  LaurentPoly am2 = a_coefficient() * P("m^-2");
  for (int p = -5; p <= 5; ++p) {
    EXPECT_EQ(h_polynomial(p).poly, am2 * h_polynomial(p - 1).poly - h_polynomial(p - 2).poly) << p;
  }
}

TEST(QuadQuotient, RelationAndInverse) {
  QuadQuotient y = QuadQuotient::y();
  QuadQuotient y2 = y * y;
  RatFunc am2(a_coefficient() * P("m^-2"));
  EXPECT_EQ(y2.alpha(), am2);
  EXPECT_EQ(y2.beta(), RatFunc(-1));
  QuadQuotient one = y * QuadQuotient::y_inverse();
  EXPECT_EQ(one.alpha(), RatFunc(0));
  EXPECT_EQ(one.beta(), RatFunc(1));
  EXPECT_EQ(QuadQuotient::reduce(P("y^2 + 1")), am2 * y);
  EXPECT_EQ(QuadQuotient::y_power(-3) * QuadQuotient::y_power(3), QuadQuotient::y_power(0));
}

TEST(HViaReduction, MatchesRecursion) {
  for (int p = -5; p <= 5; ++p) {
    if (p == 0) continue;
    EXPECT_EQ(h_via_reduction(p), h_polynomial(p)) << p;
  }
  EXPECT_THROW((void)h_via_reduction(0), DomainError);
}

TEST(BPolynomial, SmallCases) {
  EXPECT_EQ(b_polynomial(0).poly, LaurentPoly(1));
  EXPECT_EQ(b_polynomial(1).poly, P("l + m^6"));
  EXPECT_EQ(b_polynomial(-1).poly, a_polynomial(-1).poly);
}

TEST(BPolynomial, RecursionLaw) {
  auto [c, d] = cd_coefficients();
  for (int p = 2; p <= 6; ++p) {
    RatFunc rhs = RatFunc(c) * b_positive_branch(p - 1) - RatFunc(d) * b_positive_branch(p - 2);
    EXPECT_EQ(RatFunc(b_polynomial(p).poly), rhs) << p;
  }
  EXPECT_EQ(b_positive_branch(0), RatFunc(1, P("m^2 + l")));
  EXPECT_EQ(b_positive_branch(3), RatFunc(b_polynomial(3).poly));
  EXPECT_NE(b_polynomial(2).poly, c * b_polynomial(1).poly - d * b_polynomial(0).poly);
  for (int p = -2; p >= -6; --p) {
    EXPECT_EQ(b_polynomial(p).poly, c * b_polynomial(p + 1).poly - d * b_polynomial(p + 2).poly) << p;
  }
}

TEST(VerifyAj, Range) {
  for (int p = -6; p <= 6; ++p) {
    AjReport r = verify_aj(p);
    EXPECT_TRUE(r.equal) << p;
    EXPECT_TRUE(r.diff.empty()) << p;
  }
}

TEST(VerifyAj, UnitAndDiff) {
  EXPECT_EQ(unit_ratio(P("-l^2 - l*m^6"), P("l + m^6"))->coeff, -1);
  auto diff = coefficient_diff(P("l + m^6"), P("l + 2*m^6 + m"));
  ASSERT_EQ(diff.size(), 2u);
}

TEST(Reciprocity, InitialConditions) {
  for (int p = -1; p <= 2; ++p) EXPECT_TRUE(is_reciprocal(a_polynomial(p).poly)) << p;
  EXPECT_FALSE(is_reciprocal(P("l + m^6 + m")));
}
