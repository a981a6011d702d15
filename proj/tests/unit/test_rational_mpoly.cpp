#include <gtest/gtest.h>

#include "testing.hpp"
#include "toricred/errors.hpp"
#include "toricred/mpoly.hpp"

using namespace toricred;
using toricred::fx::kXY;

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(to_string(parse_rational("-6/4")), "-3/2");
  EXPECT_EQ(to_string(parse_rational("12")), "12");
  EXPECT_THROW(parse_rational("1/0"), ParseError);
}

TEST(Parse, WorkedExampleHasThreeTerms) {
  MPoly f = parse_polynomial("x^3+y^4-1", kXY);
  EXPECT_EQ(f.num_terms(), 3u);
  EXPECT_EQ(f.coefficient({3, 0}), 1);
  EXPECT_EQ(f.coefficient({0, 0}), -1);
}

TEST(Parse, ZeroAndProducts) {
  EXPECT_TRUE(parse_polynomial("0", kXY).is_zero());
  MPoly g = parse_polynomial("2*x*y - x", kXY);
  EXPECT_EQ(g.num_terms(), 2u);
  EXPECT_EQ(g.coefficient({1, 1}), 2);
  EXPECT_EQ(parse_polynomial("3/2 x^2 y", kXY).coefficient({2, 1}), Rational(3, 2));
  EXPECT_EQ(parse_polynomial("x*x - x^2", kXY).is_zero(), true);
}

TEST(Parse, ErrorsCarryPosition) {
  try {
    parse_polynomial("x + z", kXY);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  EXPECT_THROW(parse_polynomial("x +* y", kXY), ParseError);
  EXPECT_THROW(parse_polynomial("x^", kXY), ParseError);
  EXPECT_THROW(parse_polynomial("", kXY), ParseError);
}

TEST(Parse, PrintRoundTrip) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    auto F = fx::random_system(rng);
    for (const auto& f : F) EXPECT_EQ(parse_polynomial(f.to_string(), kXY), f) << f.to_string();
  }
  EXPECT_EQ(parse_polynomial("-x^2 + 3/2*x*y - 1", kXY).to_string(), "-x^2 + 3/2*x*y - 1");
}

TEST(Arithmetic, DivisionAndContent) {
  MPoly a = parse_polynomial("x^2 - y^2", kXY);
  MPoly b = parse_polynomial("x + y", kXY);
  EXPECT_EQ(divide_exact(a, b), parse_polynomial("x - y", kXY));
  EXPECT_FALSE(try_divide(a, parse_polynomial("x + 2", kXY)).has_value());
  MPoly c = parse_polynomial("6*x^2*y + 4*x*y^3", kXY);
  EXPECT_EQ(c.content(), 2);
  EXPECT_EQ(c.monomial_gcd(), (Exponent{1, 1}));
  EXPECT_EQ(c.divide_by_monomial(c.monomial_gcd()), parse_polynomial("6*x + 4*y^2", kXY));
}

TEST(Resultant, SmallExamples) {
  const std::vector<std::string> x{"x"};
  EXPECT_EQ(sylvester_resultant(parse_polynomial("x-3", x), parse_polynomial("x-5", x), "x"),
            MPoly::constant(x, -2));
  EXPECT_TRUE(sylvester_resultant(parse_polynomial("x^2-1", x), parse_polynomial("x-1", x), "x").is_zero());
  EXPECT_EQ(sylvester_resultant(parse_polynomial("y^2-x", kXY), parse_polynomial("y-1", kXY), "y"),
            parse_polynomial("1-x", kXY));
}

TEST(Resultant, Errors) {
  EXPECT_THROW(sylvester_resultant(parse_polynomial("x", kXY), parse_polynomial("x+1", kXY), "y"), PreconditionError);
  EXPECT_THROW(sylvester_resultant(parse_polynomial("0", kXY), parse_polynomial("y+1", kXY), "y"), PreconditionError);
  EXPECT_EQ(sylvester_resultant(parse_polynomial("3", kXY), parse_polynomial("y^2+1", kXY), "y"),
            MPoly::constant(kXY, 9));
}

// Res(prod (y - r_i), g) = prod g(r_i) for monic f.
TEST(Resultant, MatchesRootProduct) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> r(-4, 4);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Rational> roots;
    MPoly f = MPoly::constant(kXY, 1);
    for (int k = 0; k < 3; ++k) {
      roots.push_back(r(rng));
      f = f * (MPoly::variable(kXY, 1) - MPoly::constant(kXY, roots.back()));
    }
    MPoly g = fx::random_poly(rng, fx::random_support(rng, 2, 4, 2));
    if (g.degree(1) < 1) continue;
    MPoly expected = MPoly::constant(kXY, 1);
    for (const auto& ri : roots) expected = expected * g.evaluate(1, ri);
    EXPECT_EQ(sylvester_resultant(f, g, 1), expected);
  }
}

TEST(ResultantProperties, AntisymmetryAndMultiplicativity) {
  std::mt19937_64 rng(3);
  int checked = 0;
  for (int trial = 0; trial < 60 && checked < 25; ++trial) {
    auto F = fx::random_system(rng, 4, 2);
    MPoly h = fx::random_poly(rng, fx::random_support(rng, 2, 3, 2));
    const auto& f = F[0];
    const auto& g = F[1];
    if (f.degree(1) < 1 || g.degree(1) < 1 || h.degree(1) < 1) continue;
    ++checked;
    const int sign = (f.degree(1) * g.degree(1)) % 2 ? -1 : 1;
    EXPECT_EQ(sylvester_resultant(f, g, 1), sylvester_resultant(g, f, 1) * Rational(sign));
    EXPECT_EQ(sylvester_resultant(f, g * h, 1), sylvester_resultant(f, g, 1) * sylvester_resultant(f, h, 1));
  }
  EXPECT_GE(checked, 10);
}

TEST(ResultantProperties, PlantedCommonRootVanishes) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Rational> z{fx::random_nonzero_rational(rng), fx::random_nonzero_rational(rng)};
    Support s1 = fx::random_support(rng, 2, 4, 3), s2 = fx::random_support(rng, 2, 4, 3);
    if (s1.size() < 2 || s2.size() < 2) continue;
    MPoly f = fx::planted_poly(rng, s1, z), g = fx::planted_poly(rng, s2, z);
    if (f.degree(1) < 1 && g.degree(1) < 1) continue;
    MPoly r = sylvester_resultant(f, g, 1);
    EXPECT_EQ(r.evaluate(0, z[0]).is_zero(), true);
  }
}

TEST(Determinant, Bareiss) {
  std::vector<std::vector<MPoly>> m = {
      {parse_polynomial("x", kXY), parse_polynomial("y", kXY)},
      {parse_polynomial("1", kXY), parse_polynomial("x", kXY)}};
  EXPECT_EQ(determinant(m, kXY), parse_polynomial("x^2 - y", kXY));
  std::vector<std::vector<MPoly>> z = {
      {parse_polynomial("0", kXY), parse_polynomial("1", kXY)},
      {parse_polynomial("1", kXY), parse_polynomial("0", kXY)}};
  EXPECT_EQ(determinant(z, kXY), MPoly::constant(kXY, -1));
}
