#include <gtest/gtest.h>

#include <random>

#include "toricred/errors.hpp"
#include "toricred/factor.hpp"
#include "toricred/upoly.hpp"

using namespace toricred;

namespace {

UPoly P(std::vector<long> c) {
  std::vector<Rational> r;
  for (auto v : c) r.emplace_back(v);
  return UPoly(r, "x");
}

UPoly random_poly(std::mt19937_64& rng, int deg, int bound) {
  std::uniform_int_distribution<long> c(-bound, bound);
  std::vector<long> v(static_cast<std::size_t>(deg) + 1);
  for (auto& x : v) x = c(rng);
  if (v.back() == 0) v.back() = 1;
  return P(v);
}

}  // namespace

TEST(UPoly, Gcd) {
  EXPECT_EQ(polynomial_gcd(P({-1, 1}) * P({2, 1}), P({-1, 1}) * P({3, 1})), P({-1, 1}));
  EXPECT_EQ(polynomial_gcd(P({1, 0, 1}), P({-1, 1})), P({1}));
  EXPECT_EQ(polynomial_gcd(P({4, 2}), UPoly({}, "x")), P({2, 1}));
  EXPECT_THROW(polynomial_gcd(UPoly(), UPoly()), PreconditionError);
}

TEST(UPoly, SquareFreePart) {
  EXPECT_EQ(square_free_part(P({-1, 1}).pow(2) * P({2, 1})), P({-1, 1}) * P({2, 1}));
  EXPECT_EQ(square_free_part(P({1, 0, 1})), P({1, 0, 1}));
  EXPECT_EQ(square_free_part(P({7})), P({1}));
  EXPECT_THROW(square_free_part(UPoly()), PreconditionError);
}

TEST(UPoly, SquareFreePartIsCoprimeToDerivative) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 30; ++i) {
    UPoly f = random_poly(rng, 2, 5).pow(2) * random_poly(rng, 3, 5);
    if (f.degree() < 1) continue;
    UPoly s = square_free_part(f);
    if (s.degree() >= 1) EXPECT_EQ(polynomial_gcd(s, s.derivative()).degree(), 0);
  }
}

TEST(Factor, SmallExamples) {
  auto fl = factor_over_rationals(P({-1, 0, 1}));
  ASSERT_EQ(fl.factors.size(), 2u);
  EXPECT_EQ(fl.factors[0].first.degree(), 1);
  EXPECT_EQ(fl.factors[1].first.degree(), 1);
  EXPECT_EQ(factor_over_rationals(P({1, 0, 1})).factors.size(), 1u);
  EXPECT_THROW(factor_over_rationals(UPoly()), PreconditionError);
}

// Degree-9 non-monomial factor of t^7 * (bp restricted to um = 1) in the worked example.
TEST(Factor, WorkedExampleFactorIsIrreducible) {
  UPoly f = P({20, 31, 12, 0, 14, 14, 7, -9, 1, 1});
  auto fl = factor_over_rationals(f);
  ASSERT_EQ(fl.factors.size(), 1u);
  EXPECT_EQ(fl.factors[0].first.degree(), 9);
  EXPECT_EQ(fl.factors[0].second, 1);
}

TEST(Factor, SwinnertonDyerStyleNeedsRecombination) {
  // Minimal polynomial of sqrt(2) + sqrt(3): irreducible over Q, reducible
  // modulo every prime.
  auto fl = factor_over_rationals(P({1, 0, -10, 0, 1}));
  ASSERT_EQ(fl.factors.size(), 1u);
  EXPECT_EQ(fl.factors[0].first.degree(), 4);
}

TEST(FactorProperties, ProductReproducesInput) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 40; ++i) {
    UPoly f = random_poly(rng, 2, 6) * random_poly(rng, 3, 6) * random_poly(rng, 1, 3).pow(2);
    if (f.is_zero()) continue;
    auto fl = factor_over_rationals(f);
    UPoly back = fl.expand("x");
    EXPECT_EQ(back, f) << f.to_string();
    for (const auto& [g, m] : fl.factors) {
      EXPECT_GT(g.leading_coefficient(), 0);
      EXPECT_EQ(g, g.primitive());
      if (g.degree() >= 2 && g.degree() <= 3) EXPECT_TRUE(rational_roots(g).empty()) << g.to_string();
    }
  }
}

TEST(FactorProperties, CountStableUnderShift) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 20; ++i) {
    UPoly f = random_poly(rng, 3, 5) * random_poly(rng, 4, 5);
    if (f.is_zero()) continue;
    auto a = factor_over_rationals(f);
    auto b = factor_over_rationals(f.translate(3));
    EXPECT_EQ(a.factors.size(), b.factors.size()) << f.to_string();
  }
}

TEST(RationalRoots, Examples) {
  auto r = rational_roots(P({-4, 2}));
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].value, 2);
  EXPECT_EQ(r[0].multiplicity, 1);
  EXPECT_TRUE(rational_roots(P({-2, 0, 1})).empty());
  auto s = rational_roots(P({0, -1, 1}));
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0].value, 0);
  EXPECT_EQ(s[1].value, 1);
  auto m = rational_roots(P({-1, 2}).pow(3) * P({1, 0, 1}));
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[0].value, Rational(1, 2));
  EXPECT_EQ(m[0].multiplicity, 3);
  EXPECT_THROW(rational_roots(UPoly()), PreconditionError);
}
