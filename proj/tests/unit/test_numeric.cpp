#include <gtest/gtest.h>

#include <cmath>

#include "testing.hpp"
#include "toricred/errors.hpp"
#include "toricred/numeric.hpp"

using namespace toricred;

namespace {

UPoly P(std::vector<long> c) {
  std::vector<Rational> r;
  for (long v : c) r.emplace_back(v);
  return UPoly(r, "x");
}

int total(const std::vector<ApproxRoot>& roots) {
  int t = 0;
  for (const auto& r : roots) t += r.multiplicity;
  return t;
}

bool has_root(const OracleRootSet& s, Complex x, Complex y, double tol) {
  for (const auto& r : s.roots) {
    if (std::abs(r.value[0] - x) < tol * std::max(1.0, std::abs(x)) &&
        std::abs(r.value[1] - y) < tol * std::max(1.0, std::abs(y)))
      return true;
  }
  return false;
}

}  // namespace

TEST(ComplexRoots, Examples) {
  auto a = complex_roots(P({1, 0, 1}));
  ASSERT_EQ(a.size(), 2u);
  for (const auto& r : a) {
    EXPECT_NEAR(std::abs(r.value.real()), 0.0, 1e-9);
    EXPECT_NEAR(std::abs(r.value.imag()), 1.0, 1e-9);
  }
  auto b = complex_roots(P({1, -2, 1}));
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b[0].multiplicity, 2);
  EXPECT_NEAR(std::abs(b[0].value - Complex(1, 0)), 0.0, 1e-9);
  auto c = complex_roots(P({-1, 0, 0, 1}));
  ASSERT_EQ(c.size(), 3u);
  for (const auto& r : c) EXPECT_NEAR(std::abs(std::pow(r.value, 3) - Complex(1, 0)), 0.0, 1e-9);
  EXPECT_THROW(complex_roots(P({3})), PreconditionError);
}

TEST(ComplexRootsProperties, MultisetSizeEqualsDegree) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> coef(-20, 20), deg(1, 14);
  for (int i = 0; i < 60; ++i) {
    std::vector<long> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& v : c) v = coef(rng);
    if (c.back() == 0) c.back() = 1;
    UPoly f = P(c);
    if (i % 3 == 0) f = f * P({-2, 1}) * P({-2, 1});
    auto roots = complex_roots(f);
    EXPECT_EQ(total(roots), f.degree());
    for (const auto& r : roots) EXPECT_LT(r.residual, 1e-6);
  }
}

TEST(TorusRoots, LinearSystem) {
  auto s = torus_roots_2d(fx::system_of("x+y-3", "x-y-1"));
  ASSERT_EQ(s.roots.size(), 1u);
  EXPECT_EQ(s.total_with_multiplicity, 1);
  EXPECT_TRUE(has_root(s, {2, 0}, {1, 0}, 1e-8));
  EXPECT_EQ(count_torus_roots_oracle(fx::system_of("x+y-3", "x-y-1")), 1);
}

TEST(TorusRoots, Hyperbola) {
  auto s = torus_roots_2d(fx::system_of("x*y-1", "x-y"));
  EXPECT_EQ(s.total_with_multiplicity, 2);
  EXPECT_TRUE(has_root(s, {1, 0}, {1, 0}, 1e-8));
  EXPECT_TRUE(has_root(s, {-1, 0}, {-1, 0}, 1e-8));
}

TEST(TorusRoots, WorkedExampleHasNineRoots) {
  auto F = fx::worked_system();
  auto s = torus_roots_2d(F);
  EXPECT_EQ(s.total_with_multiplicity, 9);
  EXPECT_EQ(s.roots.size(), 9u);
  for (const auto& r : s.roots) {
    EXPECT_LT(r.residual, 1e-6);
    EXPECT_GT(std::abs(r.value[0]), 1e-8);
    EXPECT_GT(std::abs(r.value[1]), 1e-8);
  }
  // (1,0) and (0,1) solve the system but lie off the torus
  EXPECT_FALSE(s.coordinate_suspects.empty());
}

TEST(TorusRoots, MultipleRoot) {
  // tangency of the parabola y = x^2 and the line y = 2x - 1 at (1,1)
  auto s = torus_roots_2d(fx::system_of("y-x^2", "y-2*x+1"));
  ASSERT_EQ(s.roots.size(), 1u);
  EXPECT_EQ(s.roots[0].multiplicity, 2);
}

TEST(TorusRoots, DegenerateInputs) {
  EXPECT_THROW(torus_roots_2d(fx::system_of("x-1", "2*x-2")), DegenerateError);
  EXPECT_THROW(torus_roots_2d(fx::system_of("x+y-1", "2*x+2*y-2")), DegenerateError);
  try {
    count_torus_roots_oracle(fx::system_of("x+y-1", "2*x+2*y-2"));
    FAIL();
  } catch (const DegenerateError& e) {
    EXPECT_NE(std::string(e.what()).find("positive-dimensional or degenerate"), std::string::npos);
  }
}

TEST(TorusRootsProperties, PlantedRationalRootsAreFound) {
  std::mt19937_64 rng(13);
  const double tol = 1e-6;
  int done = 0;
  while (done < 25) {
    const std::vector<Rational> z{fx::random_nonzero_rational(rng), fx::random_nonzero_rational(rng)};
    Support s1 = fx::random_support(rng, 2, 4, 3), s2 = fx::random_support(rng, 2, 4, 3);
    if (s1.size() < 2 || s2.size() < 2 || mixed_volume(SupportTuple{s1, s2}) == 0) continue;
    std::vector<MPoly> F{fx::planted_poly(rng, s1, z), fx::planted_poly(rng, s2, z)};
    OracleRootSet roots;
    try {
      roots = torus_roots_2d(F, {tol, 1e-8, 1});
    } catch (const DegenerateError&) {
      continue;
    }
    ++done;
    const Complex zx(z[0].get_d(), 0), zy(z[1].get_d(), 0);
    EXPECT_TRUE(has_root(roots, zx, zy, 10 * tol)) << F[0].to_string() << " ; " << F[1].to_string();
    for (const auto& r : roots.roots) EXPECT_LT(r.residual, tol);
    int sum = 0;
    for (const auto& r : roots.roots) sum += r.multiplicity;
    EXPECT_EQ(sum, roots.total_with_multiplicity);
    // halving the tolerance leaves the count unchanged
    EXPECT_EQ(torus_roots_2d(F, {tol / 2, 1e-8, 1}).total_with_multiplicity, roots.total_with_multiplicity);
  }
}

TEST(TorusRootsProperties, GenericCountMatchesMixedVolume) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 25; ++i) {
    auto F = fx::random_system(rng);
    SupportTuple E{Support([&] {
                     std::vector<Point> p;
                     for (const auto& [e, c] : F[0].terms()) p.push_back({e[0], e[1]});
                     return p;
                   }()),
                   Support([&] {
                     std::vector<Point> p;
                     for (const auto& [e, c] : F[1].terms()) p.push_back({e[0], e[1]});
                     return p;
                   }())};
    EXPECT_EQ(Integer(count_torus_roots_oracle(F)), mixed_volume(E)) << F[0].to_string() << " ; " << F[1].to_string();
  }
}
