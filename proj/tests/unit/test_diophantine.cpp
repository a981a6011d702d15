#include <gtest/gtest.h>

#include "testing.hpp"
#include "toricred/diophantine.hpp"
#include "toricred/errors.hpp"

using namespace toricred;

namespace {

using Solutions = std::vector<std::vector<Integer>>;

Solutions points_to_solutions(const std::vector<std::pair<long, long>>& pts) {
  Solutions out;
  for (const auto& [a, b] : pts) out.push_back({Integer(a), Integer(b)});
  std::sort(out.begin(), out.end());
  return out;
}

UPoly T(std::vector<long> c) {
  std::vector<Rational> r;
  for (long v : c) r.emplace_back(v);
  return UPoly(r);
}

bool divides(const UPoly& d, const UPoly& f) {
  // f mod d == 0 via repeated leading-term elimination
  UPoly r = f;
  while (!r.is_zero() && r.degree() >= d.degree()) {
    const Rational q = r.leading_coefficient() / d.leading_coefficient();
    r -= UPoly::monomial(r.degree() - d.degree(), q) * d;
  }
  return r.is_zero();
}

}  // namespace

TEST(CoordinateEliminant, Examples) {
  UPoly e = coordinate_eliminant(fx::system_of("x^2+y^2-5", "x*y-2"), 0);
  EXPECT_TRUE(divides(T({-1, 1}) * T({1, 1}) * T({-2, 1}) * T({2, 1}), e)) << e.to_string();
  UPoly l = coordinate_eliminant(fx::system_of("x-1", "y-1"), 0);
  EXPECT_EQ(l.degree(), 1);
  EXPECT_EQ(l.evaluate(1), 0);
  try {
    coordinate_eliminant(fx::system_of("x+y-1", "2*x+2*y-2"), 0);
    FAIL();
  } catch (const DegenerateError& err) {
    EXPECT_EQ(err.reason(), DegenerateError::Reason::PositiveDimensional);
    EXPECT_NE(std::string(err.what()).find("GCP fallback"), std::string::npos);
  }
}

TEST(IntegerRoots, Examples) {
  auto r = integer_roots(fx::system_of("x^2+y^2-5", "x*y-2"));
  EXPECT_EQ(r.solutions, (Solutions{{-2, -1}, {-1, -2}, {1, 2}, {2, 1}}));
  EXPECT_EQ(r.per_coordinate_eliminants.size(), 2u);
  EXPECT_FALSE(r.method.empty());
  EXPECT_EQ(integer_roots(fx::system_of("x-1", "y-1")).solutions, (Solutions{{1, 1}}));
  auto empty = integer_roots(fx::system_of("x^2+1", "y-1"));
  EXPECT_TRUE(empty.solutions.empty());
  EXPECT_EQ(empty.certificate, Certificate::CompleteUnderHypotheses);
  EXPECT_TRUE(empty.hypothesis_checks.square_system);
  EXPECT_THROW(integer_roots(fx::system_of("x+y-1", "2*x+2*y-2")), DegenerateError);
}

TEST(IntegerRoots, CandidateCap) {
  DiophantineOptions opts;
  opts.max_candidates = 3;
  EXPECT_THROW(integer_roots(fx::system_of("x^2+y^2-5", "x*y-2"), opts), CapExceeded);
}

TEST(IntegerRootsProperties, PlantedSolutionsRecovered) {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 20; ++i) {
    std::vector<std::pair<long, long>> pts;
    auto F = fx::planted_integer_system(rng, pts, i % 2 == 1);
    auto r = integer_roots(F);
    EXPECT_EQ(r.solutions, points_to_solutions(pts)) << F[0].to_string() << " ; " << F[1].to_string();
    EXPECT_EQ(r.solutions, fx::brute_force_integer_roots(F, 8));
    for (const auto& s : r.solutions) {
      const Rational pt[2] = {Rational(s[0]), Rational(s[1])};
      for (const auto& f : F) EXPECT_EQ(f.evaluate(std::span<const Rational>(pt, 2)), 0);
    }
  }
}

TEST(IntegerRootsProperties, AgreesWithBoxSearch) {
  std::mt19937_64 rng(67);
  const long B = 10;
  int done = 0;
  std::uniform_int_distribution<int> coord(-4, 4);
  while (done < 15) {
    auto F = fx::random_system(rng, 4, 2);
    if (done % 2 == 1) {
      // plant an integer root in both equations
      std::vector<Rational> z{Rational(coord(rng)), Rational(coord(rng))};
      if (z[0] == 0 || z[1] == 0) continue;
      F = {fx::planted_poly(rng, fx::supports_of_poly(F[0]), z), fx::planted_poly(rng, fx::supports_of_poly(F[1]), z)};
    }
    DiophantineResult r;
    try {
      r = integer_roots(F);
    } catch (const DegenerateError&) {
      continue;
    }
    ++done;
    if (done % 2 == 0) EXPECT_FALSE(r.solutions.empty());
    Solutions in_box;
    for (const auto& s : r.solutions) {
      if (abs(s[0]) <= B && abs(s[1]) <= B) in_box.push_back(s);
    }
    EXPECT_EQ(in_box, fx::brute_force_integer_roots(F, B)) << F[0].to_string() << " ; " << F[1].to_string();
  }
}

TEST(IntegerRootsProperties, EliminantsContainOracleCoordinates) {
  std::mt19937_64 rng(71);
  int done = 0;
  while (done < 15) {
    auto F = fx::random_system(rng, 4, 2);
    OracleRootSet roots;
    try {
      roots = torus_roots_2d(F);
    } catch (const Error&) {
      continue;
    }
    std::vector<UPoly> elim;
    try {
      elim = {coordinate_eliminant(F, 0), coordinate_eliminant(F, 1)};
    } catch (const DegenerateError&) {
      continue;
    }
    ++done;
    for (std::size_t i = 0; i < 2; ++i) {
      if (elim[i].degree() < 1) {
        EXPECT_TRUE(roots.roots.empty());
        continue;
      }
      auto cr = complex_roots(elim[i]);
      for (const auto& r : roots.roots) {
        const Complex z = r.value[i];
        const bool found = std::any_of(cr.begin(), cr.end(), [&](const ApproxRoot& c) {
          return std::abs(c.value - z) <= 1e-5 * std::max(1.0, std::abs(z));
        });
        EXPECT_TRUE(found) << F[0].to_string() << " ; " << F[1].to_string();
      }
    }
  }
}
