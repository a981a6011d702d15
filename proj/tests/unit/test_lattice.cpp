#include <gtest/gtest.h>

#include "testing.hpp"
#include "toricred/errors.hpp"
#include "toricred/lattice.hpp"

using namespace toricred;
using fx::support;

namespace {

const Support E1 = support({{0, 0}, {3, 0}, {0, 4}});
const Support E2 = support({{0, 0}, {4, 0}, {0, 5}});
const Support Diag = support({{0, 0}, {1, 1}});
const Support UnitSquare = support({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
const Support Simplex = support({{0, 0}, {1, 0}, {0, 1}});

std::vector<Point> sorted(std::vector<Point> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST(Hull, Triangle) {
  Polytope P = convex_hull(E1);
  EXPECT_EQ(P.dim, 2u);
  EXPECT_EQ(sorted(P.vertices), sorted({{0, 0}, {3, 0}, {0, 4}}));
  EXPECT_EQ(P.facets.size(), 3u);
  EXPECT_EQ(P.ridges.size(), 3u);
}

TEST(Hull, DegenerateInputs) {
  Polytope pt = convex_hull(support({{5, 7}}));
  EXPECT_EQ(pt.dim, 0u);
  EXPECT_EQ(pt.vertices, (std::vector<Point>{{5, 7}}));
  Polytope seg = convex_hull(support({{0, 0}, {1, 0}, {2, 0}}));
  EXPECT_EQ(seg.dim, 1u);
  EXPECT_EQ(sorted(seg.vertices), sorted({{0, 0}, {2, 0}}));
  EXPECT_TRUE(seg.facets.empty());
  Polytope plane = convex_hull(support({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 0}}));
  EXPECT_EQ(plane.dim, 2u);
  EXPECT_EQ(plane.vertices.size(), 4u);
}

TEST(Hull, ThreeDimensionalCube) {
  std::vector<Point> pts;
  for (int a = 0; a <= 1; ++a)
    for (int b = 0; b <= 1; ++b)
      for (int c = 0; c <= 1; ++c) pts.push_back({a, b, c});
  pts.push_back({0, 0, 0});
  Polytope cube = convex_hull(Support(pts));
  EXPECT_EQ(cube.vertices.size(), 8u);
  EXPECT_EQ(cube.facets.size(), 6u);
  EXPECT_EQ(cube.ridges.size(), 12u);
  EXPECT_EQ(euclidean_volume(cube), 1);
}

TEST(Hull, FacetNormalsArePrimitiveAndInner) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = i % 2 ? 3 : 2;
    Support s = fx::random_support(rng, n, 9, 4);
    Polytope P = convex_hull(s);
    for (const auto& f : P.facets) {
      std::int64_t g = 0;
      for (auto c : f.normal) g = std::gcd(g, std::abs(c));
      EXPECT_EQ(g, 1);
      for (std::size_t k = 0; k < P.vertices.size(); ++k) {
        const auto v = dot(f.normal, P.vertices[k]);
        EXPECT_GE(v, f.offset);
        const bool on = std::find(f.vertices.begin(), f.vertices.end(), k) != f.vertices.end();
        EXPECT_EQ(v == f.offset, on);
      }
    }
    for (const auto& p : s.points()) EXPECT_TRUE(contains(P, p));
    // idempotent
    Polytope Q = convex_hull(P.vertex_support());
    EXPECT_EQ(sorted(Q.vertices), sorted(P.vertices));
    // minimal: no vertex lies in the hull of the others
    if (P.vertices.size() > 1) {
      for (std::size_t k = 0; k < P.vertices.size(); ++k) {
        std::vector<Point> rest = P.vertices;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
        EXPECT_FALSE(contains(convex_hull(Support(rest)), P.vertices[k]));
      }
    }
  }
}

TEST(Minkowski, Examples) {
  Polytope S = minkowski_sum(convex_hull(E1), convex_hull(E2));
  EXPECT_EQ(sorted(S.vertices), sorted({{0, 0}, {7, 0}, {4, 4}, {0, 9}}));
  Polytope T = minkowski_sum(convex_hull(E1), convex_hull(support({{2, -1}})));
  EXPECT_EQ(sorted(T.vertices), sorted({{2, -1}, {5, -1}, {2, 3}}));
  Polytope Sq = minkowski_sum(convex_hull(support({{0, 0}, {1, 0}})), convex_hull(support({{0, 0}, {0, 1}})));
  EXPECT_EQ(sorted(Sq.vertices), sorted(UnitSquare.points()));
}

TEST(Volume, Examples) {
  // shoelace on (0,0),(7,0),(4,4),(0,9): (28 + 36) / 2
  EXPECT_EQ(euclidean_volume(convex_hull(support({{0, 0}, {7, 0}, {4, 4}, {0, 9}}))), 32);
  EXPECT_EQ(euclidean_volume(convex_hull(UnitSquare)), 1);
  EXPECT_EQ(euclidean_volume(convex_hull(Simplex)), Rational(1, 2));
  EXPECT_EQ(euclidean_volume(convex_hull(support({{0, 0}, {3, 3}}))), 0);
}

TEST(MixedVolume, WorkedExampleNumbers) {
  EXPECT_EQ(mixed_volume(SupportTuple{E1, E2}), 16);
  EXPECT_EQ(mixed_volume(SupportTuple{E1, Diag}), 7);
  EXPECT_EQ(mixed_volume(SupportTuple{E2, Diag}), 9);
  EXPECT_EQ(mixed_volume(SupportTuple{support({{0, 0}, {1, 0}}), support({{0, 0}, {0, 1}})}), 1);
  EXPECT_EQ(mixed_volume(SupportTuple{support({{0, 0}}), support({{0, 0}})}), 0);
}

TEST(MixedVolume, AgreesWithBruteForceAreaOracle) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 100; ++i) {
    Support a = fx::random_support(rng, 2, 6, 5), b = fx::random_support(rng, 2, 6, 5);
    EXPECT_EQ(Rational(mixed_volume(SupportTuple{a, b})), fx::brute_mixed_area(a, b));
  }
}

TEST(MixedVolumeProperties, SymmetryAndMultilinearity) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = i % 3 == 0 ? 3 : 2;
    SupportTuple t;
    for (std::size_t k = 0; k < n; ++k) t.push_back(fx::random_support(rng, n, 4, 2));
    const Integer m = mixed_volume(t);
    EXPECT_GE(m, 0);
    SupportTuple perm = t;
    std::reverse(perm.begin(), perm.end());
    EXPECT_EQ(mixed_volume(perm), m);
    std::swap(perm[0], perm[1]);
    EXPECT_EQ(mixed_volume(perm), m);
    Support extra = fx::random_support(rng, n, 4, 2);
    SupportTuple sum = t, other = t;
    sum[0] = t[0] + extra;
    other[0] = extra;
    EXPECT_EQ(mixed_volume(sum), m + mixed_volume(other));
  }
}

TEST(MixedVolumeProperties, DiagonalAndDense) {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 40; ++i) {
    const std::size_t n = i % 2 ? 3 : 2;
    Support s = fx::random_support(rng, n, 6, 3);
    SupportTuple t(n, s);
    const Rational vol = euclidean_volume(convex_hull(s));
    EXPECT_EQ(Rational(mixed_volume(t)), vol * Rational(n == 2 ? 2 : 6));
  }
  for (int d1 = 1; d1 <= 4; ++d1)
    for (int d2 = 1; d2 <= 4; ++d2) {
      EXPECT_EQ(mixed_volume(SupportTuple{fx::dense_simplex(2, d1), fx::dense_simplex(2, d2)}), d1 * d2);
      for (int d3 = 1; d3 <= 4; ++d3) {
        EXPECT_EQ(mixed_volume(SupportTuple{fx::dense_simplex(3, d1), fx::dense_simplex(3, d2),
                                            fx::dense_simplex(3, d3)}),
                  d1 * d2 * d3);
      }
    }
}

TEST(FaceSupport, Examples) {
  EXPECT_EQ(face_support(E1, {0, 1}), support({{0, 0}, {3, 0}}));
  EXPECT_EQ(face_support(E1, {1, 1}), support({{0, 0}}));
  EXPECT_EQ(face_support(E1, {-1, 0}), support({{3, 0}}));
  EXPECT_THROW(face_support(E1, {0, 0}), PreconditionError);
}

TEST(PrimitiveGenerator, Examples) {
  EXPECT_EQ(primitive_generator(Point{2, 4}), (Point{1, 2}));
  EXPECT_EQ(primitive_generator(Point{-3, 0}), (Point{-1, 0}));
  std::vector<Rational> q{Rational(1, 2), Rational(1, 3)};
  EXPECT_EQ(primitive_generator(std::span<const Rational>(q)), (Point{3, 2}));
  EXPECT_THROW(primitive_generator(Point{0, 0}), PreconditionError);
}

TEST(Direction, Validity) {
  const Polytope PE = convex_hull(E1 + E2);
  EXPECT_TRUE(is_valid_direction(PE, {1, 1}));
  EXPECT_FALSE(is_valid_direction(PE, {1, 0}));
  EXPECT_TRUE(is_valid_direction(convex_hull(UnitSquare), {1, 1}));
  EXPECT_THROW(is_valid_direction(convex_hull(support({{0, 0}, {1, 1}})), {1, 0}), PreconditionError);
}

TEST(Ridges, Examples) {
  const Polytope PE = convex_hull(E1 + E2);
  auto r = ambiguity_ridges(PE, {1, 1});
  ASSERT_EQ(r.size(), 2u);
  std::vector<Point> v{r[0].vertices.at(0), r[1].vertices.at(0)};
  EXPECT_EQ(sorted(v), sorted({{7, 0}, {0, 9}}));
  auto sq = ambiguity_ridges(convex_hull(UnitSquare), {1, 2});
  ASSERT_EQ(sq.size(), 2u);
  std::vector<Point> w{sq[0].vertices.at(0), sq[1].vertices.at(0)};
  EXPECT_EQ(sorted(w), sorted({{1, 0}, {0, 1}}));
  try {
    ambiguity_ridges(PE, {1, 0});
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("(0,1)"), std::string::npos);
  }
}

TEST(RidgesProperties, SignClassesAndBoundary) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> c(-3, 3);
  int checked = 0;
  while (checked < 60) {
    const std::size_t n = checked % 2 ? 3 : 2;
    Polytope P = convex_hull(fx::random_support(rng, n, 8, 3));
    Point a(n);
    for (auto& x : a) x = c(rng);
    if (!P.full_dimensional() || std::all_of(a.begin(), a.end(), [](auto x) { return x == 0; })) continue;
    if (!is_valid_direction(P, a)) continue;
    ++checked;
    int pos = 0, neg = 0;
    for (const auto& f : P.facets) (dot(f.normal, a) > 0 ? pos : neg)++;
    EXPECT_GT(pos, 0);
    EXPECT_GT(neg, 0);
    std::size_t boundary = 0;
    for (const auto& r : P.ridges) {
      if ((dot(P.facets[r.first].normal, a) > 0) != (dot(P.facets[r.second].normal, a) > 0)) ++boundary;
    }
    EXPECT_EQ(ambiguity_ridges(P, a).size(), boundary);
    EXPECT_GT(boundary, 0u);
  }
}

TEST(Compatibility, Examples) {
  const Polytope P = convex_hull(E1), Q = convex_hull(Diag);
  EXPECT_TRUE(is_compatible(P, P));
  EXPECT_TRUE(is_compatible(minkowski_sum(P, Q), Q));
  EXPECT_TRUE(is_compatible(minkowski_sum(P, Q), P));
  EXPECT_FALSE(is_compatible(convex_hull(UnitSquare), convex_hull(Simplex)));
  EXPECT_TRUE(is_compatible(P, convex_hull(support({{1, 1}}))));
  Polytope cube = convex_hull(support({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  EXPECT_THROW(is_compatible(cube, cube), PreconditionError);
}

TEST(LatticePoints, CountsAndCap) {
  EXPECT_EQ(lattice_points(convex_hull(fx::dense_simplex(2, 3))).size(), 10u);
  EXPECT_EQ(lattice_points(convex_hull(support({{0, 0}, {4, 2}}))).size(), 3u);
  EXPECT_THROW(lattice_points(convex_hull(support({{0, 0}, {100, 0}, {0, 100}})), 50), CapExceeded);
}
