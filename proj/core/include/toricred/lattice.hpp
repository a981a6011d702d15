#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "toricred/rational.hpp"

namespace toricred {

using Point = std::vector<std::int64_t>;

std::int64_t dot(const Point& a, const Point& b);
Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
std::string to_string(const Point& p);

/// Finite set of lattice points of a common ambient dimension, kept sorted.
class Support {
 public:
  Support() = default;
  explicit Support(std::vector<Point> points);

  const std::vector<Point>& points() const noexcept { return points_; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool contains(const Point& p) const;
  Support without(std::size_t index) const;

  friend bool operator==(const Support&, const Support&) = default;

 private:
  std::vector<Point> points_;
  std::size_t dim_ = 0;
};

using SupportTuple = std::vector<Support>;

/// Pointwise Minkowski sum of two supports.
Support operator+(const Support& a, const Support& b);

struct Facet {
  Point normal;             // primitive inner normal
  std::int64_t offset = 0;  // normal . v >= offset on the polytope
  std::vector<std::size_t> vertices;
};

struct Ridge {
  std::size_t first = 0;  // facet indices
  std::size_t second = 0;
  std::vector<std::size_t> vertices;
};

/// Lattice polytope with its minimal vertex set. Facets and ridges are
/// populated only for full-dimensional polytopes; `dim` is the dimension of
/// the affine hull.
struct Polytope {
  std::size_t ambient = 0;
  std::size_t dim = 0;
  std::vector<Point> vertices;
  std::vector<Facet> facets;
  std::vector<Ridge> ridges;

  bool full_dimensional() const { return dim == ambient; }
  Support vertex_support() const { return Support(vertices); }
};

/// Exact hull; full-dimensional hulls are supported for ambient dimension <= 3.
Polytope convex_hull(const Support& points);
Polytope minkowski_sum(const Polytope& p, const Polytope& q);
Rational euclidean_volume(const Polytope& p);
bool contains(const Polytope& p, const Point& x);
std::vector<Point> lattice_points(const Polytope& p, std::size_t cap = 100000);

/// Mixed volume in Bernstein-count units: M(simplex, ..., simplex) = 1.
Integer mixed_volume(std::span<const Polytope> polytopes);
Integer mixed_volume(const SupportTuple& supports);

Support face_support(const Support& e, const Point& w);
Point primitive_generator(std::span<const Rational> w);
Point primitive_generator(const Point& w);

bool is_valid_direction(const Polytope& p, const Point& a);

struct AmbiguityRidge {
  Point normal_plus;   // facet normal with positive product against a
  Point normal_minus;  // facet normal with negative product against a
  std::vector<Point> vertices;
};

/// Ridges separating facets of opposite sign against a.
std::vector<AmbiguityRidge> ambiguity_ridges(const Polytope& p, const Point& a);

/// Every maximal normal cone of q is a union of normal cones of p
/// (exact for ambient dimension <= 2).
bool is_compatible(const Polytope& p, const Polytope& q);

}  // namespace toricred
