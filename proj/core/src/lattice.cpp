#include "toricred/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "toricred/errors.hpp"

namespace toricred {

std::int64_t dot(const Point& a, const Point& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Point operator+(const Point& a, const Point& b) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Point operator-(const Point& a, const Point& b) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

std::string to_string(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

Support::Support(std::vector<Point> points) : points_(std::move(points)) {
  if (points_.empty()) throw PreconditionError("support must be nonempty");
  dim_ = points_.front().size();
  for (const auto& p : points_) {
    if (p.size() != dim_) throw PreconditionError("support points of mixed dimension");
  }
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool Support::contains(const Point& p) const { return std::binary_search(points_.begin(), points_.end(), p); }

Support Support::without(std::size_t index) const {
  std::vector<Point> pts = points_;
  pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(index));
  return Support(std::move(pts));
}

Support operator+(const Support& a, const Support& b) {
  std::vector<Point> pts;
  pts.reserve(a.size() * b.size());
  for (const auto& p : a.points()) {
    for (const auto& q : b.points()) pts.push_back(p + q);
  }
  return Support(std::move(pts));
}

namespace {

std::int64_t gcd_all(const Point& w) {
  std::int64_t g = 0;
  for (auto v : w) g = std::gcd(g, v < 0 ? -v : v);
  return g;
}

Point make_primitive(Point w) {
  std::int64_t g = gcd_all(w);
  if (g > 1) {
    for (auto& v : w) v /= g;
  }
  return w;
}

std::int64_t cross2(const Point& o, const Point& a, const Point& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Monotone chain; returns indices of hull vertices in counter-clockwise order
// starting from the lexicographically smallest point. Input must be sorted.
std::vector<std::size_t> hull2d_order(const std::vector<Point>& pts) {
  const std::size_t n = pts.size();
  if (n < 3) {
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    return idx;
  }
  std::vector<std::size_t> h(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross2(pts[h[k - 2]], pts[h[k - 1]], pts[i]) <= 0) --k;
    h[k++] = i;
  }
  for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross2(pts[h[k - 2]], pts[h[k - 1]], pts[i]) <= 0) --k;
    h[k++] = i;
  }
  h.resize(k - 1);
  return h;
}

// Rank pivots of the difference vectors p_i - p_0, exact.
std::vector<std::size_t> affine_pivots(const std::vector<Point>& pts) {
  const std::size_t n = pts.front().size();
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    std::vector<Rational> r(n);
    for (std::size_t j = 0; j < n; ++j) r[j] = pts[i][j] - pts[0][j];
    rows.push_back(std::move(r));
  }
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < rows.size(); ++col) {
    std::size_t piv = row;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[row], rows[piv]);
    for (std::size_t i = row + 1; i < rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      Rational f = rows[i][col] / rows[row][col];
      for (std::size_t j = col; j < n; ++j) rows[i][j] -= f * rows[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

Polytope hull1d(const std::vector<Point>& pts) {
  Polytope P;
  P.ambient = 1;
  P.dim = pts.size() > 1 ? 1 : 0;
  P.vertices.push_back(pts.front());
  if (pts.size() > 1) {
    P.vertices.push_back(pts.back());
    P.facets.push_back({Point{1}, pts.front()[0], {0}});
    P.facets.push_back({Point{-1}, -pts.back()[0], {1}});
  }
  return P;
}

Polytope hull2d(const std::vector<Point>& pts) {
  Polytope P;
  P.ambient = 2;
  P.dim = 2;
  auto order = hull2d_order(pts);
  for (auto i : order) P.vertices.push_back(pts[i]);
  const std::size_t m = P.vertices.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Point& a = P.vertices[i];
    const Point& b = P.vertices[(i + 1) % m];
    Point w = make_primitive(Point{-(b[1] - a[1]), b[0] - a[0]});
    P.facets.push_back({w, dot(w, a), {i, (i + 1) % m}});
  }
  for (std::size_t i = 0; i < m; ++i) P.ridges.push_back({(i + m - 1) % m, i, {i}});
  return P;
}

Point cross3(const Point& a, const Point& b) {
  return Point{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Polytope hull3d(const std::vector<Point>& pts) {
  struct RawFacet {
    Point normal;
    std::int64_t offset;
    std::vector<Point> polygon;  // ordered boundary
  };
  std::vector<RawFacet> raw;
  std::set<std::pair<Point, std::int64_t>> seen;
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        Point w = cross3(pts[j] - pts[i], pts[k] - pts[i]);
        if (w[0] == 0 && w[1] == 0 && w[2] == 0) continue;
        w = make_primitive(w);
        const std::int64_t off = dot(w, pts[i]);
        bool pos = false, negs = false;
        for (const auto& p : pts) {
          std::int64_t s = dot(w, p) - off;
          if (s > 0) pos = true;
          if (s < 0) negs = true;
          if (pos && negs) break;
        }
        if (pos && negs) continue;
        if (negs) w = Point{-w[0], -w[1], -w[2]};
        const std::int64_t offset = dot(w, pts[i]);
        if (!seen.emplace(w, offset).second) continue;
        std::vector<Point> on;
        for (const auto& p : pts) {
          if (dot(w, p) == offset) on.push_back(p);
        }
        // project along a coordinate where the normal is nonzero
        std::size_t drop = w[2] != 0 ? 2 : (w[1] != 0 ? 1 : 0);
        std::vector<std::pair<Point, std::size_t>> proj;
        for (std::size_t t = 0; t < on.size(); ++t) {
          Point q;
          for (std::size_t c = 0; c < 3; ++c) {
            if (c != drop) q.push_back(on[t][c]);
          }
          proj.emplace_back(q, t);
        }
        std::sort(proj.begin(), proj.end());
        std::vector<Point> qs;
        for (auto& pr : proj) qs.push_back(pr.first);
        auto ord = hull2d_order(qs);
        RawFacet f{w, offset, {}};
        for (auto o : ord) f.polygon.push_back(on[proj[o].second]);
        raw.push_back(std::move(f));
      }
    }
  }
  Polytope P;
  P.ambient = 3;
  P.dim = 3;
  std::set<Point> vset;
  for (const auto& f : raw) vset.insert(f.polygon.begin(), f.polygon.end());
  P.vertices.assign(vset.begin(), vset.end());
  auto index = [&](const Point& p) {
    return static_cast<std::size_t>(std::lower_bound(P.vertices.begin(), P.vertices.end(), p) - P.vertices.begin());
  };
  std::sort(raw.begin(), raw.end(), [](const RawFacet& a, const RawFacet& b) { return a.normal < b.normal; });
  for (const auto& f : raw) {
    Facet F{f.normal, f.offset, {}};
    for (const auto& p : f.polygon) F.vertices.push_back(index(p));
    P.facets.push_back(std::move(F));
  }
  for (std::size_t a = 0; a < P.facets.size(); ++a) {
    for (std::size_t b = a + 1; b < P.facets.size(); ++b) {
      std::vector<std::size_t> va = P.facets[a].vertices, vb = P.facets[b].vertices, common;
      std::sort(va.begin(), va.end());
      std::sort(vb.begin(), vb.end());
      std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(common));
      if (common.size() >= 2) P.ridges.push_back({a, b, common});
    }
  }
  return P;
}

Polytope hull_full(const std::vector<Point>& pts, std::size_t n) {
  switch (n) {
    case 1: return hull1d(pts);
    case 2: return hull2d(pts);
    case 3: return hull3d(pts);
    default:
      throw PreconditionError("exact hulls are implemented for ambient dimension <= 3, got " + std::to_string(n));
  }
}

}  // namespace

Polytope convex_hull(const Support& support) {
  const auto& pts = support.points();
  if (pts.empty()) throw PreconditionError("hull of an empty point set");
  const std::size_t n = support.dim();
  auto pivots = affine_pivots(pts);
  const std::size_t k = pivots.size();
  if (k == n) return hull_full(pts, n);

  Polytope P;
  P.ambient = n;
  P.dim = k;
  if (k == 0) {
    P.vertices.push_back(pts.front());
    return P;
  }
  // Project injectively onto the pivot coordinates and hull there.
  std::vector<std::pair<Point, std::size_t>> proj;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Point q;
    for (auto c : pivots) q.push_back(pts[i][c]);
    proj.emplace_back(std::move(q), i);
  }
  std::sort(proj.begin(), proj.end());
  std::vector<Point> qs;
  for (auto& pr : proj) qs.push_back(pr.first);
  Polytope low = hull_full(qs, k);
  for (const auto& v : low.vertices) {
    auto it = std::lower_bound(qs.begin(), qs.end(), v);
    P.vertices.push_back(pts[proj[static_cast<std::size_t>(it - qs.begin())].second]);
  }
  if (k != 2) std::sort(P.vertices.begin(), P.vertices.end());
  return P;
}

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
  if (p.ambient != q.ambient) throw PreconditionError("Minkowski sum of polytopes of different ambient dimension");
  return convex_hull(Support(p.vertices) + Support(q.vertices));
}

Rational euclidean_volume(const Polytope& p) {
  if (!p.full_dimensional()) return 0;
  const auto& v = p.vertices;
  switch (p.ambient) {
    case 1: return Rational(v.back()[0] - v.front()[0]);
    case 2: {
      Integer twice = 0;
      for (std::size_t i = 0; i < v.size(); ++i) {
        const Point& a = v[i];
        const Point& b = v[(i + 1) % v.size()];
        twice += Integer(static_cast<long>(a[0] * b[1] - a[1] * b[0]));
      }
      Rational r(abs(twice), 2);
      r.canonicalize();
      return r;
    }
    case 3: {
      const Point& c = v.front();
      Integer six = 0;
      for (const auto& f : p.facets) {
        const Point& a = v[f.vertices[0]];
        for (std::size_t i = 1; i + 1 < f.vertices.size(); ++i) {
          const Point& b = v[f.vertices[i]];
          const Point& d = v[f.vertices[i + 1]];
          Point cr = cross3(b - c, d - c);
          six += Integer(static_cast<long>(std::abs(dot(a - c, cr))));
        }
      }
      Rational r(six, 6);
      r.canonicalize();
      return r;
    }
    default: throw PreconditionError("volume implemented for ambient dimension <= 3");
  }
}

bool contains(const Polytope& p, const Point& x) {
  if (x.size() != p.ambient) throw PreconditionError("point dimension mismatch");
  if (p.full_dimensional()) {
    return std::all_of(p.facets.begin(), p.facets.end(), [&](const Facet& f) { return dot(f.normal, x) >= f.offset; });
  }
  std::vector<Point> pts = p.vertices;
  pts.push_back(x);
  Polytope h = convex_hull(Support(pts));
  if (h.dim != p.dim) return false;
  std::vector<Point> a = h.vertices, b = p.vertices;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

std::vector<Point> lattice_points(const Polytope& p, std::size_t cap) {
  const std::size_t n = p.ambient;
  Point lo = p.vertices.front(), hi = p.vertices.front();
  for (const auto& v : p.vertices) {
    for (std::size_t i = 0; i < n; ++i) {
      lo[i] = std::min(lo[i], v[i]);
      hi[i] = std::max(hi[i], v[i]);
    }
  }
  std::vector<Point> out;
  Point cur = lo;
  while (true) {
    if (contains(p, cur)) {
      out.push_back(cur);
      if (out.size() > cap) throw CapExceeded("lattice point enumeration exceeded cap " + std::to_string(cap));
    }
    std::size_t i = 0;
    while (i < n && cur[i] == hi[i]) {
      cur[i] = lo[i];
      ++i;
    }
    if (i == n) break;
    ++cur[i];
  }
  return out;
}

Integer mixed_volume(std::span<const Polytope> polys) {
  const std::size_t n = polys.size();
  if (n == 0) throw PreconditionError("mixed volume of an empty tuple");
  for (const auto& p : polys) {
    if (p.ambient != n) throw PreconditionError("mixed volume needs n polytopes in dimension n");
  }
  if (n > 3) throw PreconditionError("mixed volume implemented for n <= 3");
  std::vector<Polytope> sums(std::size_t{1} << n);
  Rational total = 0;
  for (std::size_t mask = 1; mask < sums.size(); ++mask) {
    std::size_t low = static_cast<std::size_t>(__builtin_ctzll(mask));
    std::size_t rest = mask & (mask - 1);
    sums[mask] = rest == 0 ? polys[low] : minkowski_sum(sums[rest], polys[low]);
    const int size = __builtin_popcountll(mask);
    Rational vol = euclidean_volume(sums[mask]);
    if ((n - static_cast<std::size_t>(size)) % 2 == 0) {
      total += vol;
    } else {
      total -= vol;
    }
  }
  if (total.get_den() != 1) throw NumericError("mixed volume of lattice polytopes is not integral");
  return total.get_num();
}

Integer mixed_volume(const SupportTuple& supports) {
  std::vector<Polytope> polys;
  for (const auto& s : supports) polys.push_back(convex_hull(s));
  return mixed_volume(std::span<const Polytope>(polys));
}

Support face_support(const Support& e, const Point& w) {
  if (std::all_of(w.begin(), w.end(), [](std::int64_t v) { return v == 0; })) {
    throw PreconditionError("face direction must be nonzero");
  }
  std::int64_t best = dot(w, e.points().front());
  for (const auto& p : e.points()) best = std::min(best, dot(w, p));
  std::vector<Point> out;
  for (const auto& p : e.points()) {
    if (dot(w, p) == best) out.push_back(p);
  }
  return Support(std::move(out));
}

Point primitive_generator(std::span<const Rational> w) {
  Integer den = 1;
  bool nonzero = false;
  for (const auto& q : w) {
    den = lcm(den, q.get_den());
    if (q != 0) nonzero = true;
  }
  if (!nonzero) throw PreconditionError("primitive generator of the zero vector");
  std::vector<Integer> z;
  Integer g = 0;
  for (const auto& q : w) {
    Integer v = q.get_num() * (den / q.get_den());
    g = gcd(g, v);
    z.push_back(v);
  }
  Point out;
  for (auto& v : z) {
    Integer r = v / g;
    if (!r.fits_slong_p()) throw PreconditionError("primitive generator overflows 64-bit lattice");
    out.push_back(r.get_si());
  }
  return out;
}

Point primitive_generator(const Point& w) {
  std::vector<Rational> q(w.begin(), w.end());
  // Rational has no int64 constructor on all platforms; go through long.
  for (std::size_t i = 0; i < w.size(); ++i) q[i] = Rational(static_cast<long>(w[i]));
  return primitive_generator(std::span<const Rational>(q));
}

bool is_valid_direction(const Polytope& p, const Point& a) {
  if (!p.full_dimensional()) throw PreconditionError("direction validity requires a full-dimensional polytope");
  if (std::all_of(a.begin(), a.end(), [](std::int64_t v) { return v == 0; })) {
    throw PreconditionError("direction must be nonzero");
  }
  return std::all_of(p.facets.begin(), p.facets.end(), [&](const Facet& f) { return dot(f.normal, a) != 0; });
}

std::vector<AmbiguityRidge> ambiguity_ridges(const Polytope& p, const Point& a) {
  if (!is_valid_direction(p, a)) {
    for (const auto& f : p.facets) {
      if (dot(f.normal, a) == 0) {
        throw PreconditionError("direction " + to_string(a) + " is parallel to the facet with normal " +
                                to_string(f.normal));
      }
    }
  }
  std::vector<AmbiguityRidge> out;
  for (const auto& r : p.ridges) {
    const auto& f1 = p.facets[r.first];
    const auto& f2 = p.facets[r.second];
    const auto s1 = dot(f1.normal, a);
    const auto s2 = dot(f2.normal, a);
    if ((s1 > 0) == (s2 > 0)) continue;
    AmbiguityRidge ar;
    ar.normal_plus = s1 > 0 ? f1.normal : f2.normal;
    ar.normal_minus = s1 > 0 ? f2.normal : f1.normal;
    for (auto v : r.vertices) ar.vertices.push_back(p.vertices[v]);
    out.push_back(std::move(ar));
  }
  return out;
}

namespace {

// Rays of the normal fan of a polytope in the plane.
std::set<Point> fan_rays_2d(const Polytope& p) {
  std::set<Point> rays;
  if (p.dim == 2) {
    for (const auto& f : p.facets) rays.insert(f.normal);
  } else if (p.dim == 1) {
    Point d = p.vertices.back() - p.vertices.front();
    Point w = make_primitive(Point{-d[1], d[0]});
    rays.insert(w);
    rays.insert(Point{-w[0], -w[1]});
  }
  return rays;
}

}  // namespace

bool is_compatible(const Polytope& p, const Polytope& q) {
  if (p.ambient != q.ambient) throw PreconditionError("compatibility of polytopes of different ambient dimension");
  if (p.ambient == 1) return q.dim == 0 || p.dim == 1;
  if (p.ambient != 2) throw PreconditionError("fan compatibility is implemented exactly only for dimension <= 2");
  auto rp = fan_rays_2d(p);
  auto rq = fan_rays_2d(q);
  return std::includes(rp.begin(), rp.end(), rq.begin(), rq.end());
}

}  // namespace toricred
