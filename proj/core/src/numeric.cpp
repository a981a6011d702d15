#include "toricred/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "toricred/errors.hpp"

namespace toricred {

namespace {

using CL = std::complex<long double>;
using CPoly = std::vector<CL>;  // ascending

CL horner(const CPoly& p, CL z) {
  CL v = 0;
  for (std::size_t k = p.size(); k-- > 0;) v = v * z + p[k];
  return v;
}

void horner_with_derivative(const CPoly& p, CL z, CL& v, CL& d) {
  v = 0;
  d = 0;
  for (std::size_t k = p.size(); k-- > 0;) {
    d = d * z + v;
    v = v * z + p[k];
  }
}

long double scale_at(const CPoly& p, CL z) {
  long double s = 0, r = std::abs(z), pw = 1;
  for (const auto& c : p) {
    s += std::abs(c) * pw;
    pw *= r;
  }
  return s;
}

long double rel_residual(const CPoly& p, CL z) {
  long double s = scale_at(p, z);
  return s == 0 ? 0 : std::abs(horner(p, z)) / s;
}

// Aberth-Ehrlich simultaneous iteration followed by Newton polishing.
std::vector<CL> aberth(const CPoly& p, std::uint64_t seed) {
  const std::size_t d = p.size() - 1;
  if (d == 0) return {};
  if (d == 1) return {-p[0] / p[1]};
  long double bound = 0;
  const long double lead = std::abs(p[d]);
  for (std::size_t k = 1; k <= d; ++k) {
    long double r = std::pow(std::abs(p[d - k]) / lead, 1.0L / static_cast<long double>(k));
    bound = std::max(bound, r);
  }
  long double low = std::numeric_limits<long double>::max();
  if (std::abs(p[0]) > 0) {
    for (std::size_t k = 1; k <= d; ++k) {
      if (std::abs(p[k]) == 0) continue;
      low = std::min(low, std::pow(std::abs(p[0]) / std::abs(p[k]), 1.0L / static_cast<long double>(k)));
    }
  } else {
    low = 0;
  }
  const long double radius = low > 0 && low < bound ? std::sqrt(low * bound) : std::max(bound / 2, 1e-3L);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<long double> unit(0.0L, 1.0L);
  const long double offset = unit(rng) * 2 * std::numbers::pi_v<long double>;
  std::vector<CL> z(d);
  for (std::size_t k = 0; k < d; ++k) {
    long double ang = offset + 2 * std::numbers::pi_v<long double> * static_cast<long double>(k) / static_cast<long double>(d);
    z[k] = std::polar(radius * (1 + 0.01L * unit(rng)), ang);
  }

  const int max_iter = 3000;
  std::vector<bool> done(d, false);
  for (int it = 0; it < max_iter; ++it) {
    bool all = true;
    for (std::size_t k = 0; k < d; ++k) {
      if (done[k]) continue;
      CL v, dv;
      horner_with_derivative(p, z[k], v, dv);
      if (std::abs(v) <= 1e-30L * scale_at(p, z[k])) {
        done[k] = true;
        continue;
      }
      CL ratio = dv == CL(0) ? CL(1e-3L) : v / dv;
      CL sum = 0;
      for (std::size_t j = 0; j < d; ++j) {
        if (j != k) {
          CL diff = z[k] - z[j];
          if (diff != CL(0)) sum += CL(1) / diff;
        }
      }
      CL denom = CL(1) - ratio * sum;
      CL w = denom == CL(0) ? ratio : ratio / denom;
      z[k] -= w;
      if (std::abs(w) <= 1e-18L * std::max(std::abs(z[k]), 1e-300L)) {
        done[k] = true;
      } else {
        all = false;
      }
    }
    if (all) break;
  }
  for (auto& r : z) {
    for (int i = 0; i < 3; ++i) {
      CL v, dv;
      horner_with_derivative(p, r, v, dv);
      if (dv == CL(0)) break;
      CL cand = r - v / dv;
      if (rel_residual(p, cand) <= rel_residual(p, r)) r = cand; else break;
    }
  }
  long double worst = 0;
  CL worst_z = 0;
  for (const auto& r : z) {
    long double res = rel_residual(p, r);
    if (res > worst) {
      worst = res;
      worst_z = r;
    }
  }
  if (worst > 1e-9L) {
    throw NumericError("root finder did not converge; best iterate (" + std::to_string(static_cast<double>(worst_z.real())) +
                       ", " + std::to_string(static_cast<double>(worst_z.imag())) + ") has relative residual " +
                       std::to_string(static_cast<double>(worst)));
  }
  return z;
}

CPoly to_cpoly(const UPoly& f) {
  CPoly p;
  for (const auto& c : f.coeffs()) p.emplace_back(to_long_double(c), 0.0L);
  return p;
}

struct Cluster {
  CL z;
  int mult;
};

void merge_into(std::vector<Cluster>& out, CL z, int mult, long double radius) {
  for (auto& c : out) {
    if (std::abs(c.z - z) <= radius) {
      c.mult += mult;
      return;
    }
  }
  out.push_back({z, mult});
}

void sort_roots(std::vector<ApproxRoot>& roots) {
  std::sort(roots.begin(), roots.end(), [](const ApproxRoot& a, const ApproxRoot& b) {
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
}

// Polynomial in two variables evaluated in extended precision, with gradient.
struct CMPoly {
  std::vector<std::pair<std::array<int, 2>, CL>> terms;

  explicit CMPoly(const MPoly& f) {
    for (const auto& [e, c] : f.terms()) terms.push_back({{e[0], e[1]}, CL(to_long_double(c), 0)});
  }

  CL eval(CL x, CL y, CL* dx = nullptr, CL* dy = nullptr) const {
    CL v = 0, gx = 0, gy = 0;
    for (const auto& [e, c] : terms) {
      CL px = std::pow(x, e[0]), py = std::pow(y, e[1]);
      v += c * px * py;
      if (dx && e[0] > 0) gx += c * static_cast<long double>(e[0]) * std::pow(x, e[0] - 1) * py;
      if (dy && e[1] > 0) gy += c * static_cast<long double>(e[1]) * px * std::pow(y, e[1] - 1);
    }
    if (dx) *dx = gx;
    if (dy) *dy = gy;
    return v;
  }

  long double scale(CL x, CL y) const {
    long double s = 0;
    for (const auto& [e, c] : terms) s += std::abs(c) * std::pow(std::abs(x), e[0]) * std::pow(std::abs(y), e[1]);
    return s;
  }

  long double residual(CL x, CL y) const {
    const long double s = scale(x, y);
    return s == 0 ? 0 : std::abs(eval(x, y)) / s;
  }

  // Coefficients in the second argument after fixing the first (or vice versa).
  // A coefficient counts as zero when it cancels to roundoff against the sum
  // of the magnitudes of its terms.
  CPoly specialize(CL value, std::size_t fixed, std::vector<bool>* vanishing = nullptr) const {
    CPoly out;
    std::vector<long double> scale;
    for (const auto& [e, c] : terms) {
      std::size_t k = static_cast<std::size_t>(e[1 - fixed]);
      if (out.size() <= k) {
        out.resize(k + 1, CL(0));
        scale.resize(k + 1, 0.0L);
      }
      const CL t = c * std::pow(value, e[fixed]);
      out[k] += t;
      scale[k] += std::abs(t);
    }
    if (vanishing) {
      vanishing->assign(out.size(), false);
      for (std::size_t k = 0; k < out.size(); ++k) (*vanishing)[k] = std::abs(out[k]) <= 1e-11L * scale[k];
    }
    return out;
  }
};

// A root where the gradients are independent has intersection multiplicity 1.
bool is_simple_root(const CMPoly& f, const CMPoly& g, const std::array<CL, 2>& z) {
  CL fx, fy, gx, gy;
  f.eval(z[0], z[1], &fx, &fy);
  g.eval(z[0], z[1], &gx, &gy);
  // gradients scaled to the homogeneous form x*d/dx, y*d/dy
  fx *= z[0];
  gx *= z[0];
  fy *= z[1];
  gy *= z[1];
  const long double nf = std::abs(fx) + std::abs(fy), ng = std::abs(gx) + std::abs(gy);
  const long double sf = f.scale(z[0], z[1]), sg = g.scale(z[0], z[1]);
  if (nf <= 1e-8L * sf || ng <= 1e-8L * sg) return false;
  return std::abs(fx * gy - fy * gx) > 1e-6L * nf * ng;
}

struct Fiber {
  CL coord;
  int mult;
  std::vector<std::array<CL, 2>> points;  // torus points over coord
  bool extra = false;                     // zero-coordinate or infinite contributions
};

void polish(const CMPoly& f, const CMPoly& g, std::array<CL, 2>& z) {
  for (int i = 0; i < 4; ++i) {
    CL fx, fy, gx, gy;
    CL fv = f.eval(z[0], z[1], &fx, &fy);
    CL gv = g.eval(z[0], z[1], &gx, &gy);
    CL det = fx * gy - fy * gx;
    if (std::abs(det) == 0) return;
    std::array<CL, 2> c{z[0] - (fv * gy - gv * fy) / det, z[1] - (gv * fx - fv * gx) / det};
    auto score = [&](const std::array<CL, 2>& p) { return std::max(f.residual(p[0], p[1]), g.residual(p[0], p[1])); };
    if (!(score(c) <= score(z))) return;
    z = c;
  }
}

// Fibers over the roots of the eliminant in coordinate k.
std::vector<Fiber> fibers(const CMPoly& f, const CMPoly& g, const UPoly& elim, int valuation, std::size_t k,
                          const OracleOptions& opt, std::vector<std::array<Complex, 2>>& suspects) {
  std::vector<Fiber> out;
  std::vector<ApproxRoot> roots;
  if (elim.degree() >= 1) roots = complex_roots(elim, opt.tolerance, opt.seed);
  if (valuation > 0) roots.push_back({Complex(0, 0), valuation, 0.0});
  const long double radius = std::max(opt.tolerance, 1e-9);
  for (const auto& r : roots) {
    Fiber fb{CL(r.value.real(), r.value.imag()), r.multiplicity, {}, false};
    std::vector<bool> zf, zg;
    CPoly pf = f.specialize(fb.coord, k, &zf);
    CPoly pg = g.specialize(fb.coord, k, &zg);
    const std::size_t fdeg = pf.size(), gdeg = pg.size();
    while (!pf.empty() && zf[pf.size() - 1]) pf.pop_back();
    while (!pg.empty() && zg[pg.size() - 1]) pg.pop_back();
    if (pf.size() < fdeg && pg.size() < gdeg) fb.extra = true;
    const CPoly* q = nullptr;
    if (pf.size() >= 2 && (pg.size() < 2 || pf.size() <= pg.size())) q = &pf;
    if (pg.size() >= 2 && (q == nullptr || pg.size() < pf.size())) q = &pg;
    if (q != nullptr) {
      const std::vector<bool>& zq = q == &pf ? zf : zg;
      const std::vector<bool>& zo = q == &pf ? zg : zf;
      const CPoly& other = q == &pf ? pg : pf;
      std::size_t low = 0;
      while (low + 1 < q->size() && zq[low]) ++low;
      if (low > 0) {
        if (other.empty() || zo[0]) {
          fb.extra = true;
          std::array<CL, 2> z{};
          z[k] = fb.coord;
          if (k == 0) suspects.push_back({Complex(static_cast<double>(z[0].real()), static_cast<double>(z[0].imag())),
                                          Complex(static_cast<double>(z[1].real()), static_cast<double>(z[1].imag()))});
        }
      }
      const CPoly reduced(q->begin() + static_cast<std::ptrdiff_t>(low), q->end());
      std::vector<Cluster> cands;
      for (const auto& y : aberth(reduced, opt.seed)) merge_into(cands, y, 1, radius * std::max(1.0L, std::abs(y)));
      for (const auto& c : cands) {
        std::array<CL, 2> z{};
        z[k] = fb.coord;
        z[1 - k] = c.z;
        if (std::max(f.residual(z[0], z[1]), g.residual(z[0], z[1])) > opt.tolerance) continue;
        const bool tiny = std::abs(z[0]) < opt.nonzero_threshold || std::abs(z[1]) < opt.nonzero_threshold;
        if (tiny) {
          fb.extra = true;
          if (k == 0) suspects.push_back({Complex(static_cast<double>(z[0].real()), static_cast<double>(z[0].imag())),
                                          Complex(static_cast<double>(z[1].real()), static_cast<double>(z[1].imag()))});
          continue;
        }
        polish(f, g, z);
        fb.points.push_back(z);
      }
    }
    out.push_back(std::move(fb));
  }
  return out;
}

// Univariate eliminant of the stripped system in coordinate k, or nullopt
// when the system has no common roots at all.
std::optional<UPoly> eliminant(const MPoly& f, const MPoly& g, std::size_t k) {
  const std::size_t other = 1 - k;
  if (!f.depends_on(other) && !g.depends_on(other)) {
    UPoly h = polynomial_gcd(to_upoly(f, k), to_upoly(g, k));
    if (h.degree() >= 1) {
      throw DegenerateError(DegenerateError::Reason::PositiveDimensional,
                            "positive-dimensional or degenerate: both polynomials are free of '" + f.variables()[other] +
                                "' and share a factor");
    }
    return std::nullopt;
  }
  MPoly r = sylvester_resultant(f, g, other);
  if (r.is_zero()) {
    throw DegenerateError(DegenerateError::Reason::PositiveDimensional,
                          "positive-dimensional or degenerate: eliminant in '" + f.variables()[k] + "' vanishes identically");
  }
  return to_upoly(r, k);
}

}  // namespace

std::vector<ApproxRoot> complex_roots(const UPoly& f, double tol, std::uint64_t seed) {
  if (f.degree() < 1) throw PreconditionError("complex_roots needs a polynomial of degree >= 1");
  const CPoly full = to_cpoly(f);
  std::vector<Cluster> clusters;
  const long double radius = std::max(tol, 1e-9);
  std::uint64_t s = seed;
  for (const auto& [g, m] : square_free_decomposition(f)) {
    if (g.degree() < 1) continue;
    for (const auto& z : aberth(to_cpoly(g), s++)) merge_into(clusters, z, m, radius);
  }
  std::vector<ApproxRoot> out;
  for (const auto& c : clusters) {
    out.push_back({Complex(static_cast<double>(c.z.real()), static_cast<double>(c.z.imag())), c.mult,
                   static_cast<double>(rel_residual(full, c.z))});
  }
  sort_roots(out);
  return out;
}

double relative_residual(const MPoly& p, std::span<const Complex> point) {
  std::complex<long double> v = 0;
  long double s = 0;
  for (const auto& [e, c] : p.terms()) {
    CL term(to_long_double(c), 0);
    long double mag = std::abs(term);
    for (std::size_t i = 0; i < e.size(); ++i) {
      CL z(point[i].real(), point[i].imag());
      term *= std::pow(z, e[i]);
      mag *= std::pow(std::abs(z), e[i]);
    }
    v += term;
    s += mag;
  }
  return s == 0 ? 0.0 : static_cast<double>(std::abs(v) / s);
}

OracleRootSet torus_roots_2d(const std::vector<MPoly>& system, const OracleOptions& options) {
  if (system.size() != 2 || system[0].num_variables() != 2 || system[1].variables() != system[0].variables()) {
    throw PreconditionError("the numeric oracle needs two polynomials in the same two variables");
  }
  OracleRootSet result;
  result.tolerance = options.tolerance;
  std::array<MPoly, 2> g;
  for (std::size_t i = 0; i < 2; ++i) {
    if (system[i].is_zero()) {
      throw DegenerateError(DegenerateError::Reason::PositiveDimensional, "positive-dimensional or degenerate: zero polynomial");
    }
    g[i] = system[i].divide_by_monomial(system[i].monomial_gcd());
  }
  if (g[0].is_constant() || g[1].is_constant()) return result;

  const CMPoly cf(g[0]), cg(g[1]);
  std::array<std::vector<Fiber>, 2> fib;
  for (std::size_t k = 0; k < 2; ++k) {
    auto e = eliminant(g[0], g[1], k);
    if (!e) return result;
    const int v = e->valuation();
    std::vector<std::array<Complex, 2>> dummy;
    fib[k] = fibers(cf, cg, e->shift_down(v), v, k, options, k == 0 ? result.coordinate_suspects : dummy);
  }

  auto close = [&](CL a, CL b) {
    return std::abs(a - b) <= 1e3 * std::max(options.tolerance, 1e-9) * std::max(1.0L, std::abs(a));
  };
  std::size_t torus_points[2] = {0, 0};
  for (std::size_t k = 0; k < 2; ++k) {
    for (const auto& f : fib[k]) torus_points[k] += f.points.size();
  }
  if (torus_points[0] != torus_points[1]) {
    throw NumericError("cluster ambiguity at tolerance " + std::to_string(options.tolerance) +
                       ": the two projections disagree on the number of torus roots; retry with a smaller tolerance");
  }
  for (const auto& fx : fib[0]) {
    for (const auto& z : fx.points) {
      int mult = 0;
      if (is_simple_root(cf, cg, z)) {
        mult = 1;
      } else if (fx.points.size() == 1 && !fx.extra) {
        mult = fx.mult;
      } else {
        for (const auto& fy : fib[1]) {
          if (!close(fy.coord, z[1])) continue;
          if (fy.points.size() == 1 && !fy.extra && close(fy.points[0][0], z[0])) mult = fy.mult;
          break;
        }
      }
      if (mult == 0) {
        throw NumericError("cluster ambiguity at tolerance " + std::to_string(options.tolerance) +
                           ": cannot separate the multiplicity of a root sharing both coordinates with others; retry with a smaller tolerance");
      }
      std::array<Complex, 2> v{Complex(static_cast<double>(z[0].real()), static_cast<double>(z[0].imag())),
                               Complex(static_cast<double>(z[1].real()), static_cast<double>(z[1].imag()))};
      double res = std::max(relative_residual(system[0], v), relative_residual(system[1], v));
      result.roots.push_back({v, mult, res});
      result.total_with_multiplicity += mult;
    }
  }
  std::sort(result.roots.begin(), result.roots.end(), [](const TorusRoot& a, const TorusRoot& b) {
    for (std::size_t i = 0; i < 2; ++i) {
      if (a.value[i].real() != b.value[i].real()) return a.value[i].real() < b.value[i].real();
      if (a.value[i].imag() != b.value[i].imag()) return a.value[i].imag() < b.value[i].imag();
    }
    return false;
  });
  return result;
}

int count_torus_roots_oracle(const std::vector<MPoly>& system, const OracleOptions& options) {
  return torus_roots_2d(system, options).total_with_multiplicity;
}

}  // namespace toricred
