#include "toricred/gcp.hpp"

#include <cmath>
#include <random>

#include "toricred/errors.hpp"

namespace toricred {

namespace {

// Nearest fraction with denominator at most max_den, by continued fractions.
std::optional<Rational> nearby_rational(double v, long max_den = 10000) {
  if (!std::isfinite(v)) return std::nullopt;
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double x = v;
  for (int it = 0; it < 40; ++it) {
    const double fl = std::floor(x);
    if (std::abs(fl) > 1e15) break;
    const long a = static_cast<long>(fl);
    const long p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    if (std::abs(static_cast<double>(p1) / static_cast<double>(q1) - v) <= 1e-12 * std::max(1.0, std::abs(v))) break;
    const double frac = x - fl;
    if (frac < 1e-15) break;
    x = 1.0 / frac;
  }
  if (q1 == 0) return std::nullopt;
  Rational r(p1, q1);
  r.canonicalize();
  return r;
}

std::optional<std::array<Rational, 2>> exact_root(const std::vector<MPoly>& system, const std::array<Complex, 2>& z) {
  std::array<Rational, 2> q;
  for (std::size_t i = 0; i < 2; ++i) {
    if (std::abs(z[i].imag()) > 1e-9 * std::max(1.0, std::abs(z[i]))) return std::nullopt;
    auto r = nearby_rational(z[i].real());
    if (!r) return std::nullopt;
    q[i] = *r;
  }
  for (const auto& f : system) {
    if (f.evaluate(std::span<const Rational>(q)) != 0) return std::nullopt;
  }
  return q;
}

}  // namespace

std::vector<MPoly> build_fill_system(const Fill& fill, const std::vector<std::string>& variables) {
  std::vector<MPoly> out;
  for (const auto& part : fill.parts) {
    if (part.size() == 0) throw PreconditionError("fill part is empty");
    if (part.dim() != variables.size()) throw PreconditionError("fill dimension does not match the variable count");
    MPoly f(variables);
    for (const auto& p : part.points()) f.add_term(Exponent(p.begin(), p.end()), 1);
    out.push_back(std::move(f));
  }
  return out;
}

FillGenericityReport verify_fill_genericity(const Fill& fill, const OracleOptions& options) {
  FillGenericityReport rep;
  rep.mixed_volume = mixed_volume(fill.parts);
  if (rep.mixed_volume == 0) throw PreconditionError("degenerate fill: mixed volume is 0");
  const auto fstar = build_fill_system(fill);
  try {
    rep.oracle_count = count_torus_roots_oracle(fstar, options);
  } catch (const DegenerateError& e) {
    throw DegenerateError(DegenerateError::Reason::FillGenericity,
                          std::string("fill system has a positive-dimensional component: ") + e.what());
  }
  rep.pass = rep.mixed_volume == rep.oracle_count;
  if (!rep.pass) {
    throw DegenerateError(DegenerateError::Reason::FillGenericity,
                          "fill system has " + std::to_string(rep.oracle_count) + " torus roots, expected " +
                              rep.mixed_volume.get_str());
  }
  return rep;
}

Support standard_simplex(std::size_t n) {
  std::vector<Point> pts{Point(n, 0)};
  for (std::size_t i = 0; i < n; ++i) {
    Point e(n, 0);
    e[i] = 1;
    pts.push_back(e);
  }
  return Support(std::move(pts));
}

GcpResult toric_gcp(const std::vector<MPoly>& system, const Support& A, const Fill& fill) {
  if (system.size() != 2 || system[0].num_variables() != 2 || system[1].variables() != system[0].variables()) {
    throw PreconditionError("toric_gcp needs two polynomials in the same two variables");
  }
  if (A.size() == 0 || A.dim() != 2) throw PreconditionError("A must be a nonempty subset of Z^2");
  if (fill.parts.size() != 2) throw PreconditionError("fill must have two parts");
  GcpResult out;
  out.fill = fill;
  out.A = A;
  const auto& xy = system[0].variables();
  std::vector<std::string> vars{xy[0], xy[1], "s"};
  for (std::size_t k = 0; k < A.size(); ++k) {
    out.u_variables.push_back("u" + std::to_string(k));
    vars.push_back(out.u_variables.back());
  }
  const auto fstar = build_fill_system(fill, xy);
  const MPoly s = MPoly::variable(vars, 2);
  std::vector<MPoly> pert;
  for (std::size_t i = 0; i < 2; ++i) {
    pert.push_back((system[i].with_variables(vars) - s * fstar[i].with_variables(vars)).strip_monomial(2));
  }
  MPoly g(vars);
  for (std::size_t k = 0; k < A.size(); ++k) {
    Exponent e(vars.size(), 0);
    e[0] = static_cast<int>(A.points()[k][0]);
    e[1] = static_cast<int>(A.points()[k][1]);
    e[3 + k] = 1;
    g.add_term(e, 1);
  }

  auto res = [&](const MPoly& p, const MPoly& q, std::size_t var, const std::string& stage) {
    if (!p.depends_on(var) && !q.depends_on(var)) {
      throw DegenerateError(DegenerateError::Reason::Elimination, stage + ": neither polynomial involves '" + vars[var] + "'");
    }
    MPoly r = sylvester_resultant(p, q, var);
    if (r.is_zero()) throw DegenerateError(DegenerateError::Reason::Elimination, stage + ": resultant vanishes identically in s and u");
    Rational c = r.content();
    if (c != 1) out.ledger.push_back({stage, c});
    return r.primitive_part().strip_monomial(2);
  };
  const std::size_t y = 1, x = 0;
  MPoly h1, h2;
  if (g.depends_on(y)) {
    h1 = res(pert[0], g, y, "Res_" + xy[1] + "(f1 - s f1*, g)");
    h2 = res(pert[1], g, y, "Res_" + xy[1] + "(f2 - s f2*, g)");
  } else {
    h1 = res(pert[0], pert[1], y, "Res_" + xy[1] + "(f1 - s f1*, f2 - s f2*)");
    h2 = g;
  }
  MPoly H = res(h1, h2, x, "Res_" + xy[0] + "(h1, h2)");
  std::vector<std::string> su{"s"};
  su.insert(su.end(), out.u_variables.begin(), out.u_variables.end());
  out.H_multiple = H.with_variables(su);
  for (int k = 0; k <= out.H_multiple.degree(0); ++k) {
    MPoly c = out.H_multiple.coefficient_in(0, k);
    if (!c.is_zero()) {
      out.lowest_s_power = k;
      out.F_A = c.with_variables(out.u_variables);
      break;
    }
  }
  out.F_A_degree = out.F_A.total_degree();
  SupportTuple E = supports_of(system);
  out.M_P = mixed_volume(E);
  const Polytope PE = newton_polytope(system);
  const Polytope QA = convex_hull(A);
  out.compatible = is_compatible(PE, QA);
  return out;
}

GcpResult toric_gcp(const std::vector<MPoly>& system) {
  SupportTuple E = supports_of(system);
  return toric_gcp(system, standard_simplex(2), find_irreducible_fill(E));
}

std::vector<DivisibilityCheck> check_root_divisibility(const GcpResult& gcp, const std::vector<MPoly>& system,
                                                       const OracleRootSet& roots, double tol, std::uint64_t seed) {
  std::vector<DivisibilityCheck> out;
  const auto& A = gcp.A.points();
  const std::size_t m = A.size();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (const auto& root : roots.roots) {
    DivisibilityCheck chk;
    chk.root = root.value;
    auto mono = [&](const Point& e) {
      std::complex<long double> v = 1;
      for (std::size_t i = 0; i < 2; ++i) {
        v *= std::pow(std::complex<long double>(root.value[i].real(), root.value[i].imag()), static_cast<int>(e[i]));
      }
      return v;
    };
    // Solve g(zeta) = 0 for u_0 and evaluate F_A at random points of that hyperplane.
    double worst = 0;
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<std::complex<long double>> u(m);
      std::complex<long double> acc = 0;
      for (std::size_t k = 1; k < m; ++k) {
        u[k] = std::complex<long double>(unit(rng), unit(rng));
        acc += u[k] * mono(A[k]);
      }
      u[0] = -acc / mono(A[0]);
      std::complex<long double> val = 0;
      long double scale = 0;
      for (const auto& [e, c] : gcp.F_A.terms()) {
        std::complex<long double> t(to_long_double(c), 0);
        long double mag = std::abs(t);
        for (std::size_t k = 0; k < m; ++k) {
          t *= std::pow(u[k], e[k]);
          mag *= std::pow(std::abs(u[k]), e[k]);
        }
        val += t;
        scale += mag;
      }
      worst = std::max(worst, scale == 0 ? 0.0 : static_cast<double>(std::abs(val) / scale));
    }
    chk.residual = worst;
    chk.pass = worst < tol;
    if (auto q = exact_root(system, root.value)) {
      MPoly L(gcp.u_variables);
      for (std::size_t k = 0; k < m; ++k) {
        Rational c = 1;
        for (std::size_t i = 0; i < 2; ++i) {
          for (std::int64_t j = 0; j < std::abs(A[k][i]); ++j) c = A[k][i] > 0 ? Rational(c * (*q)[i]) : Rational(c / (*q)[i]);
        }
        Exponent e(m, 0);
        e[k] = 1;
        L.add_term(e, c);
      }
      chk.exact = try_divide(gcp.F_A, L).has_value();
      chk.pass = *chk.exact;
    }
    out.push_back(chk);
  }
  return out;
}

}  // namespace toricred
