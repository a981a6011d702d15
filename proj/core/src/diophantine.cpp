#include "toricred/diophantine.hpp"

#include <algorithm>

#include "toricred/errors.hpp"
#include "toricred/factor.hpp"
#include "toricred/gcp.hpp"
#include "toricred/lamination.hpp"

namespace toricred {

namespace {

void require_plane_system(const std::vector<MPoly>& system) {
  if (system.size() != 2 || system[0].num_variables() != 2 || system[1].variables() != system[0].variables()) {
    throw PreconditionError("integer root finding needs two polynomials in the same two variables");
  }
}

// F(u = -z, other variable = 1, zero = 0) as a polynomial in z.
UPoly negate_and_dehomogenize(const MPoly& form, std::size_t u, const std::vector<std::size_t>& zero) {
  std::vector<Rational> c(static_cast<std::size_t>(std::max(form.degree(u), 0) + 1), Rational(0));
  for (const auto& [e, v] : form.terms()) {
    bool vanishes = false;
    for (auto k : zero) vanishes = vanishes || e[k] != 0;
    if (vanishes) continue;
    c[static_cast<std::size_t>(e[u])] += e[u] % 2 ? Rational(-v) : v;
  }
  return UPoly(std::move(c));
}

UPoly normalize_eliminant(UPoly p) {
  p = p.shift_down(p.valuation());
  if (p.degree() < 1) return UPoly({Rational(1)});
  return square_free_part(p);
}

void check_zero_dimensional(const std::vector<MPoly>& system) {
  std::vector<MPoly> g;
  for (const auto& f : system) {
    if (f.is_zero()) throw DegenerateError(DegenerateError::Reason::PositiveDimensional, "zero polynomial in the system");
    g.push_back(f.divide_by_monomial(f.monomial_gcd()));
  }
  if (g[0].is_constant() || g[1].is_constant()) return;
  for (std::size_t var = 0; var < 2; ++var) {
    if (!g[0].depends_on(var) && !g[1].depends_on(var)) {
      if (polynomial_gcd(to_upoly(g[0], 1 - var), to_upoly(g[1], 1 - var)).degree() >= 1) {
        throw DegenerateError(DegenerateError::Reason::PositiveDimensional, "the system has a common factor free of '" +
                                                                                g[0].variables()[var] + "'");
      }
      continue;
    }
    if (sylvester_resultant(g[0], g[1], var).is_zero()) {
      throw DegenerateError(DegenerateError::Reason::PositiveDimensional,
                            "the system has a common factor: Res_" + g[0].variables()[var] + " vanishes identically");
    }
  }
}

}  // namespace

UPoly coordinate_eliminant(const std::vector<MPoly>& system, std::size_t i) {
  require_plane_system(system);
  if (i > 1) throw PreconditionError("coordinate index out of range");
  Point a{0, 0};
  a[i] = 1;
  try {
    check_zero_dimensional(system);
    const CascadeResult R = iterated_lamination_resultant(system, a, 1 - i);
    UPoly e = negate_and_dehomogenize(R.poly, 0, {});
    e.set_variable("t");
    return normalize_eliminant(e);
  } catch (const DegenerateError& direct) {
    std::string gcp_note;
    try {
      const GcpResult gcp = toric_gcp(system);
      // F_A(u0 = -t, u_i = 1, other u = 0) vanishes at t = zeta_i.
      const auto& A = gcp.A.points();
      std::size_t u0 = A.size(), ui = A.size();
      std::vector<std::size_t> zero;
      for (std::size_t k = 0; k < A.size(); ++k) {
        if (A[k] == Point{0, 0}) u0 = k;
        else if (A[k] == a) ui = k;
        else zero.push_back(k);
      }
      if (u0 < A.size() && ui < A.size()) {
        UPoly e = negate_and_dehomogenize(gcp.F_A, u0, zero);
        e.set_variable("t");
        gcp_note = "; GCP fallback: lowest s power " + std::to_string(gcp.lowest_s_power);
        if (!e.is_zero() && direct.reason() != DegenerateError::Reason::PositiveDimensional) {
          return normalize_eliminant(e);
        }
        gcp_note += e.is_zero() ? ", specialized F_A vanishes" : ", F_A carries the excess component";
      }
    } catch (const Error& e) {
      gcp_note = std::string("; GCP fallback failed: ") + e.what();
    }
    throw DegenerateError(DegenerateError::Reason::PositiveDimensional, std::string(direct.what()) + gcp_note);
  }
}

DiophantineResult integer_roots(const std::vector<MPoly>& system, const DiophantineOptions& options) {
  require_plane_system(system);
  DiophantineResult out;
  out.method = "per-coordinate eliminants, rational-root extraction, exact verification";
  out.hypothesis_checks.square_system = true;
  std::vector<std::vector<Integer>> coords(2);
  for (std::size_t i = 0; i < 2; ++i) {
    UPoly e = coordinate_eliminant(system, i);
    out.per_coordinate_eliminants.push_back(e);
    if (e.degree() < 1) continue;
    for (const auto& r : rational_roots(e.primitive())) {
      if (r.value.get_den() == 1 && r.value != 0) coords[i].push_back(r.value.get_num());
    }
  }
  const std::size_t combos = coords[0].size() * coords[1].size();
  if (combos > options.max_candidates) {
    throw CapExceeded(std::to_string(combos) + " candidate tuples exceed the cap of " +
                      std::to_string(options.max_candidates));
  }
  for (const auto& x : coords[0]) {
    for (const auto& y : coords[1]) {
      const Rational pt[2] = {Rational(x), Rational(y)};
      if (std::all_of(system.begin(), system.end(),
                      [&](const MPoly& f) { return f.evaluate(std::span<const Rational>(pt, 2)) == 0; })) {
        out.solutions.push_back({x, y});
      }
    }
  }
  std::sort(out.solutions.begin(), out.solutions.end());

  auto& hc = out.hypothesis_checks;
  try {
    const OracleRootSet roots = torus_roots_2d(system, options.oracle);
    hc.oracle_coordinates_nonzero = roots.coordinate_suspects.empty();
    if (!hc.oracle_coordinates_nonzero) {
      hc.detail += std::to_string(roots.coordinate_suspects.size()) + " root(s) near a coordinate hyperplane; ";
    }
  } catch (const Error& e) {
    hc.detail += std::string("oracle failed: ") + e.what() + "; ";
  }
  const Polytope P = newton_polytope(system);
  if (P.full_dimensional()) {
    hc.no_toric_infinity_detected = true;
    for (const auto& f : P.facets) {
      if (facet_resultant(system, f.normal) == 0) {
        hc.no_toric_infinity_detected = false;
        hc.detail += "facet resultant along " + to_string(f.normal) + " vanishes; ";
      }
    }
  } else {
    hc.detail += "Newton polytope is not full-dimensional; ";
  }
  out.certificate = hc.square_system && hc.oracle_coordinates_nonzero && hc.no_toric_infinity_detected
                        ? Certificate::CompleteUnderHypotheses
                        : Certificate::VerifiedOnly;
  return out;
}

}  // namespace toricred
