#include "toricred/lamination.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "toricred/errors.hpp"
#include "toricred/factor.hpp"

namespace toricred {

namespace {

const std::vector<std::string> kU{"up", "um"};

void require_plane_system(const std::vector<MPoly>& system) {
  if (system.size() != 2 || system[0].num_variables() != 2 || system[1].variables() != system[0].variables()) {
    throw PreconditionError("this operation needs two polynomials in the same two variables");
  }
}

int to_int(const Integer& z) {
  if (!z.fits_sint_p()) throw CapExceeded("integer " + z.get_str() + " exceeds machine range");
  return static_cast<int>(z.get_si());
}

MPoly record_primitive(const MPoly& p, const std::string& stage, std::vector<ContentEntry>& ledger) {
  Rational c = p.content();
  if (c != 1) ledger.push_back({stage, c});
  return p.primitive_part();
}

// R(t, 1) with t = up.
UPoly dehomogenize(const MPoly& r) {
  int top = r.degree(0);
  std::vector<Rational> c(static_cast<std::size_t>(std::max(top, -1) + 1), Rational(0));
  for (const auto& [e, v] : r.terms()) c[static_cast<std::size_t>(e[0])] += v;
  return UPoly(std::move(c));
}

MPoly homogenize(const UPoly& q, int degree) {
  MPoly out(kU);
  for (int k = 0; k <= q.degree(); ++k) {
    const Rational c = q.coefficient(k);
    if (c != 0) out.add_term({k, degree - k}, c);
  }
  return out;
}

Complex monomial_value(const std::array<Complex, 2>& z, const Point& a) {
  std::complex<long double> v = 1;
  for (std::size_t i = 0; i < 2; ++i) {
    std::complex<long double> zi(z[i].real(), z[i].imag());
    v *= std::pow(zi, static_cast<int>(a[i]));
  }
  return Complex(static_cast<double>(v.real()), static_cast<double>(v.imag()));
}

std::vector<MPoly> generic_system(const std::vector<MPoly>& system, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> coeff(1, 1L << 15);
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<MPoly> out;
  for (const auto& f : system) {
    MPoly g(f.variables());
    for (const auto& [e, c] : f.terms()) g.add_term(e, Rational(sign(rng) ? coeff(rng) : -coeff(rng)));
    out.push_back(std::move(g));
  }
  return out;
}

Rational rational_power(const Rational& base, std::int64_t exp) {
  Rational r = 1;
  Rational b = exp >= 0 ? base : Rational(1) / base;
  for (std::int64_t k = 0; k < std::abs(exp); ++k) r *= b;
  return r;
}

}  // namespace

SupportTuple supports_of(const std::vector<MPoly>& system) {
  SupportTuple out;
  for (const auto& f : system) {
    if (f.is_zero()) throw PreconditionError("the zero polynomial has no support");
    std::vector<Point> pts;
    for (const auto& [e, c] : f.terms()) pts.emplace_back(e.begin(), e.end());
    out.emplace_back(std::move(pts));
  }
  return out;
}

Polytope newton_polytope(const std::vector<MPoly>& system) {
  SupportTuple e = supports_of(system);
  Support sum = e.front();
  for (std::size_t i = 1; i < e.size(); ++i) sum = sum + e[i];
  return convex_hull(sum);
}

Integer expected_resultant_degree(const SupportTuple& supports) {
  if (supports.empty() || supports.size() != supports.front().dim() + 1) {
    throw PreconditionError("expected_resultant_degree needs n+1 supports in dimension n");
  }
  Integer total = 0;
  for (std::size_t i = 0; i < supports.size(); ++i) {
    SupportTuple rest;
    for (std::size_t j = 0; j < supports.size(); ++j) {
      if (j != i) rest.push_back(supports[j]);
    }
    total += mixed_volume(rest);
  }
  return total;
}

CascadeResult iterated_lamination_resultant(const std::vector<MPoly>& system, const Point& a, std::size_t first) {
  require_plane_system(system);
  if (a.size() != 2 || (a[0] == 0 && a[1] == 0)) throw PreconditionError("direction must be a nonzero vector in Z^2");
  if (first > 1) throw PreconditionError("elimination variable index out of range");
  const auto& xy = system[0].variables();
  std::vector<std::string> vars{xy[0], xy[1], "up", "um"};
  std::vector<MPoly> f;
  for (const auto& p : system) {
    if (p.is_zero()) throw DegenerateError(DegenerateError::Reason::Elimination, "input polynomial is zero");
    f.push_back(p.with_variables(vars).strip_monomial(2));
  }
  Exponent eplus{0, 0, 1, 0}, eminus{0, 0, 0, 1};
  for (std::size_t i = 0; i < 2; ++i) {
    eplus[i] = static_cast<int>(std::max<std::int64_t>(-a[i], 0));
    eminus[i] = static_cast<int>(std::max<std::int64_t>(a[i], 0));
  }
  MPoly g = MPoly::monomial(vars, eplus, 1) + MPoly::monomial(vars, eminus, 1);

  CascadeResult out;
  const std::size_t v = first, w = 1 - first;
  out.first = first;
  out.order = xy[v] + " then " + xy[w];
  auto res = [&](const MPoly& p, const MPoly& q, std::size_t var, const std::string& stage) {
    if (!p.depends_on(var) && !q.depends_on(var)) {
      throw DegenerateError(DegenerateError::Reason::Elimination,
                            stage + ": neither polynomial involves '" + vars[var] + "'");
    }
    MPoly r = sylvester_resultant(p, q, var);
    if (r.is_zero()) throw DegenerateError(DegenerateError::Reason::Elimination, stage + ": resultant vanishes identically");
    // a shared power of x or y would make the next resultant vanish
    return record_primitive(r, stage, out.ledger).strip_monomial(2);
  };
  MPoly h1, h2;
  if (g.depends_on(v)) {
    h1 = res(f[0], g, v, "Res_" + xy[v] + "(f1, g)");
    h2 = res(f[1], g, v, "Res_" + xy[v] + "(f2, g)");
  } else {
    h1 = res(f[0], f[1], v, "Res_" + xy[v] + "(f1, f2)");
    h2 = g;
  }
  MPoly r = res(h1, h2, w, "Res_" + xy[w] + "(h1, h2)");
  out.poly = r.with_variables(kU);
  return out;
}

std::pair<int, int> epsilon_exponents(const MPoly& bp) {
  if (bp.is_zero()) throw PreconditionError("epsilon exponents of the zero polynomial");
  return {bp.min_degree(0), bp.min_degree(1)};
}

std::pair<int, int> epsilon_exponents(const LaminationResultant& bp) { return epsilon_exponents(bp.poly); }

LaminationResultant extract_toric_resultant(const CascadeResult& cascade, const std::vector<MPoly>& system,
                                            const Point& a, const OracleRootSet& oracle,
                                            const ExtractionOptions& options, const CascadeResult* alternate) {
  require_plane_system(system);
  const MPoly& R = cascade.poly;
  if (R.is_zero()) throw DegenerateError(DegenerateError::Reason::Resultant, "cascade output vanishes identically");
  const std::size_t both[2] = {0, 1};
  if (!R.is_homogeneous_in(both)) throw NumericError("cascade output is not homogeneous in (up, um)");
  const int D = R.total_degree();
  const SupportTuple E = supports_of(system);
  const int M = to_int(mixed_volume(E));
  const int n_oracle = oracle.total_with_multiplicity;
  if (n_oracle > M) {
    throw NumericError("oracle reports " + std::to_string(n_oracle) + " torus roots, more than the mixed volume " +
                       std::to_string(M));
  }

  LaminationResultant out;
  out.degree = M;
  const UPoly r = dehomogenize(R);
  const int vplus = r.valuation();
  const int vminus = D - r.degree();
  if (vplus > 0) out.normalization.discarded.push_back("up^" + std::to_string(vplus) + ": monomial part of R, re-attached as eps");
  if (vminus > 0) out.normalization.discarded.push_back("um^" + std::to_string(vminus) + ": monomial part of R, re-attached as eps");
  const UPoly core = r.shift_down(vplus);

  // Oracle values -zeta^a, clustered.
  struct Target {
    Complex value;
    int mult;
    bool used;
  };
  std::vector<Target> targets;
  const double tol = options.tolerance;
  auto close = [&](Complex p, Complex q) { return std::abs(p - q) <= tol * std::max(1.0, std::abs(q)); };
  for (const auto& root : oracle.roots) {
    Complex t = -monomial_value(root.value, a);
    bool merged = false;
    for (auto& tg : targets) {
      if (close(t, tg.value)) {
        tg.mult += root.multiplicity;
        merged = true;
        break;
      }
    }
    if (!merged) targets.push_back({t, root.multiplicity, false});
  }

  UPoly Q({Rational(1)});
  if (core.degree() >= 1) {
    const FactorList fl = factor_over_rationals(core.primitive());
    for (const auto& [h, m] : fl.factors) {
      std::vector<std::size_t> hit;
      for (const auto& z : complex_roots(h, tol, options.seed)) {
        std::size_t best = targets.size();
        for (std::size_t i = 0; i < targets.size(); ++i) {
          if (close(z.value, targets[i].value) &&
              (best == targets.size() || std::abs(z.value - targets[i].value) < std::abs(z.value - targets[best].value))) {
            best = i;
          }
        }
        if (best < targets.size()) hit.push_back(best);
      }
      if (hit.empty()) {
        out.normalization.discarded.push_back("(" + h.to_string() + ")^" + std::to_string(m) +
                                              ": no root matches an oracle torus root");
        continue;
      }
      if (hit.size() != static_cast<std::size_t>(h.degree())) {
        throw NumericError("irreducible factor " + h.to_string() + " only partly matches the oracle roots");
      }
      const int k = targets[hit.front()].mult;
      for (auto i : hit) {
        if (targets[i].mult != k || targets[i].used) {
          throw NumericError("inconsistent oracle multiplicities on factor " + h.to_string());
        }
        targets[i].used = true;
      }
      if (k > m) {
        throw NumericError("oracle multiplicity " + std::to_string(k) + " exceeds the multiplicity " + std::to_string(m) +
                           " of " + h.to_string() + " in the cascade");
      }
      if (k < m) {
        out.normalization.discarded.push_back("(" + h.to_string() + ")^" + std::to_string(m - k) +
                                              ": excess multiplicity over the oracle count");
      }
      Q = Q * h.pow(static_cast<unsigned>(k));
    }
  }
  for (const auto& tg : targets) {
    if (!tg.used) throw NumericError("an oracle root has no matching factor in the cascade output");
  }
  if (Q.degree() != n_oracle) throw NumericError("selected factors do not account for the oracle root count");

  // Split M - N between up and um.
  int bound_plus = vplus, bound_minus = vminus;
  if (alternate != nullptr && !alternate->poly.is_zero()) {
    auto [ap, am] = epsilon_exponents(alternate->poly);
    bound_plus = std::min(bound_plus, ap);
    bound_minus = std::min(bound_minus, am);
  }
  const int gap = M - n_oracle;
  std::vector<EpsilonSplit> candidates;
  for (int ep = 0; ep <= std::min(gap, bound_plus); ++ep) {
    if (gap - ep <= bound_minus) candidates.push_back({ep, gap - ep});
  }
  if (candidates.empty()) {
    throw DegenerateError(DegenerateError::Reason::Resultant,
                          "M(E) - N = " + std::to_string(gap) + " cannot be split within the monomial part of R");
  }
  EpsilonSplit chosen = candidates.front();
  if (candidates.size() > 1) {
    std::mt19937_64 rng(options.seed);
    int gp = -1, gm = -1;
    for (int s = 0; s < options.generic_samples; ++s) {
      try {
        auto rg = iterated_lamination_resultant(generic_system(system, rng), a, cascade.first);
        auto [p, m] = epsilon_exponents(rg.poly);
        gp = gp < 0 ? p : std::min(gp, p);
        gm = gm < 0 ? m : std::min(gm, m);
      } catch (const DegenerateError&) {
      }
    }
    bool found = false;
    if (gp >= 0) {
      for (const auto& c : candidates) {
        if (c.plus == vplus - gp && c.minus == vminus - gm) {
          chosen = c;
          found = true;
        }
      }
    }
    if (!found) throw AmbiguousExtraction("several (eps+, eps-) splits are consistent with the cascade", candidates);
  }
  out.eps_plus = chosen.plus;
  out.eps_minus = chosen.minus;

  MPoly bp = MPoly::monomial(kU, {chosen.plus, chosen.minus}, 1) * homogenize(Q, n_oracle);
  out.normalization.content_removed = bp.content();
  bp = bp.primitive_part();
  if (bp.leading_coefficient() < 0) {
    bp = -bp;
    out.normalization.sign = -1;
  }
  out.poly = bp;
  out.normalization.divides_cascade = try_divide(R, bp).has_value();
  if (!out.normalization.divides_cascade) throw NumericError("extracted resultant does not divide the cascade output");

  if (chosen.plus == 0 && chosen.minus == 0) {
    Rational rhs = 1;
    bool defined = true;
    const Polytope P = newton_polytope(system);
    for (const auto& facet : P.facets) {
      Rational rw = facet_resultant(system, facet.normal);
      const std::int64_t ex = dot(facet.normal, a);
      if (rw == 0) {
        defined = false;
        break;
      }
      rhs *= rational_power(rw, ex);
    }
    if (defined) {
      Rational ratio = bp.coefficient({0, M}) / bp.coefficient({M, 0});
      out.normalization.extreme_coefficient_check = abs(ratio) == abs(rhs);
    }
  }
  return out;
}

Rational facet_resultant(const std::vector<MPoly>& system, const Point& w) {
  require_plane_system(system);
  if (w.size() != 2 || (w[0] == 0 && w[1] == 0)) throw PreconditionError("facet direction must be a nonzero vector in Z^2");
  const Point d = primitive_generator(Point{-w[1], w[0]});
  std::vector<UPoly> faces;
  for (const auto& f : system) {
    Support face = face_support(supports_of({f}).front(), w);
    const Point base = face.points().front();
    std::vector<std::pair<std::int64_t, Rational>> terms;
    std::int64_t kmin = 0;
    for (const auto& p : face.points()) {
      const Point diff = p - base;
      const std::int64_t k = dot(diff, d) / dot(d, d);
      if (base + Point{k * d[0], k * d[1]} != p) throw PreconditionError("face points are not on a lattice line");
      kmin = std::min(kmin, k);
      terms.emplace_back(k, f.coefficient(Exponent(p.begin(), p.end())));
    }
    std::vector<Rational> c;
    for (const auto& [k, v] : terms) {
      const auto idx = static_cast<std::size_t>(k - kmin);
      if (c.size() <= idx) c.resize(idx + 1, Rational(0));
      c[idx] += v;
    }
    faces.emplace_back(std::move(c), "s");
  }
  const int m = faces[0].degree(), n = faces[1].degree();
  if (m == 0 && n == 0) return 1;
  const std::vector<std::string> s{"s"};
  MPoly r = sylvester_resultant(faces[0].to_mpoly(s, 0), faces[1].to_mpoly(s, 0), 0);
  return r.is_zero() ? Rational(0) : r.coefficient({0});
}

namespace {

// Full-dimensional P_E and a nonzero direction are required; a direction
// parallel to a facet is reported but not rejected.
bool check_direction(const std::vector<MPoly>& system, const Point& a, std::vector<AmbiguityRidge>& ridges) {
  require_plane_system(system);
  if (a.size() != 2 || (a[0] == 0 && a[1] == 0)) throw PreconditionError("direction must be a nonzero vector in Z^2");
  const Polytope P = newton_polytope(system);
  if (!P.full_dimensional()) throw PreconditionError("the Newton polytope of the system is not full-dimensional");
  if (!is_valid_direction(P, a)) return false;
  ridges = ambiguity_ridges(P, a);
  return true;
}

std::string parallel_warning(const std::vector<MPoly>& system, const Point& a) {
  for (const auto& f : newton_polytope(system).facets) {
    if (dot(f.normal, a) == 0) {
      return "direction " + to_string(a) + " is parallel to the facet with normal " + to_string(f.normal);
    }
  }
  return {};
}

}  // namespace

ReductionReport count_isolated_torus_roots(const std::vector<MPoly>& system, const Point& a,
                                           const PipelineOptions& options) {
  ReductionReport rep;
  rep.direction = a;
  rep.direction_valid = check_direction(system, a, rep.ambiguity_ridges);
  const std::string warning = rep.direction_valid ? std::string() : parallel_warning(system, a);
  rep.M = mixed_volume(supports_of(system));

  CascadeResult primary;
  try {
    primary = iterated_lamination_resultant(system, a, 1);
  } catch (const DegenerateError& e) {
    rep.diagnosis = Diagnosis::Degenerate;
    rep.message = e.what();
    return rep;
  }
  try {
    rep.oracle = torus_roots_2d(system, options.oracle);
  } catch (const DegenerateError& e) {
    rep.diagnosis = Diagnosis::Degenerate;
    rep.message = e.what();
    return rep;
  }
  rep.oracle_count = rep.oracle->total_with_multiplicity;
  std::optional<CascadeResult> alternate;
  try {
    alternate = iterated_lamination_resultant(system, a, 0);
  } catch (const DegenerateError&) {
  }
  try {
    rep.resultant = extract_toric_resultant(primary, system, a, *rep.oracle, options.extraction,
                                            alternate ? &*alternate : nullptr);
  } catch (const DegenerateError& e) {
    rep.diagnosis = Diagnosis::Degenerate;
    rep.message = e.what();
    return rep;
  }
  rep.eps_plus = rep.resultant->eps_plus;
  rep.eps_minus = rep.resultant->eps_minus;
  rep.N = to_int(rep.M) - rep.eps_plus - rep.eps_minus;
  rep.diagnosis = Diagnosis::Finite;
  rep.message = warning;
  return rep;
}

ReductionReport count_distinct_torus_roots(const std::vector<MPoly>& system, const Point& a,
                                           const PipelineOptions& options) {
  ReductionReport rep = count_isolated_torus_roots(system, a, options);
  if (rep.diagnosis != Diagnosis::Finite) return rep;
  const UPoly q = dehomogenize(rep.resultant->poly).shift_down(rep.eps_plus);
  rep.N_prime = q.degree() >= 1 ? square_free_part(q).degree() : 0;
  std::vector<Complex> values;
  for (const auto& root : rep.oracle->roots) values.push_back(monomial_value(root.value, a));
  const double tol = options.extraction.tolerance;
  bool injective = true;
  for (std::size_t i = 0; i < values.size() && injective; ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      if (std::abs(values[i] - values[j]) <= tol * std::max(1.0, std::abs(values[i]))) {
        injective = false;
        break;
      }
    }
  }
  rep.injectivity_checked = injective;
  if (!injective) rep.message += std::string(rep.message.empty() ? "" : "; ") + "zeta -> zeta^a is not injective on the oracle roots; N' is unverified";
  return rep;
}

CoefficientReport multisymmetric_coefficients(const LaminationResultant& bp) {
  const int M = bp.degree;
  const int N = M - bp.eps_plus - bp.eps_minus;
  if (N < 0) throw PreconditionError("eps exponents exceed the degree");
  CoefficientReport out;
  out.C_normalizer = bp.poly.coefficient({M - bp.eps_minus, bp.eps_minus});
  if (out.C_normalizer == 0) throw PreconditionError("zero normalizing coefficient");
  for (int d = 0; d <= N; ++d) {
    out.e_values.push_back(bp.poly.coefficient({M - d - bp.eps_minus, d + bp.eps_minus}) / out.C_normalizer);
  }
  return out;
}

ProductCheck product_identity_check(const std::vector<MPoly>& system, const Point& a, double tol,
                                    const PipelineOptions& options) {
  const ReductionReport rep = count_isolated_torus_roots(system, a, options);
  if (rep.diagnosis != Diagnosis::Finite) {
    throw DegenerateError(DegenerateError::Reason::Resultant, "pipeline did not certify a finite root count: " + rep.message);
  }
  if (rep.eps_plus != 0 || rep.eps_minus != 0) {
    throw PreconditionError("product identity needs eps = (0, 0), got (" + std::to_string(rep.eps_plus) + ", " +
                            std::to_string(rep.eps_minus) + ")");
  }
  ProductCheck out;
  out.rhs = 1;
  for (const auto& facet : newton_polytope(system).facets) {
    const Rational rw = facet_resultant(system, facet.normal);
    const std::int64_t ex = dot(facet.normal, a);
    if (rw == 0) {
      if (ex < 0) {
        throw DegenerateError(DegenerateError::Reason::Resultant,
                              "root at toric infinity: facet resultant along " + to_string(facet.normal) + " vanishes");
      }
      if (ex > 0) out.rhs = 0;
      continue;
    }
    out.rhs *= rational_power(rw, ex);
  }
  std::complex<long double> lhs = 1;
  for (const auto& root : rep.oracle->roots) {
    const Complex v = monomial_value(root.value, a);
    lhs *= std::pow(std::complex<long double>(v.real(), v.imag()), root.multiplicity);
  }
  out.lhs = Complex(static_cast<double>(lhs.real()), static_cast<double>(lhs.imag()));
  const double r = std::abs(to_double(out.rhs));
  out.pass_up_to_sign = std::abs(std::abs(out.lhs) - r) <= tol * std::max({r, std::abs(out.lhs), 1e-300});
  const MPoly& bp = rep.resultant->poly;
  const int M = rep.resultant->degree;
  const Rational ratio = bp.coefficient({0, M}) / bp.coefficient({M, 0});
  out.exact_match = abs(ratio) == abs(out.rhs);
  return out;
}

DegeneracyReport diagnose_degeneracy(const std::vector<MPoly>& system, const Point& a, const PipelineOptions& options) {
  DegeneracyReport out;
  if (!check_direction(system, a, out.ridges)) out.detail = parallel_warning(system, a) + "; ";
  const ReductionReport rep = count_isolated_torus_roots(system, a, options);
  if (rep.diagnosis == Diagnosis::Finite) {
    out.classification = DegeneracyClass::Finite;
    out.detail += "N = " + std::to_string(*rep.N);
    return out;
  }
  out.detail += rep.message;
  try {
    torus_roots_2d(system, options.oracle);
    out.classification = DegeneracyClass::AmbiguityLocusRootSuspected;
  } catch (const DegenerateError&) {
    out.classification = DegeneracyClass::InfiniteTorusRootsSuspected;
  }
  return out;
}

}  // namespace toricred
