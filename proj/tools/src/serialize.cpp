#include "serialize.hpp"

#include <algorithm>
#include <sstream>

namespace toricred::cli {

namespace {

json ledger_json(const std::vector<ContentEntry>& ledger) {
  json out = json::array();
  for (const auto& e : ledger) out.push_back({{"stage", e.stage}, {"content", to_string(e.content)}});
  return out;
}

const char* diagnosis_name(Diagnosis d) {
  switch (d) {
    case Diagnosis::Finite: return "FINITE";
    case Diagnosis::Degenerate: return "DEGENERATE_SEE_THM2";
    default: return "ERROR";
  }
}

}  // namespace

json to_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

json to_json(const Point& p) { return json(p); }

json to_json(const Support& s) {
  json out = json::array();
  for (const auto& p : s.points()) out.push_back(to_json(p));
  return out;
}

json to_json(const SupportTuple& t) {
  json out = json::array();
  for (const auto& s : t) out.push_back(to_json(s));
  return out;
}

json to_json(const Polytope& p) {
  json facets = json::array();
  for (const auto& f : p.facets) {
    facets.push_back({{"normal", to_json(f.normal)}, {"offset", f.offset}, {"vertices", f.vertices}});
  }
  json ridges = json::array();
  for (const auto& r : p.ridges) ridges.push_back({{"facets", {r.first, r.second}}, {"vertices", r.vertices}});
  json vertices = json::array();
  for (const auto& v : p.vertices) vertices.push_back(to_json(v));
  return {{"ambient_dimension", p.ambient}, {"dimension", p.dim}, {"vertices", vertices},
          {"facets", facets},              {"ridges", ridges},     {"volume", to_string(euclidean_volume(p))}};
}

json to_json(const MPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exponent", e}, {"coefficient", to_string(c)}});
  return {{"variables", p.variables()}, {"terms", terms}, {"text", p.to_string()}};
}

json to_json(const UPoly& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_string(c));
  return {{"variable", p.variable()}, {"coefficients", coeffs}, {"text", p.to_string()}};
}

json to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

json to_json(const Fill& f) { return {{"parts", to_json(f.parts)}, {"mixed_volume", to_json(f.mixed_volume)}}; }

json to_json(const AmbiguityRidge& r) {
  json vertices = json::array();
  for (const auto& v : r.vertices) vertices.push_back(to_json(v));
  return {{"normal_plus", to_json(r.normal_plus)}, {"normal_minus", to_json(r.normal_minus)}, {"vertices", vertices}};
}

json to_json(const OracleRootSet& s) {
  json roots = json::array();
  for (const auto& r : s.roots) {
    roots.push_back({{"value", {to_json(r.value[0]), to_json(r.value[1])}},
                     {"multiplicity", r.multiplicity},
                     {"residual", r.residual}});
  }
  json suspects = json::array();
  for (const auto& z : s.coordinate_suspects) suspects.push_back({to_json(z[0]), to_json(z[1])});
  return {{"roots", roots},
          {"total_with_multiplicity", s.total_with_multiplicity},
          {"tolerance", s.tolerance},
          {"coordinate_suspects", suspects}};
}

json to_json(const LaminationResultant& bp) {
  json norm = {{"content_removed", to_string(bp.normalization.content_removed)},
               {"sign", bp.normalization.sign},
               {"discarded", bp.normalization.discarded},
               {"divides_cascade", bp.normalization.divides_cascade}};
  if (bp.normalization.extreme_coefficient_check) {
    norm["extreme_coefficient_check"] = *bp.normalization.extreme_coefficient_check;
  } else {
    norm["extreme_coefficient_check"] = nullptr;
  }
  return {{"poly", to_json(bp.poly)},
          {"degree", bp.degree},
          {"eps", {bp.eps_plus, bp.eps_minus}},
          {"normalization", norm}};
}

json to_json(const ReductionReport& r) {
  json ridges = json::array();
  for (const auto& x : r.ambiguity_ridges) ridges.push_back(to_json(x));
  json out = {{"direction", to_json(r.direction)},
              {"direction_valid", r.direction_valid},
              {"M", to_json(r.M)},
              {"diagnosis", diagnosis_name(r.diagnosis)},
              {"ambiguity_ridges", ridges},
              {"message", r.message},
              {"injectivity_checked", r.injectivity_checked}};
  if (r.diagnosis == Diagnosis::Finite) {
    out["eps"] = {r.eps_plus, r.eps_minus};
  } else {
    out["eps"] = nullptr;
  }
  out["N"] = r.N ? json(*r.N) : json("INFINITE");
  out["N_prime"] = r.N_prime ? json(*r.N_prime) : json("UNKNOWN");
  out["oracle_count"] = r.oracle_count ? json(*r.oracle_count) : json(nullptr);
  return out;
}

json to_json(const CoefficientReport& c) {
  json e = json::array();
  for (const auto& v : c.e_values) e.push_back(to_string(v));
  return {{"C_normalizer", to_string(c.C_normalizer)}, {"e_values", e}};
}

json to_json(const ProductCheck& c) {
  return {{"lhs", to_json(c.lhs)},
          {"rhs", to_string(c.rhs)},
          {"pass_up_to_sign", c.pass_up_to_sign},
          {"exact_match", c.exact_match ? json(*c.exact_match) : json(nullptr)}};
}

json to_json(const DegeneracyReport& d) {
  const char* name = d.classification == DegeneracyClass::Finite ? "FINITE"
                     : d.classification == DegeneracyClass::InfiniteTorusRootsSuspected
                         ? "INFINITE_TORUS_ROOTS_SUSPECTED"
                         : "AMBIGUITY_LOCUS_ROOT_SUSPECTED";
  json ridges = json::array();
  for (const auto& r : d.ridges) ridges.push_back(to_json(r));
  return {{"classification", name}, {"ridges", ridges}, {"detail", d.detail}};
}

json to_json(const GcpResult& g) {
  return {{"fill", to_json(g.fill)},
          {"A", to_json(g.A)},
          {"u_variables", g.u_variables},
          {"lowest_s_power", g.lowest_s_power},
          {"F_A", to_json(g.F_A)},
          {"F_A_degree", g.F_A_degree},
          {"M_P", to_json(g.M_P)},
          {"compatible", g.compatible},
          {"H_terms", g.H_multiple.num_terms()},
          {"ledger", ledger_json(g.ledger)}};
}

json to_json(const DiophantineResult& d) {
  json sols = json::array();
  for (const auto& s : d.solutions) {
    json t = json::array();
    for (const auto& v : s) t.push_back(v.get_str());
    sols.push_back(t);
  }
  json elims = json::array();
  for (const auto& e : d.per_coordinate_eliminants) elims.push_back(to_json(e));
  const auto& h = d.hypothesis_checks;
  return {{"solutions", sols},
          {"certificate", d.certificate == Certificate::CompleteUnderHypotheses ? "COMPLETE_UNDER_HYPOTHESES" : "VERIFIED_ONLY"},
          {"hypothesis_checks",
           {{"square_system", h.square_system},
            {"oracle_coordinates_nonzero", h.oracle_coordinates_nonzero},
            {"no_toric_infinity_detected", h.no_toric_infinity_detected},
            {"detail", h.detail}}},
          {"per_coordinate_eliminants", elims},
          {"method", d.method}};
}

namespace {

void text_into(const json& j, const std::string& prefix, std::ostringstream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      text_into(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    }
    return;
  }
  const bool leaf_array = j.is_array() && std::none_of(j.begin(), j.end(), [](const json& x) { return x.is_object(); });
  if (j.is_array() && !leaf_array) {
    for (std::size_t i = 0; i < j.size(); ++i) text_into(j[i], prefix + "[" + std::to_string(i) + "]", out);
    return;
  }
  out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
}

}  // namespace

std::string to_text(const json& j) {
  std::ostringstream out;
  text_into(j, "", out);
  return out.str();
}

}  // namespace toricred::cli
