#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "input.hpp"
#include "serialize.hpp"
#include "toricred/errors.hpp"

namespace toricred::cli {

namespace {

struct Flags {
  std::string format = "json";
  std::string direction;
  std::optional<double> tolerance;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> max_candidates;
  bool from_supports = false;
  std::string input = "-";
};

struct Outcome {
  json payload;
  int code = kOk;
};

struct Context {
  Flags flags;
  Input input;

  const SystemFile& system() const {
    if (!input.system) throw PreconditionError("this command needs a polynomial system file, not bare supports");
    return *input.system;
  }

  double tolerance() const {
    if (flags.tolerance) return *flags.tolerance;
    if (input.system && input.system->tolerance) return *input.system->tolerance;
    return 1e-6;
  }

  std::uint64_t seed() const {
    if (flags.seed) return *flags.seed;
    if (input.system && input.system->seed) return *input.system->seed;
    return 1;
  }

  PipelineOptions pipeline() const {
    PipelineOptions o;
    o.oracle.tolerance = tolerance();
    o.oracle.seed = seed();
    o.extraction.tolerance = tolerance();
    o.extraction.seed = seed();
    return o;
  }

  // Explicit flag, then the file header, then the smallest valid direction.
  std::pair<Point, std::string> direction() const {
    if (!flags.direction.empty()) return {parse_direction(flags.direction), "flag"};
    if (input.system && input.system->direction) return {*input.system->direction, "file"};
    const auto& sys = system();
    const Polytope P = newton_polytope(sys.polynomials);
    if (!P.full_dimensional()) throw PreconditionError("the Newton polytope is not full-dimensional; no valid direction exists");
    const auto n = static_cast<std::int64_t>(P.ambient);
    if (n != 2) throw PreconditionError("automatic direction search is implemented for two variables");
    for (std::int64_t r = 1; r <= 16; ++r) {
      for (std::int64_t a1 = r; a1 >= -r; --a1) {
        for (std::int64_t a2 = r; a2 >= -r; --a2) {
          if (std::max(std::abs(a1), std::abs(a2)) != r) continue;
          Point a{a1, a2};
          if (is_valid_direction(P, a)) return {a, "search"};
        }
      }
    }
    throw PreconditionError("no valid direction with max-norm <= 16");
  }
};

json report_json(const ReductionReport& r, const std::string& source) {
  json j = to_json(r);
  j["direction_source"] = source;
  return j;
}

Outcome cmd_hull(const Context& c) {
  json polys = json::array();
  for (const auto& s : c.input.supports) polys.push_back(to_json(convex_hull(s)));
  json out = {{"polytopes", polys}};
  if (c.input.system) out["newton_polytope"] = to_json(newton_polytope(c.input.system->polynomials));
  return {out};
}

Outcome cmd_mixed_volume(const Context& c) {
  const auto& s = c.input.supports;
  if (s.size() != s.front().dim()) {
    throw PreconditionError("mixed volume needs n supports in dimension n, got " + std::to_string(s.size()) +
                            " in dimension " + std::to_string(s.front().dim()));
  }
  return {{{"mixed_volume", to_json(mixed_volume(s))}}};
}

Outcome cmd_degree(const Context& c) {
  SupportTuple s = c.input.supports;
  json out;
  if (s.size() == s.front().dim()) {
    auto [a, source] = c.direction();
    if (a.size() != s.front().dim()) throw PreconditionError("direction has the wrong dimension");
    s.push_back(Support({Point(a.size(), 0), a}));
    out["direction"] = to_json(a);
    out["direction_source"] = source;
  }
  out["degree"] = to_json(expected_resultant_degree(s));
  return {out};
}

Outcome cmd_fill(const Context& c) {
  FillOptions opt;
  opt.from_supports = c.flags.from_supports;
  if (c.flags.max_candidates) opt.max_evaluations = *c.flags.max_candidates;
  const Fill f = find_irreducible_fill(c.input.supports, opt);
  return {{{"fill", to_json(f)}, {"mode", opt.from_supports ? "supports" : "lattice_points"}}};
}

Outcome cmd_count(const Context& c, bool distinct) {
  auto [a, source] = c.direction();
  const auto& sys = c.system();
  const ReductionReport r = distinct ? count_distinct_torus_roots(sys.polynomials, a, c.pipeline())
                                     : count_isolated_torus_roots(sys.polynomials, a, c.pipeline());
  return {report_json(r, source), r.diagnosis == Diagnosis::Finite ? kOk : kDegenerate};
}

std::pair<std::optional<LaminationResultant>, Outcome> certified(const Context& c) {
  auto [a, source] = c.direction();
  const ReductionReport r = count_isolated_torus_roots(c.system().polynomials, a, c.pipeline());
  if (r.diagnosis != Diagnosis::Finite) return {std::nullopt, {report_json(r, source), kDegenerate}};
  return {r.resultant, {{{"direction", to_json(a)}, {"direction_source", source}}}};
}

Outcome cmd_resultant(const Context& c) {
  auto [bp, out] = certified(c);
  if (bp) out.payload["resultant"] = to_json(*bp);
  return out;
}

Outcome cmd_coefficients(const Context& c) {
  auto [bp, out] = certified(c);
  if (bp) out.payload["coefficients"] = to_json(multisymmetric_coefficients(*bp));
  return out;
}

Outcome cmd_product(const Context& c) {
  auto [a, source] = c.direction();
  const ProductCheck p = product_identity_check(c.system().polynomials, a, c.tolerance(), c.pipeline());
  return {{{"direction", to_json(a)}, {"direction_source", source}, {"product_check", to_json(p)}}};
}

Outcome cmd_diagnose(const Context& c) {
  auto [a, source] = c.direction();
  const DegeneracyReport d = diagnose_degeneracy(c.system().polynomials, a, c.pipeline());
  json out = {{"direction", to_json(a)}, {"direction_source", source}, {"diagnosis", to_json(d)}};
  return {out, d.classification == DegeneracyClass::Finite ? kOk : kDegenerate};
}

Outcome cmd_gcp(const Context& c) {
  const auto& sys = c.system().polynomials;
  const GcpResult g = toric_gcp(sys);
  json out = {{"gcp", to_json(g)}};
  json checks = json::array();
  try {
    OracleOptions o;
    o.tolerance = c.tolerance();
    o.seed = c.seed();
    for (const auto& d : check_root_divisibility(g, sys, torus_roots_2d(sys, o), 1e-6, c.seed())) {
      checks.push_back({{"root", {to_json(d.root[0]), to_json(d.root[1])}},
                        {"residual", d.residual},
                        {"exact", d.exact ? json(*d.exact) : json(nullptr)},
                        {"pass", d.pass}});
    }
    out["divisibility"] = checks;
  } catch (const DegenerateError& e) {
    out["divisibility"] = nullptr;
    out["oracle"] = e.what();
  }
  return {out};
}

Outcome cmd_integer_roots(const Context& c) {
  DiophantineOptions o;
  o.oracle.tolerance = c.tolerance();
  o.oracle.seed = c.seed();
  if (c.flags.max_candidates) o.max_candidates = *c.flags.max_candidates;
  return {to_json(integer_roots(c.system().polynomials, o))};
}

Outcome cmd_oracle(const Context& c) {
  OracleOptions o;
  o.tolerance = c.tolerance();
  o.seed = c.seed();
  return {to_json(torus_roots_2d(c.system().polynomials, o))};
}

const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::Degenerate: return "degenerate";
    case ErrorKind::Cap: return "cap";
    case ErrorKind::Numeric: return "numeric";
    case ErrorKind::Ambiguous: return "ambiguous";
  }
  return "other";
}

int code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse: return kParse;
    case ErrorKind::Precondition: return kPrecondition;
    case ErrorKind::Degenerate: return kDegenerate;
    case ErrorKind::Cap: return kCap;
    default: return kOther;
  }
}

void emit(const Flags& flags, const json& payload, std::ostream& out) {
  if (flags.format == "text") {
    out << to_text(payload);
  } else {
    out << payload.dump(2) << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Toric univariate reduction for sparse polynomial systems"};
  app.require_subcommand(1);
  Flags flags;

  using Handler = Outcome (*)(const Context&);
  const std::vector<std::tuple<std::string, std::string, Handler>> commands = {
      {"hull", "convex hulls of the supports (and P_E for a system)", cmd_hull},
      {"mixed-volume", "mixed volume of n supports in dimension n", cmd_mixed_volume},
      {"degree", "expected degree of the lamination resultant", cmd_degree},
      {"fill", "an irreducible fill of the Newton polytopes", cmd_fill},
      {"count-roots", "isolated torus roots with multiplicity", [](const Context& c) { return cmd_count(c, false); }},
      {"distinct-roots", "distinct torus roots", [](const Context& c) { return cmd_count(c, true); }},
      {"resultant", "certified lamination resultant bp_a", cmd_resultant},
      {"coefficients", "elementary symmetric functions of the a-monomials of the roots", cmd_coefficients},
      {"product-check", "facet-resultant product identity", cmd_product},
      {"diagnose", "classify a degenerate reduction", cmd_diagnose},
      {"gcp", "toric generalized characteristic polynomial", cmd_gcp},
      {"integer-roots", "all integer solutions with nonzero coordinates", cmd_integer_roots},
      {"oracle-solve", "numeric torus roots (verification oracle)", cmd_oracle},
  };
  std::vector<CLI::App*> subs;
  for (const auto& [name, help, handler] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("input", flags.input, "system file or JSON supports file; '-' or absent reads stdin");
    sub->add_option("--format", flags.format, "output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    sub->add_option("--direction", flags.direction, "direction a as a1,a2 (default: search small valid directions)");
    sub->add_option("--tolerance", flags.tolerance, "numeric tolerance (default 1e-6)");
    sub->add_option("--seed", flags.seed, "seed for randomized steps (default 1)");
    sub->add_option("--max-candidates", flags.max_candidates,
                    "cap on candidate tuples (integer-roots, default 1000000) or fill evaluations (fill, default 200000)");
    if (name == "fill") sub->add_flag("--from-supports", flags.from_supports, "draw fill points from the supports only");
    subs.push_back(sub);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kParse;
  }

  std::size_t which = 0;
  while (which < subs.size() && !subs[which]->parsed()) ++which;
  const Handler handler = std::get<2>(commands[which]);

  try {
    std::string text;
    if (flags.input == "-") {
      std::ostringstream ss;
      ss << in.rdbuf();
      text = ss.str();
    } else {
      std::ifstream file(flags.input);
      if (!file) throw PreconditionError("cannot open input file '" + flags.input + "'");
      std::ostringstream ss;
      ss << file.rdbuf();
      text = ss.str();
    }
    Context ctx{flags, parse_input(text)};
    const Outcome o = handler(ctx);
    emit(flags, o.payload, out);
    return o.code;
  } catch (const Error& e) {
    err << "error (" << kind_name(e.kind()) << "): " << e.what() << "\n";
    json payload = {{"error", {{"kind", kind_name(e.kind())}, {"message", e.what()}}}};
    if (const auto* amb = dynamic_cast<const AmbiguousExtraction*>(&e)) {
      json cands = json::array();
      for (const auto& s : amb->candidates()) cands.push_back({s.plus, s.minus});
      payload["error"]["candidates"] = cands;
    }
    emit(flags, payload, out);
    return code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    emit(flags, {{"error", {{"kind", "other"}, {"message", e.what()}}}}, out);
    return kOther;
  }
}

}  // namespace toricred::cli
