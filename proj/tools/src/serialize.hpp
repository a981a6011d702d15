#pragma once

#include "json.hpp"
#include "toricred/diophantine.hpp"
#include "toricred/fill.hpp"
#include "toricred/gcp.hpp"
#include "toricred/lamination.hpp"
#include "toricred/lattice.hpp"
#include "toricred/numeric.hpp"

namespace toricred::cli {

using nlohmann::json;

/// Machine integer when it fits, decimal string otherwise.
json to_json(const Integer& z);
json to_json(const Point& p);
json to_json(const Support& s);
json to_json(const SupportTuple& t);
json to_json(const Polytope& p);
json to_json(const MPoly& p);
json to_json(const UPoly& p);
json to_json(const Complex& z);
json to_json(const Fill& f);
json to_json(const AmbiguityRidge& r);
json to_json(const OracleRootSet& s);
json to_json(const LaminationResultant& bp);
json to_json(const ReductionReport& r);
json to_json(const CoefficientReport& c);
json to_json(const ProductCheck& c);
json to_json(const DegeneracyReport& d);
json to_json(const GcpResult& g);
json to_json(const DiophantineResult& d);

std::string to_text(const json& j);

}  // namespace toricred::cli
