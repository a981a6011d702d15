#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toricred/lattice.hpp"
#include "toricred/mpoly.hpp"
#include "toricred/numeric.hpp"

namespace toricred {

/// Supports of a system as a tuple of lattice point sets.
SupportTuple supports_of(const std::vector<MPoly>& system);

/// Sum over i of the mixed volume of the tuple with E_i omitted.
Integer expected_resultant_degree(const SupportTuple& supports);

struct ContentEntry {
  std::string stage;
  Rational content;
};

/// Output of the iterated Sylvester cascade: a bivariate form in (up, um).
struct CascadeResult {
  MPoly poly;  // over {"up", "um"}
  std::size_t first = 1;  // variable eliminated first
  std::string order;
  std::vector<ContentEntry> ledger;
};

/// Eliminate `first` (variable index) against up*x^{a-} + um*x^{a+}, then the
/// other variable. The default eliminates the second variable first.
CascadeResult iterated_lamination_resultant(const std::vector<MPoly>& system, const Point& a, std::size_t first = 1);

struct Normalization {
  Rational content_removed;
  int sign = 1;
  std::vector<std::string> discarded;  // factors of R left out, with reason
  bool divides_cascade = false;
  std::optional<bool> extreme_coefficient_check;  // only when eps = (0, 0)
};

struct LaminationResultant {
  MPoly poly;  // over {"up", "um"}
  int degree = 0;
  int eps_plus = 0;
  int eps_minus = 0;
  Normalization normalization;
};

struct ExtractionOptions {
  double tolerance = 1e-6;
  std::uint64_t seed = 1;
  int generic_samples = 2;
};

/// Isolate bp_a inside the cascade output R using the oracle's roots.
/// `alternate` is the cascade in the other elimination order, if available.
LaminationResultant extract_toric_resultant(const CascadeResult& R, const std::vector<MPoly>& system, const Point& a,
                                            const OracleRootSet& oracle, const ExtractionOptions& options = {},
                                            const CascadeResult* alternate = nullptr);

/// Lowest exponents of up and um over all monomials.
std::pair<int, int> epsilon_exponents(const MPoly& bp);
std::pair<int, int> epsilon_exponents(const LaminationResultant& bp);

enum class Diagnosis { Finite, Degenerate, Error };

struct ReductionReport {
  Point direction;
  bool direction_valid = false;  // not parallel to any facet of P_E
  Integer M;  // mixed volume of the supports
  int eps_plus = 0;
  int eps_minus = 0;
  std::optional<int> N;        // empty means infinite or undetermined
  std::optional<int> N_prime;  // empty means unknown
  bool injectivity_checked = false;
  std::optional<int> oracle_count;
  std::vector<AmbiguityRidge> ambiguity_ridges;
  Diagnosis diagnosis = Diagnosis::Error;
  std::optional<LaminationResultant> resultant;
  std::optional<OracleRootSet> oracle;
  std::string message;
};

struct PipelineOptions {
  OracleOptions oracle;
  ExtractionOptions extraction;
};

ReductionReport count_isolated_torus_roots(const std::vector<MPoly>& system, const Point& a,
                                           const PipelineOptions& options = {});
ReductionReport count_distinct_torus_roots(const std::vector<MPoly>& system, const Point& a,
                                           const PipelineOptions& options = {});

struct CoefficientReport {
  Rational C_normalizer;
  std::vector<Rational> e_values;
};

CoefficientReport multisymmetric_coefficients(const LaminationResultant& bp);

/// Sylvester resultant of the face system along the facet normal w.
Rational facet_resultant(const std::vector<MPoly>& system, const Point& w);

struct ProductCheck {
  Complex lhs;
  Rational rhs;
  bool pass_up_to_sign = false;
  std::optional<bool> exact_match;  // bp extreme-coefficient ratio against rhs
};

ProductCheck product_identity_check(const std::vector<MPoly>& system, const Point& a, double tol = 1e-6,
                                    const PipelineOptions& options = {});

enum class DegeneracyClass { Finite, InfiniteTorusRootsSuspected, AmbiguityLocusRootSuspected };

struct DegeneracyReport {
  DegeneracyClass classification = DegeneracyClass::Finite;
  std::vector<AmbiguityRidge> ridges;  // empty when the direction is parallel to a facet
  std::string detail;
};

DegeneracyReport diagnose_degeneracy(const std::vector<MPoly>& system, const Point& a,
                                     const PipelineOptions& options = {});

/// Newton polytope P_E of the system (hull of the Minkowski sum of supports).
Polytope newton_polytope(const std::vector<MPoly>& system);

}  // namespace toricred
