#pragma once

#include <string>
#include <vector>

#include "toricred/mpoly.hpp"
#include "toricred/numeric.hpp"
#include "toricred/upoly.hpp"

namespace toricred {

/// Nonzero polynomial in t vanishing at the i-th coordinate of every torus root.
UPoly coordinate_eliminant(const std::vector<MPoly>& system, std::size_t i);

enum class Certificate { CompleteUnderHypotheses, VerifiedOnly };

struct HypothesisChecks {
  bool square_system = false;
  bool oracle_coordinates_nonzero = false;
  bool no_toric_infinity_detected = false;
  std::string detail;
};

struct DiophantineResult {
  std::vector<std::vector<Integer>> solutions;  // sorted, distinct
  Certificate certificate = Certificate::VerifiedOnly;
  HypothesisChecks hypothesis_checks;
  std::vector<UPoly> per_coordinate_eliminants;
  std::string method;
};

struct DiophantineOptions {
  std::size_t max_candidates = 1000000;
  OracleOptions oracle;
};

DiophantineResult integer_roots(const std::vector<MPoly>& system, const DiophantineOptions& options = {});

}  // namespace toricred
