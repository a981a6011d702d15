#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toricred/fill.hpp"
#include "toricred/lamination.hpp"
#include "toricred/mpoly.hpp"
#include "toricred/numeric.hpp"

namespace toricred {

/// F* with unit coefficients and supports D_i, over the given variables.
std::vector<MPoly> build_fill_system(const Fill& fill, const std::vector<std::string>& variables = {"x", "y"});

struct FillGenericityReport {
  Integer mixed_volume;
  int oracle_count = 0;
  bool pass = false;
};

/// Oracle root count of F* against M(D); a mismatch raises a degeneracy error.
FillGenericityReport verify_fill_genericity(const Fill& fill, const OracleOptions& options = {});

struct DivisibilityCheck {
  std::array<Complex, 2> root;
  double residual = 0.0;
  std::optional<bool> exact;  // only for rational roots
  bool pass = false;
};

struct GcpResult {
  Fill fill;
  Support A;
  std::vector<std::string> u_variables;
  MPoly H_multiple;  // over {"s", u...}
  MPoly F_A;         // over {u...}
  int lowest_s_power = 0;
  std::vector<ContentEntry> ledger;
  bool compatible = false;  // fan of P_E refines the fan of Conv(A)
  int F_A_degree = 0;
  Integer M_P;
};

/// Simplex vertices {O, e1, ..., en}.
Support standard_simplex(std::size_t n);

GcpResult toric_gcp(const std::vector<MPoly>& system, const Support& A, const Fill& fill);
GcpResult toric_gcp(const std::vector<MPoly>& system);

/// Checks that g(zeta) = sum_e u_e zeta^e divides F_A for each oracle root.
std::vector<DivisibilityCheck> check_root_divisibility(const GcpResult& gcp, const std::vector<MPoly>& system,
                                                       const OracleRootSet& roots, double tol = 1e-6,
                                                       std::uint64_t seed = 1);

}  // namespace toricred
