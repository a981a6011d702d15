#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "toricred/mpoly.hpp"
#include "toricred/upoly.hpp"

namespace toricred {

using Complex = std::complex<double>;

struct ApproxRoot {
  Complex value;
  int multiplicity = 1;
  double residual = 0.0;  // |f(z)| / sum |c_k| |z|^k
};

/// All deg f complex roots; exact multiplicities come from the square-free
/// decomposition, roots closer than max(tol, 1e-9) are merged.
std::vector<ApproxRoot> complex_roots(const UPoly& f, double tol = 1e-6, std::uint64_t seed = 1);

struct TorusRoot {
  std::array<Complex, 2> value;
  int multiplicity = 1;
  double residual = 0.0;  // max relative residual over the input polynomials
};

struct OracleOptions {
  double tolerance = 1e-6;
  double nonzero_threshold = 1e-8;
  std::uint64_t seed = 1;
};

struct OracleRootSet {
  std::vector<TorusRoot> roots;
  int total_with_multiplicity = 0;
  double tolerance = 0.0;
  /// Common roots with a coordinate below the nonzero threshold.
  std::vector<std::array<Complex, 2>> coordinate_suspects;
};

/// Common roots in (C*)^2 of two polynomials in two variables.
OracleRootSet torus_roots_2d(const std::vector<MPoly>& system, const OracleOptions& options = {});
int count_torus_roots_oracle(const std::vector<MPoly>& system, const OracleOptions& options = {});

/// Relative residual of p at a complex point.
double relative_residual(const MPoly& p, std::span<const Complex> point);

}  // namespace toricred
