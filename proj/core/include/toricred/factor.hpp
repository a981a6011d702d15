#pragma once

#include <utility>
#include <vector>

#include "toricred/upoly.hpp"

namespace toricred {

struct FactorList {
  Rational unit;
  /// Irreducible primitive factors with positive leading coefficient.
  std::vector<std::pair<UPoly, int>> factors;

  UPoly expand(const std::string& variable = "t") const;
};

/// Complete factorization over Q: square-free decomposition, then
/// Berlekamp-free Cantor-Zassenhaus modulo a small prime, Hensel lifting
/// and exhaustive recombination of modular factors.
FactorList factor_over_rationals(const UPoly& f);

struct RationalRoot {
  Rational value;
  int multiplicity;
};

/// Rational roots with exact multiplicities, ascending by value.
std::vector<RationalRoot> rational_roots(const UPoly& f);

}  // namespace toricred
