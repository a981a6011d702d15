#pragma once

#include <cstddef>
#include <span>

#include "toricred/lattice.hpp"

namespace toricred {

struct Fill {
  SupportTuple parts;
  Integer mixed_volume;
};

struct FillOptions {
  /// Draw candidates from the given supports instead of all lattice points.
  bool from_supports = false;
  std::size_t max_evaluations = 200000;
  std::size_t lattice_cap = 5000;
  /// On search exhaustion, shrink the vertex tuple greedily instead of failing.
  bool greedy_fallback = true;
};

/// Irreducible fill of the tuple of hulls. `supports` is required when
/// `options.from_supports` is set.
Fill find_irreducible_fill(std::span<const Polytope> polytopes, const FillOptions& options = {},
                           const SupportTuple* supports = nullptr);
Fill find_irreducible_fill(const SupportTuple& supports, const FillOptions& options = {});

/// D_i inside P_i, equal mixed volume, and no single point removable.
bool is_irreducible_fill(const SupportTuple& parts, std::span<const Polytope> polytopes);

}  // namespace toricred
