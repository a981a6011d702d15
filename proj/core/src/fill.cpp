#include "toricred/fill.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "toricred/errors.hpp"

namespace toricred {

namespace {

std::vector<Point> candidate_pool(const Polytope& p, const Support* support, const FillOptions& opt) {
  std::vector<Point> pool = p.vertices;
  std::vector<Point> rest = support != nullptr ? support->points() : lattice_points(p, opt.lattice_cap);
  for (const auto& q : rest) {
    if (std::find(pool.begin(), pool.end(), q) == pool.end()) pool.push_back(q);
  }
  return pool;
}

bool single_point_minimal(const SupportTuple& parts, const Integer& target) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].size() == 1) continue;  // removing the last point empties the part
    for (std::size_t j = 0; j < parts[i].size(); ++j) {
      SupportTuple smaller = parts;
      smaller[i] = parts[i].without(j);
      if (mixed_volume(smaller) >= target) return false;
    }
  }
  return true;
}

SupportTuple greedy_shrink(SupportTuple parts, const Integer& target) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < parts.size() && !changed; ++i) {
      if (parts[i].size() == 1) continue;
      for (std::size_t j = 0; j < parts[i].size(); ++j) {
        SupportTuple smaller = parts;
        smaller[i] = parts[i].without(j);
        if (mixed_volume(smaller) == target) {
          parts = std::move(smaller);
          changed = true;
          break;
        }
      }
    }
  }
  return parts;
}

}  // namespace

Fill find_irreducible_fill(std::span<const Polytope> polytopes, const FillOptions& options,
                           const SupportTuple* supports) {
  const std::size_t n = polytopes.size();
  if (options.from_supports && (supports == nullptr || supports->size() != n)) {
    throw PreconditionError("support-restricted fill search needs the supports");
  }
  const Integer target = mixed_volume(polytopes);
  if (target == 0) throw PreconditionError("degenerate tuple: mixed volume is 0");

  std::vector<std::vector<Point>> pools;
  for (std::size_t i = 0; i < n; ++i) {
    pools.push_back(candidate_pool(polytopes[i], options.from_supports ? &(*supports)[i] : nullptr, options));
  }
  std::size_t max_total = 0;
  for (const auto& p : pools) max_total += p.size();

  std::size_t evaluations = 0;
  std::size_t reached = n;
  std::optional<SupportTuple> found;
  std::vector<std::vector<Point>> chosen(n);

  // Choose exactly sizes[i] points from pool i, in pool order.
  std::function<bool(std::size_t, std::size_t, const std::vector<std::size_t>&)> pick =
      [&](std::size_t part, std::size_t start, const std::vector<std::size_t>& sizes) -> bool {
    if (part == n) {
      if (++evaluations > options.max_evaluations) return true;
      SupportTuple d;
      for (auto& c : chosen) d.emplace_back(c);
      if (mixed_volume(d) == target) {
        found = std::move(d);
        return true;
      }
      return false;
    }
    if (chosen[part].size() == sizes[part]) return pick(part + 1, 0, sizes);
    const std::size_t need = sizes[part] - chosen[part].size();
    for (std::size_t k = start; k + need <= pools[part].size(); ++k) {
      chosen[part].push_back(pools[part][k]);
      bool stop = pick(part, k + 1, sizes);
      chosen[part].pop_back();
      if (stop) return true;
    }
    return false;
  };

  std::function<bool(std::size_t, std::size_t, std::vector<std::size_t>&)> compose =
      [&](std::size_t part, std::size_t left, std::vector<std::size_t>& sizes) -> bool {
    if (part + 1 == n) {
      if (left < 1 || left > pools[part].size()) return false;
      sizes[part] = left;
      return pick(0, 0, sizes);
    }
    for (std::size_t s = 1; s <= pools[part].size() && s + (n - part - 1) <= left; ++s) {
      sizes[part] = s;
      if (compose(part + 1, left - s, sizes)) return true;
    }
    return false;
  };

  for (std::size_t total = n; total <= max_total; ++total) {
    reached = total;
    std::vector<std::size_t> sizes(n);
    compose(0, total, sizes);
    if (found || evaluations > options.max_evaluations) break;
  }

  SupportTuple parts;
  if (found) {
    parts = greedy_shrink(std::move(*found), target);
  } else if (options.greedy_fallback) {
    SupportTuple start;
    for (const auto& p : polytopes) start.push_back(p.vertex_support());
    parts = greedy_shrink(std::move(start), target);
  } else {
    throw CapExceeded("fill search exceeded " + std::to_string(options.max_evaluations) +
                      " evaluations; exhausted all tuples of total size < " + std::to_string(reached) +
                      " without reaching mixed volume " + target.get_str());
  }
  if (!single_point_minimal(parts, target)) throw NumericError("fill search produced a reducible fill");
  return Fill{std::move(parts), target};
}

Fill find_irreducible_fill(const SupportTuple& supports, const FillOptions& options) {
  std::vector<Polytope> polys;
  for (const auto& s : supports) polys.push_back(convex_hull(s));
  return find_irreducible_fill(std::span<const Polytope>(polys), options, &supports);
}

bool is_irreducible_fill(const SupportTuple& parts, std::span<const Polytope> polytopes) {
  if (parts.size() != polytopes.size()) return false;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (const auto& q : parts[i].points()) {
      if (!contains(polytopes[i], q)) return false;
    }
  }
  const Integer target = mixed_volume(polytopes);
  if (target == 0 || mixed_volume(parts) != target) return false;
  return single_point_minimal(parts, target);
}

}  // namespace toricred
