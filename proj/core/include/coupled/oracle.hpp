#pragma once

#include <cstddef>
#include <cstdint>

#include "coupled/instance.hpp"
#include "coupled/plan.hpp"

namespace coupled::exact {

inline constexpr std::size_t default_oracle_limit = 14;

struct OracleOptions {
  std::size_t limit_n = default_oracle_limit;
  /// Disable bound pruning to enumerate the full plan space.
  bool prune = true;
};

struct OracleResult {
  Time makespan = 0;
  PackingPlan plan;
  std::uint64_t nodes = 0;
};

/// Exact optimum over every valid PackingPlan (nested packing forests plus
/// equal-stretch pairs at the roots), by depth-first branch and bound on the
/// savings. Tasks are decided in ascending id order, hosts are tried in
/// ascending id order, and the first optimal plan found is kept.
/// Throws InstanceTooLarge above `limit_n` tasks.
OracleResult solve_oracle(const Instance& instance, const OracleOptions& options = {});

}  // namespace coupled::exact
