#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "coupled/formula.hpp"
#include "coupled/instance.hpp"
#include "coupled/plan.hpp"
#include "coupled/schedule.hpp"

namespace coupled::gen {

struct SubsetSumStar {
  Instance instance;
  TaskId center = 0;
  /// seq(T) - alpha(center): reachable iff some subset of the values sums to v.
  Time target = 0;
};

/// One satellite task per value (alpha = value, ids 0..n-1) and a center with
/// alpha = 3v (id n) adjacent to all of them. Requires v >= max(values) and
/// positive values.
SubsetSumStar ssp_to_star(std::span<const std::int64_t> values, std::int64_t v);

/// Roles of the four unit variable-tasks created for each variable.
enum class VariableRole { plain = 0, primed = 1, negated = 2, negated_primed = 3 };

/// Scheduling instance built from a one-in-three formula.
///
/// Per variable: four unit variable-tasks, a literal task L (alpha 2) and two
/// hosts C, C-bar (alpha 6). Per three-clause: a host (alpha 3) receiving the
/// three positive variable-tasks and a host (alpha 6) receiving their
/// negated-primed tasks. Per two-clause (x OR NOT y): a host (alpha 3)
/// receiving x' and y-bar. With dummies, every clause host of alpha 3 becomes
/// alpha 6 and gets one extra unit task of its own.
struct SatReduction {
  Instance instance;
  int variables = 0;
  bool with_dummies = false;
  /// Makespan reached exactly when the formula is one-in-three satisfiable:
  /// the sequential time of the hosts, 54n without dummies (n = variables)
  /// and 66n with them.
  Time target = 0;
  /// 54 * (number of tasks), the alternative reading of the bound in terms of
  /// task count; reported for comparison only.
  Time target_task_count_reading = 0;

  TaskId variable_task(int var, VariableRole role) const;
  TaskId literal_task(int var) const;
  TaskId positive_host(int var) const;
  TaskId negative_host(int var) const;
  TaskId clause3_host(int clause) const;
  TaskId clause3_negative_host(int clause) const;
  TaskId clause2_host(int clause) const;
  /// Only with dummies.
  TaskId clause2_dummy(int clause) const;
  TaskId clause3_dummy(int clause) const;
};

SatReduction sat_to_bipartite(const Formula131& formula, bool with_dummies);

/// Packing plan realising a one-in-three assignment. Throws FormulaError when
/// the assignment does not give every clause exactly one true literal.
PackingPlan assignment_to_plan(const Formula131& formula, const std::vector<bool>& assignment,
                               const SatReduction& reduction);

/// Laid-out schedule of assignment_to_plan; its makespan equals the target.
Schedule assignment_to_schedule(const Formula131& formula, const std::vector<bool>& assignment,
                                const SatReduction& reduction);

}  // namespace coupled::gen
