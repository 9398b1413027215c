#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>

#include "coupled/errors.hpp"
#include "coupled/instance.hpp"
#include "coupled/schedule.hpp"

namespace coupled {

/// Which tasks run inside which hosts, and which equal-stretch tasks are
/// interleaved. Tasks mentioned nowhere are scheduled alone.
struct PackingPlan {
  /// child id -> host id.
  std::map<TaskId, TaskId> parent;
  /// Unordered pairs stored as (smaller id, larger id).
  std::set<std::pair<TaskId, TaskId>> pairs;

  void pack(TaskId child, TaskId host) { parent[child] = host; }
  void pair(TaskId a, TaskId b) { pairs.emplace(std::min(a, b), std::max(a, b)); }
  bool empty() const { return parent.empty() && pairs.empty(); }

  friend bool operator==(const PackingPlan&, const PackingPlan&) = default;
};

enum class PlanViolation {
  unknown_task,
  self_reference,
  not_compatible,         ///< a parent link or pair is not an edge
  not_packable,           ///< 3 * alpha(child) > alpha(host)
  capacity_exceeded,      ///< direct children overflow the host's idle gap
  parent_cycle,
  ancestor_incompatible,  ///< nested task would share a gap with a non-neighbor
  pair_unequal_alpha,
  task_in_multiple_pairs,
  paired_task_in_tree,    ///< a paired task also has a parent or children
};

const char* to_string(PlanViolation violation);

class PlanError : public Error {
 public:
  PlanError(PlanViolation violation, const std::string& what)
      : Error(what), violation_(violation) {}

  PlanViolation violation() const { return violation_; }

 private:
  PlanViolation violation_;
};

/// Throws PlanError naming the first violated invariant.
///
/// Nested packing is allowed, but a task nested below its parent also runs
/// inside the idle gap of every further ancestor, so it must be compatible
/// with each of them.
void check_plan(const Instance& instance, const PackingPlan& plan);

/// Lays a plan out on the machine. Independent blocks (lone tasks, packing
/// trees, pairs) go back to back from time 0 ordered by their smallest member
/// id. A host's children run consecutively from the start of its idle gap in
/// ascending id order. A pair (x, y) with x < y is laid out as a_x a_y b_x b_y.
Schedule plan_to_schedule(const Instance& instance, const PackingPlan& plan);

/// Time saved against sequential execution: 3 * alpha per packed task plus
/// 2 * alpha per pair.
Time savings(const Instance& instance, const PackingPlan& plan);

struct ScheduleStats {
  Time makespan = 0;
  Time savings = 0;
  Time seq_total = 0;
};

ScheduleStats stats(const Instance& instance, const PackingPlan& plan);

}  // namespace coupled
