#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coupled/instance.hpp"
#include "coupled/plan.hpp"
#include "coupled/rational.hpp"
#include "coupled/schedule.hpp"
#include "coupled/stage_partition.hpp"

namespace coupled::approx {

struct ApproxOutcome {
  /// Name of the algorithm that produced the plan ("one_stage", "chain", ...).
  std::string solver;
  PackingPlan plan;
  Schedule schedule;
  Time makespan = 0;
  /// Proven worst-case ratio to the optimum; 1 for exact solvers.
  Rational certified_ratio{1};
  /// Best known lower bound on the optimum (independent-set bound).
  Time lower_bound = 0;
};

/// Every task alone, back to back. Within 3/2 of the optimum on any graph.
ApproxOutcome sequential(const Instance& instance);

/// Star with only incoming arcs, solved through the subset-sum FPTAS.
/// Makespan within (1 + epsilon/2) of the optimum.
ApproxOutcome star_fptas(const Instance& instance, const Rational& epsilon);

/// 1-stage bipartite graphs (X = partition.v0, Y = partition.v1): pack X-tasks
/// into Y-tasks through a multiple-knapsack-with-assignment-restrictions
/// instance (items 3*alpha(x), bins alpha(y), eligibility = arcs) solved by
/// successive exact filling. The packing is a 1/2-approximation, which gives
/// makespan = seq(Y) + seq(X) - seq(X_packed) within 7/6 of the optimum.
ApproxOutcome one_stage(const Instance& instance, const StagePartition& partition);

struct TwoStageOptions {
  /// Re-pack conflict tasks into V1 hosts that stayed at the top level, when
  /// there is room. Off by default; the certified ratio does not depend on it.
  bool repack_conflicts = false;
};

struct TwoStageOutcome {
  ApproxOutcome outcome;
  /// V1 tasks packed into V2 by the second-stage packing.
  std::vector<TaskId> v1_packed;
  /// V0 tasks packed into V1 by the first-stage packing (before the merge).
  std::vector<TaskId> v0_packed;
  /// V0 tasks whose V1 host went into V2; they run alone.
  std::vector<TaskId> conflict;
};

/// 2-stage bipartite graphs: pack V1 into V2 and V0 into V1 independently,
/// then keep every V1->V2 packing and drop the V0->V1 packings whose host
/// left the top level. Within 13/9 of the optimum.
TwoStageOutcome two_stage(const Instance& instance, const StagePartition& partition,
                          const TwoStageOptions& options = {});

struct AutoOptions {
  Rational epsilon{1, 10};
  /// Incoming stars whose center exceeds this stretch factor use the FPTAS
  /// instead of the exact subset-sum table.
  Alpha fptas_threshold = 1'000'000;
};

/// Classifies the topology and runs the strongest applicable algorithm.
ApproxOutcome auto_solve(const Instance& instance, const AutoOptions& options = {});

}  // namespace coupled::approx
