#pragma once

#include <vector>

#include "coupled/instance.hpp"

namespace coupled::approx {

/// Layers of a k-stage bipartite orientation (k <= 2): every arc goes from
/// layer i to layer i+1. For a 1-stage graph `v2` is empty, `v0` holds the
/// X-tasks and `v1` the Y-tasks.
struct StagePartition {
  std::vector<TaskId> v0;
  std::vector<TaskId> v1;
  std::vector<TaskId> v2;

  friend bool operator==(const StagePartition&, const StagePartition&) = default;
};

}  // namespace coupled::approx
