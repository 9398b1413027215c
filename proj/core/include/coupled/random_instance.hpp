#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "coupled/instance.hpp"
#include "coupled/topology.hpp"

namespace coupled::gen {

struct AlphaRange {
  Alpha lo = 1;
  Alpha hi = 27;
};

struct RandomOptions {
  /// Edge probability in percent for the bipartite and general classes.
  int edge_percent = 50;
  /// Cap on the degree of Y-tasks (1-stage classes only).
  std::optional<std::size_t> max_y_degree;
  /// Make every stretch factor distinct by scaling all of them by a constant
  /// and adding distinct offsets. Strict orientations and packability between
  /// different stretch factors survive; the output leaves `alpha` range.
  bool distinct_alpha = false;
};

/// Seed-deterministic instance of the requested class with `n` tasks.
/// Candidates are redrawn until classify() reports the requested class.
/// Throws ParameterError for infeasible requests (for instance a star with
/// fewer than four tasks, which is always a path).
Instance random_instance(TopologyClass cls, std::size_t n, AlphaRange alpha, std::uint64_t seed,
                         const RandomOptions& options = {});

}  // namespace coupled::gen
