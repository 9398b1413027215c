#pragma once

#include <cstdint>

#include "coupled/instance.hpp"
#include "coupled/packing.hpp"
#include "coupled/plan.hpp"
#include "coupled/schedule.hpp"

namespace coupled::exact {

/// Optimal plan together with its laid-out schedule.
struct Solution {
  PackingPlan plan;
  Schedule schedule;
  Time makespan = 0;
};

/// Optimal schedule when every connected component is a path.
///
/// First, any task whose two neighbors fit together in its idle gap absorbs
/// both and the three leave the graph; this never hurts. The remaining paths
/// are solved by a linear matching DP over edges, where an edge saves
/// 3 * min(alpha) when packable and 2 * alpha when pairable. That DP is the
/// path specialisation of the minimum-weight perfect matching on the doubled
/// graph H (two copies of the chain plus rungs).
/// Throws TopologyError when some component is not a path.
Solution solve_chain(const Instance& instance);

/// Best savings of a matching over the path edges, without the triple rule.
/// This is the quantity the doubled-graph matching encodes.
Time chain_matching_savings(const Instance& instance);

/// Star whose center can give up its own slot: packed into a large enough
/// satellite, paired with an equal satellite, or kept as the host of an
/// optimal subset of small satellites. The cheapest of the three is optimal.
/// Throws TopologyError when the instance is not a star or the center only
/// has incoming arcs.
Solution solve_star_out(const Instance& instance);

/// Star with only incoming arcs at the center: an exact subset sum over the
/// packable satellites (weights 3 * alpha, capacity alpha(center)).
Solution solve_star_in_exact(const Instance& instance,
                             std::int64_t capacity_limit = packing::default_capacity_limit);

/// 1-stage bipartite orientation with every Y-task of degree at most two.
/// Y-tasks that can take both neighbors take them; a maximum-weight bipartite
/// matching (weight alpha(x)) on the rest decides single packings.
Solution solve_bipartite_deg2(const Instance& instance);

}  // namespace coupled::exact
