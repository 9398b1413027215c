#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "coupled/instance.hpp"
#include "coupled/packing.hpp"
#include "coupled/plan.hpp"

namespace coupled::testing {

/// Largest subset sum <= capacity by enumerating all 2^n subsets.
std::int64_t subset_sum_brute(std::span<const packing::Item> items, std::int64_t capacity);

/// Whether some subset of `values` sums exactly to `target`.
bool subset_hits(std::span<const std::int64_t> values, std::int64_t target);

/// Best multiple-knapsack packed weight over every item-to-bin assignment.
std::int64_t fill_bins_brute(std::span<const packing::Item> items, std::span<const packing::BinSpec> bins);

/// Minimum weight of a perfect matching of the doubled chain graph H: two
/// copies of the path, a rung of weight 6*alpha(x) between the copies of x,
/// and per copy an edge of weight 3*max(alpha) when packable or 4*alpha when
/// pairable. Weights are doubled so they stay integral; half the minimum is
/// the optimal makespan of the path without the triple rule.
std::int64_t h_graph_min_matching(std::span<const Alpha> path);

/// Optimum over every PackingPlan accepted by check_plan: each task either
/// stays alone or picks a neighbor as host, then equal-stretch pairs are
/// matched among the remaining free tasks.
Time plan_enumeration_optimum(const Instance& instance);

/// Smallest makespan among all start-time vectors that pass validate, found
/// by trying every start in [0, seq]. Tiny instances only.
Time geometric_optimum(const Instance& instance);

/// Random maximal independent set in the compatibility graph.
std::vector<std::size_t> random_maximal_independent_set(const Instance& instance, std::uint64_t seed);

/// Random plan that check_plan accepts: random packings (nesting included
/// where the ancestors allow it) and random pairs among free equal tasks.
PackingPlan random_valid_plan(const Instance& instance, std::uint64_t seed);

}  // namespace coupled::testing
