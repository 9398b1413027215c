#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "coupled/rational.hpp"

namespace coupled::packing {

/// An item whose weight is also its profit.
struct Item {
  std::int64_t id = 0;
  std::int64_t weight = 1;
};

struct BinSpec {
  std::int64_t id = 0;
  std::int64_t capacity = 1;
  /// Item ids allowed in this bin; nullopt means every item is eligible.
  std::optional<std::vector<std::int64_t>> eligible;
};

struct SubsetResult {
  std::int64_t sum = 0;
  /// Chosen item ids, ascending.
  std::vector<std::int64_t> witness;
};

struct PackingResult {
  /// item id -> bin id, for packed items only.
  std::map<std::int64_t, std::int64_t> assignment;
  std::int64_t packed_weight = 0;
};

/// Upper bound on the dynamic-programming range; larger capacities throw
/// CapacityLimitError instead of allocating.
inline constexpr std::int64_t default_capacity_limit = 10'000'000;

/// Maximum subset sum not exceeding `capacity`. Among optimal subsets the one
/// whose ascending id list is lexicographically smallest is returned.
/// Pseudo-polynomial: O(n * C) time and O(C) memory with C = min(capacity,
/// total weight).
SubsetResult ssp_exact(std::span<const Item> items, std::int64_t capacity,
                       std::int64_t capacity_limit = default_capacity_limit);

/// Trimmed-list approximation: the returned sum is at least
/// (1 - epsilon) * optimum, in time polynomial in n and 1/epsilon.
/// Requires 0 < epsilon < 1.
SubsetResult ssp_fptas(std::span<const Item> items, std::int64_t capacity, const Rational& epsilon);

/// Multiple subset sum with per-bin eligibility by successive exact filling.
///
/// Bins are visited by decreasing capacity (ties by ascending id) and each
/// receives an optimal subset of the still-unassigned eligible items. The
/// packed weight is at least half the optimum: an optimal bin content minus
/// what earlier bins already took stays feasible, so summing over bins gives
/// greedy >= opt - greedy.
PackingResult fill_bins(std::span<const Item> items, std::span<const BinSpec> bins,
                        std::int64_t capacity_limit = default_capacity_limit);

}  // namespace coupled::packing
