#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace coupled::exact {

/// Maximum-weight bipartite matching by the Hungarian method, O(n^3).
///
/// `weight[r][c]` is the gain of matching row r to column c; nullopt marks a
/// missing edge. Rows and columns may differ in number. Returns, for each row,
/// the matched column or -1.
std::vector<int> max_weight_matching(const std::vector<std::vector<std::optional<std::int64_t>>>& weight);

}  // namespace coupled::exact
