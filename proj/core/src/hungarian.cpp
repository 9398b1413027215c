#include <algorithm>
#include <limits>

#include "coupled/hungarian.hpp"

namespace coupled::exact {

std::vector<int> max_weight_matching(const std::vector<std::vector<std::optional<std::int64_t>>>& weight) {
  const std::size_t rows = weight.size();
  std::size_t cols = 0;
  for (const auto& row : weight) cols = std::max(cols, row.size());
  std::vector<int> result(rows, -1);
  if (rows == 0 || cols == 0) return result;

  // Square min-cost assignment on cost = -weight; missing edges cost 0, which
  // is the same as leaving the row unmatched.
  const std::size_t n = std::max(rows, cols);
  auto cost = [&](std::size_t r, std::size_t c) -> std::int64_t {
    if (r >= rows || c >= weight[r].size() || !weight[r][c]) return 0;
    return -std::max<std::int64_t>(*weight[r][c], 0);
  };

  constexpr std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 4;
  std::vector<std::int64_t> u(n + 1, 0), v(n + 1, 0);
  std::vector<std::size_t> match(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    match[0] = i;
    std::size_t j0 = 0;
    std::vector<std::int64_t> minv(n + 1, inf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = match[j0];
      std::int64_t delta = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const std::int64_t cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  for (std::size_t j = 1; j <= n; ++j) {
    const std::size_t r = match[j] - 1;
    const std::size_t c = j - 1;
    if (r < rows && c < weight[r].size() && weight[r][c] && *weight[r][c] > 0) {
      result[r] = static_cast<int>(c);
    }
  }
  return result;
}

}  // namespace coupled::exact
