#include <algorithm>
#include <string>

#include "coupled/errors.hpp"
#include "coupled/exact.hpp"
#include "coupled/hungarian.hpp"
#include "coupled/topology.hpp"

namespace coupled::exact {

Solution solve_bipartite_deg2(const Instance& instance) {
  auto partition = gen::stage_partition(instance, 2);
  if (!partition || !partition->v2.empty()) {
    throw TopologyError("degree-2 bipartite solver: the graph is not a 1-stage bipartite orientation");
  }
  std::vector<std::size_t> ys;
  for (TaskId id : partition->v1) {
    std::size_t y = instance.index(id);
    if (instance.degree(y) > 2) {
      throw TopologyError("degree-2 bipartite solver: task " + std::to_string(id) + " has degree " +
                          std::to_string(instance.degree(y)));
    }
    ys.push_back(y);
  }
  std::sort(ys.begin(), ys.end());

  PackingPlan plan;
  std::vector<bool> used(instance.size(), false);
  for (std::size_t y : ys) {
    auto nb = instance.neighbors(y);
    if (nb.size() != 2 || used[nb[0]] || used[nb[1]]) continue;
    if (3 * (instance.alpha(nb[0]) + instance.alpha(nb[1])) > instance.alpha(y)) continue;
    plan.pack(instance.id(nb[0]), instance.id(y));
    plan.pack(instance.id(nb[1]), instance.id(y));
    used[y] = used[nb[0]] = used[nb[1]] = true;
  }

  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  for (TaskId id : partition->v0) {
    std::size_t x = instance.index(id);
    if (!used[x]) rows.push_back(x);
  }
  std::sort(rows.begin(), rows.end());
  for (std::size_t y : ys) {
    if (!used[y]) cols.push_back(y);
  }
  std::vector<std::vector<std::optional<std::int64_t>>> weight(rows.size(),
                                                               std::vector<std::optional<std::int64_t>>(cols.size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (instance.adjacent(rows[r], cols[c]) && fits_inside(instance.alpha(rows[r]), instance.alpha(cols[c]))) {
        weight[r][c] = instance.alpha(rows[r]);
      }
    }
  }
  auto match = max_weight_matching(weight);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (match[r] >= 0) plan.pack(instance.id(rows[r]), instance.id(cols[static_cast<std::size_t>(match[r])]));
  }

  Solution solution;
  solution.schedule = plan_to_schedule(instance, plan);
  solution.makespan = makespan(solution.schedule);
  solution.plan = std::move(plan);
  return solution;
}

}  // namespace coupled::exact
