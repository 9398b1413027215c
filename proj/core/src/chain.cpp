#include <algorithm>
#include <optional>
#include <string>

#include "coupled/errors.hpp"
#include "coupled/exact.hpp"
#include "coupled/orientation.hpp"
#include "coupled/topology.hpp"

namespace coupled::exact {

namespace {

using Path = std::vector<std::size_t>;

// Components as index sequences, each walked from its smaller-index endpoint.
std::vector<Path> extract_paths(const Instance& instance) {
  if (!gen::is_chain(instance)) {
    throw TopologyError("chain solver: some connected component is not a simple path");
  }
  std::vector<bool> seen(instance.size(), false);
  std::vector<Path> paths;
  for (std::size_t start = 0; start < instance.size(); ++start) {
    if (seen[start] || instance.degree(start) > 1) continue;
    Path path;
    std::optional<std::size_t> cur = start;
    while (cur) {
      seen[*cur] = true;
      path.push_back(*cur);
      std::optional<std::size_t> next;
      for (std::size_t w : instance.neighbors(*cur)) {
        if (!seen[w]) next = w;
      }
      cur = next;
    }
    paths.push_back(std::move(path));
  }
  return paths;
}

std::optional<Time> edge_saving(const Instance& instance, std::size_t u, std::size_t v) {
  switch (classify_edge(instance.alpha(u), instance.alpha(v))) {
    case EdgeKind::packable: return 3 * std::min(instance.alpha(u), instance.alpha(v));
    case EdgeKind::pairable: return 2 * instance.alpha(u);
    case EdgeKind::useless: return std::nullopt;
  }
  return std::nullopt;
}

// Maximum-savings matching over consecutive path edges. Returns the savings
// and the chosen edges as (left, right) positions in the path.
Time match_path(const Instance& instance, const Path& path, std::vector<std::pair<std::size_t, std::size_t>>* chosen) {
  const std::size_t k = path.size();
  std::vector<Time> best(k + 1, 0);
  std::vector<bool> took(k + 1, false);
  for (std::size_t i = 2; i <= k; ++i) {
    best[i] = best[i - 1];
    if (auto w = edge_saving(instance, path[i - 2], path[i - 1])) {
      if (best[i - 2] + *w > best[i]) {
        best[i] = best[i - 2] + *w;
        took[i] = true;
      }
    }
  }
  if (chosen) {
    for (std::size_t i = k; i >= 2;) {
      if (took[i]) {
        chosen->emplace_back(path[i - 2], path[i - 1]);
        i -= 2;
      } else {
        i -= 1;
      }
    }
  }
  return best[k];
}

void apply_edge(const Instance& instance, PackingPlan& plan, std::size_t u, std::size_t v) {
  if (instance.alpha(u) == instance.alpha(v)) {
    plan.pair(instance.id(u), instance.id(v));
  } else if (instance.alpha(u) < instance.alpha(v)) {
    plan.pack(instance.id(u), instance.id(v));
  } else {
    plan.pack(instance.id(v), instance.id(u));
  }
}

}  // namespace

Solution solve_chain(const Instance& instance) {
  auto paths = extract_paths(instance);
  PackingPlan plan;

  // Triple rule. Removing a triple only turns its outer neighbours into path
  // endpoints, so no task becomes eligible later and one pass in ascending
  // index order is the same as repeatedly taking the smallest eligible task.
  struct Slot {
    std::size_t path;
    std::size_t pos;
  };
  std::vector<Slot> where(instance.size());
  for (std::size_t p = 0; p < paths.size(); ++p) {
    for (std::size_t i = 0; i < paths[p].size(); ++i) where[paths[p][i]] = {p, i};
  }
  std::vector<bool> removed(instance.size(), false);
  for (std::size_t x = 0; x < instance.size(); ++x) {
    const auto [p, pos] = where[x];
    const Path& path = paths[p];
    if (removed[x] || pos == 0 || pos + 1 >= path.size()) continue;
    std::size_t y = path[pos - 1];
    std::size_t z = path[pos + 1];
    if (removed[y] || removed[z]) continue;
    if (3 * (instance.alpha(y) + instance.alpha(z)) > instance.alpha(x)) continue;
    plan.pack(instance.id(y), instance.id(x));
    plan.pack(instance.id(z), instance.id(x));
    removed[x] = removed[y] = removed[z] = true;
  }

  for (const Path& path : paths) {
    Path run;
    auto flush = [&] {
      std::vector<std::pair<std::size_t, std::size_t>> chosen;
      match_path(instance, run, &chosen);
      for (auto [u, v] : chosen) apply_edge(instance, plan, u, v);
      run.clear();
    };
    for (std::size_t v : path) {
      if (removed[v]) {
        flush();
      } else {
        run.push_back(v);
      }
    }
    flush();
  }

  Solution solution;
  solution.schedule = plan_to_schedule(instance, plan);
  solution.makespan = makespan(solution.schedule);
  solution.plan = std::move(plan);
  return solution;
}

Time chain_matching_savings(const Instance& instance) {
  Time total = 0;
  for (const Path& path : extract_paths(instance)) total += match_path(instance, path, nullptr);
  return total;
}

}  // namespace coupled::exact
