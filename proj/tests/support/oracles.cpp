#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "coupled/errors.hpp"
#include "coupled/random.hpp"

namespace coupled::testing {

std::int64_t subset_sum_brute(std::span<const packing::Item> items, std::int64_t capacity) {
  std::int64_t best = 0;
  const std::size_t n = items.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) sum += items[i].weight;
    }
    if (sum <= capacity) best = std::max(best, sum);
  }
  return best;
}

bool subset_hits(std::span<const std::int64_t> values, std::int64_t target) {
  const std::size_t n = values.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) sum += values[i];
    }
    if (sum == target) return true;
  }
  return false;
}

std::int64_t fill_bins_brute(std::span<const packing::Item> items, std::span<const packing::BinSpec> bins) {
  std::vector<std::int64_t> room;
  for (const auto& b : bins) room.push_back(b.capacity);
  auto eligible = [&](std::size_t bin, std::int64_t id) {
    const auto& e = bins[bin].eligible;
    return !e || std::find(e->begin(), e->end(), id) != e->end();
  };
  std::int64_t best = 0;
  std::function<void(std::size_t, std::int64_t)> go = [&](std::size_t i, std::int64_t packed) {
    if (i == items.size()) {
      best = std::max(best, packed);
      return;
    }
    go(i + 1, packed);
    for (std::size_t b = 0; b < bins.size(); ++b) {
      if (room[b] < items[i].weight || !eligible(b, items[i].id)) continue;
      room[b] -= items[i].weight;
      go(i + 1, packed + items[i].weight);
      room[b] += items[i].weight;
    }
  };
  go(0, 0);
  return best;
}

std::int64_t h_graph_min_matching(std::span<const Alpha> path) {
  const std::size_t k = path.size();
  const std::size_t size = 2 * k;
  std::vector<std::vector<std::optional<std::int64_t>>> w(size, std::vector<std::optional<std::int64_t>>(size));
  for (std::size_t i = 0; i < k; ++i) {
    w[i][i + k] = w[i + k][i] = 6 * path[i];
  }
  for (std::size_t i = 0; i + 1 < k; ++i) {
    const Alpha lo = std::min(path[i], path[i + 1]);
    const Alpha hi = std::max(path[i], path[i + 1]);
    std::optional<std::int64_t> weight;
    if (lo == hi) {
      weight = 4 * lo;
    } else if (3 * lo <= hi) {
      weight = 3 * hi;
    }
    for (std::size_t copy : {std::size_t{0}, k}) {
      w[copy + i][copy + i + 1] = w[copy + i + 1][copy + i] = weight;
    }
  }
  std::vector<bool> used(size, false);
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  std::function<void(std::int64_t)> go = [&](std::int64_t cost) {
    std::size_t v = 0;
    while (v < size && used[v]) ++v;
    if (v == size) {
      best = std::min(best, cost);
      return;
    }
    used[v] = true;
    for (std::size_t u = v + 1; u < size; ++u) {
      if (used[u] || !w[v][u]) continue;
      used[u] = true;
      go(cost + *w[v][u]);
      used[u] = false;
    }
    used[v] = false;
  };
  go(0);
  return best;
}

namespace {

Time best_pairs(const Instance& instance, const std::vector<std::size_t>& free) {
  std::vector<bool> taken(instance.size(), false);
  std::function<Time(std::size_t)> go = [&](std::size_t k) -> Time {
    while (k < free.size() && taken[free[k]]) ++k;
    if (k == free.size()) return 0;
    const std::size_t a = free[k];
    taken[a] = true;
    Time best = go(k + 1);
    for (std::size_t j = k + 1; j < free.size(); ++j) {
      const std::size_t b = free[j];
      if (taken[b] || instance.alpha(a) != instance.alpha(b) || !instance.adjacent(a, b)) continue;
      taken[b] = true;
      best = std::max(best, 2 * instance.alpha(a) + go(k + 1));
      taken[b] = false;
    }
    taken[a] = false;
    return best;
  };
  return go(0);
}

}  // namespace

Time plan_enumeration_optimum(const Instance& instance) {
  const std::size_t n = instance.size();
  std::vector<std::vector<std::size_t>> choices(n);
  for (std::size_t t = 0; t < n; ++t) {
    for (std::size_t h : instance.neighbors(t)) {
      if (fits_inside(instance.alpha(t), instance.alpha(h))) choices[t].push_back(h);
    }
  }
  std::vector<std::size_t> pick(n, 0);
  Time best = 0;
  while (true) {
    PackingPlan plan;
    Time packed = 0;
    std::vector<bool> busy(n, false);
    for (std::size_t t = 0; t < n; ++t) {
      if (pick[t] == 0) continue;
      std::size_t h = choices[t][pick[t] - 1];
      plan.pack(instance.id(t), instance.id(h));
      packed += 3 * instance.alpha(t);
      busy[t] = busy[h] = true;
    }
    bool valid = true;
    try {
      check_plan(instance, plan);
    } catch (const PlanError&) {
      valid = false;
    }
    if (valid) {
      std::vector<std::size_t> free;
      for (std::size_t t = 0; t < n; ++t) {
        if (!busy[t]) free.push_back(t);
      }
      best = std::max(best, packed + best_pairs(instance, free));
    }
    std::size_t t = 0;
    while (t < n && pick[t] == choices[t].size()) pick[t++] = 0;
    if (t == n) break;
    ++pick[t];
  }
  return seq(instance) - best;
}

namespace {

bool disjoint(Time a0, Time a1, Time b0, Time b1) { return a1 <= b0 || b1 <= a0; }

bool compatible_placement(const Instance& instance, std::size_t i, Time si, std::size_t j, Time sj) {
  const Alpha ai = instance.alpha(i);
  const Alpha aj = instance.alpha(j);
  const Time parts_i[2] = {si, si + 2 * ai};
  const Time parts_j[2] = {sj, sj + 2 * aj};
  for (Time pi : parts_i) {
    for (Time pj : parts_j) {
      if (!disjoint(pi, pi + ai, pj, pj + aj)) return false;
    }
  }
  if (!disjoint(si, si + 3 * ai, sj, sj + 3 * aj) && !instance.adjacent(i, j)) return false;
  return true;
}

}  // namespace

Time geometric_optimum(const Instance& instance) {
  const std::size_t n = instance.size();
  const Time horizon = seq(instance);
  std::vector<Time> start(n, 0);
  Time best = horizon;
  std::function<void(std::size_t, Time, bool)> go = [&](std::size_t i, Time end, bool zero) {
    if (end >= best) return;
    if (i == n) {
      if (zero) best = end;
      return;
    }
    for (Time s = 0; s + 3 * instance.alpha(i) < best; ++s) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) ok = compatible_placement(instance, i, s, j, start[j]);
      if (!ok) continue;
      start[i] = s;
      go(i + 1, std::max(end, s + 3 * instance.alpha(i)), zero || s == 0);
    }
  };
  go(0, 0, n == 0);
  return best;
}

std::vector<std::size_t> random_maximal_independent_set(const Instance& instance, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::size_t> order(instance.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  rng.shuffle(order);
  std::vector<std::size_t> chosen;
  for (std::size_t v : order) {
    bool free = std::none_of(chosen.begin(), chosen.end(), [&](std::size_t u) { return instance.adjacent(u, v); });
    if (free) chosen.push_back(v);
  }
  return chosen;
}

PackingPlan random_valid_plan(const Instance& instance, std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t n = instance.size();
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent(n, none);
  std::vector<std::vector<std::size_t>> children(n);
  std::vector<Time> room(n);
  for (std::size_t i = 0; i < n; ++i) room[i] = instance.alpha(i);

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  rng.shuffle(order);
  for (std::size_t t : order) {
    if (!rng.chance(2, 3)) continue;
    std::vector<std::size_t> hosts;
    for (std::size_t h : instance.neighbors(t)) {
      if (!fits_inside(instance.alpha(t), instance.alpha(h)) || room[h] < 3 * instance.alpha(t)) continue;
      std::vector<std::size_t> chain;
      for (std::size_t a = h; a != none; a = parent[a]) chain.push_back(a);
      std::vector<std::size_t> stack{t};
      bool ok = true;
      while (!stack.empty() && ok) {
        std::size_t u = stack.back();
        stack.pop_back();
        for (std::size_t a : chain) ok = ok && instance.adjacent(u, a);
        for (std::size_t c : children[u]) stack.push_back(c);
      }
      if (ok) hosts.push_back(h);
    }
    if (hosts.empty()) continue;
    std::size_t h = hosts[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(hosts.size()) - 1))];
    parent[t] = h;
    children[h].push_back(t);
    room[h] -= 3 * instance.alpha(t);
  }

  PackingPlan plan;
  std::vector<bool> paired(n, false);
  for (std::size_t t = 0; t < n; ++t) {
    if (parent[t] != none) plan.pack(instance.id(t), instance.id(parent[t]));
  }
  for (std::size_t a : order) {
    if (paired[a] || parent[a] != none || !children[a].empty()) continue;
    for (std::size_t b : instance.neighbors(a)) {
      if (paired[b] || parent[b] != none || !children[b].empty() || instance.alpha(a) != instance.alpha(b)) continue;
      if (!rng.chance(3, 4)) continue;
      plan.pair(instance.id(a), instance.id(b));
      paired[a] = paired[b] = true;
      break;
    }
  }
  return plan;
}

}  // namespace coupled::testing
