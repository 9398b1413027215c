#include "coupled/plan.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

namespace coupled {

const char* to_string(PlanViolation violation) {
  switch (violation) {
    case PlanViolation::unknown_task: return "unknown_task";
    case PlanViolation::self_reference: return "self_reference";
    case PlanViolation::not_compatible: return "not_compatible";
    case PlanViolation::not_packable: return "not_packable";
    case PlanViolation::capacity_exceeded: return "capacity_exceeded";
    case PlanViolation::parent_cycle: return "parent_cycle";
    case PlanViolation::ancestor_incompatible: return "ancestor_incompatible";
    case PlanViolation::pair_unequal_alpha: return "pair_unequal_alpha";
    case PlanViolation::task_in_multiple_pairs: return "task_in_multiple_pairs";
    case PlanViolation::paired_task_in_tree: return "paired_task_in_tree";
  }
  return "?";
}

namespace {

[[noreturn]] void fail(PlanViolation v, const std::string& what) {
  throw PlanError(v, std::string(to_string(v)) + ": " + what);
}

std::string ids(TaskId a, TaskId b) { return std::to_string(a) + " and " + std::to_string(b); }

std::size_t known(const Instance& instance, TaskId id) {
  auto index = instance.index_of(id);
  if (!index) fail(PlanViolation::unknown_task, "task " + std::to_string(id) + " is not in the instance");
  return *index;
}

// Parent index per task index, or -1 for roots. Assumes the plan is valid.
std::vector<long> parent_indices(const Instance& instance, const PackingPlan& plan) {
  std::vector<long> parent(instance.size(), -1);
  for (const auto& [child, host] : plan.parent) {
    parent[instance.index(child)] = static_cast<long>(instance.index(host));
  }
  return parent;
}

}  // namespace

void check_plan(const Instance& instance, const PackingPlan& plan) {
  const std::size_t n = instance.size();
  std::vector<long> parent(n, -1);
  std::vector<Time> load(n, 0);
  std::vector<int> children(n, 0);

  for (const auto& [child_id, host_id] : plan.parent) {
    std::size_t c = known(instance, child_id);
    std::size_t h = known(instance, host_id);
    if (c == h) fail(PlanViolation::self_reference, "task " + std::to_string(child_id) + " packed into itself");
    if (!instance.adjacent(c, h)) {
      fail(PlanViolation::not_compatible, "packed tasks " + ids(child_id, host_id) + " share no edge");
    }
    if (!fits_inside(instance.alpha(c), instance.alpha(h))) {
      fail(PlanViolation::not_packable,
           "task " + std::to_string(child_id) + " does not fit in the idle gap of " + std::to_string(host_id));
    }
    parent[c] = static_cast<long>(h);
    load[h] += 3 * instance.alpha(c);
    ++children[h];
  }

  // A strictly growing stretch factor along parent links already rules
  // cycles out; the walk keeps the check independent of that argument.
  std::vector<int> state(n, 0);
  for (std::size_t start = 0; start < n; ++start) {
    std::vector<std::size_t> path;
    std::size_t cur = start;
    while (true) {
      if (state[cur] == 2) break;
      if (state[cur] == 1) {
        fail(PlanViolation::parent_cycle, "parent links through task " + std::to_string(instance.id(cur)) +
                                              " form a cycle");
      }
      state[cur] = 1;
      path.push_back(cur);
      if (parent[cur] < 0) break;
      cur = static_cast<std::size_t>(parent[cur]);
    }
    for (std::size_t p : path) state[p] = 2;
  }

  for (std::size_t h = 0; h < n; ++h) {
    if (load[h] > instance.alpha(h)) {
      fail(PlanViolation::capacity_exceeded,
           "children of task " + std::to_string(instance.id(h)) + " need " + std::to_string(load[h]) +
               " time units of idle gap, only " + std::to_string(instance.alpha(h)) + " available");
    }
  }

  for (std::size_t c = 0; c < n; ++c) {
    if (parent[c] < 0) continue;
    for (long a = parent[static_cast<std::size_t>(parent[c])]; a >= 0; a = parent[static_cast<std::size_t>(a)]) {
      if (!instance.adjacent(c, static_cast<std::size_t>(a))) {
        fail(PlanViolation::ancestor_incompatible,
             "task " + std::to_string(instance.id(c)) + " would run inside the idle gap of task " +
                 std::to_string(instance.id(static_cast<std::size_t>(a))) + " without a compatibility edge");
      }
    }
  }

  std::vector<bool> paired(n, false);
  for (const auto& [x_id, y_id] : plan.pairs) {
    std::size_t x = known(instance, x_id);
    std::size_t y = known(instance, y_id);
    if (x == y) fail(PlanViolation::self_reference, "task " + std::to_string(x_id) + " paired with itself");
    if (!instance.adjacent(x, y)) fail(PlanViolation::not_compatible, "paired tasks " + ids(x_id, y_id) + " share no edge");
    if (instance.alpha(x) != instance.alpha(y)) {
      fail(PlanViolation::pair_unequal_alpha, "paired tasks " + ids(x_id, y_id) + " differ in stretch factor");
    }
    for (std::size_t t : {x, y}) {
      if (paired[t]) {
        fail(PlanViolation::task_in_multiple_pairs, "task " + std::to_string(instance.id(t)) + " is in two pairs");
      }
      paired[t] = true;
      if (parent[t] >= 0 || children[t] > 0) {
        fail(PlanViolation::paired_task_in_tree,
             "paired task " + std::to_string(instance.id(t)) + " also takes part in a packing");
      }
    }
  }
}

Schedule plan_to_schedule(const Instance& instance, const PackingPlan& plan) {
  check_plan(instance, plan);
  const std::size_t n = instance.size();
  auto parent = parent_indices(instance, plan);

  std::vector<std::vector<std::size_t>> kids(n);
  for (std::size_t c = 0; c < n; ++c) {
    if (parent[c] >= 0) kids[static_cast<std::size_t>(parent[c])].push_back(c);
  }
  std::vector<bool> paired(n, false);
  for (const auto& [x, y] : plan.pairs) {
    paired[instance.index(x)] = true;
    paired[instance.index(y)] = true;
  }

  // Smallest index in each packing tree.
  std::function<std::size_t(std::size_t)> smallest = [&](std::size_t v) {
    std::size_t best = v;
    for (std::size_t k : kids[v]) best = std::min(best, smallest(k));
    return best;
  };

  struct Block {
    std::size_t key;
    std::size_t first;
    long second;  // pair partner, or -1 for a packing tree rooted at `first`
  };
  std::vector<Block> blocks;
  for (std::size_t v = 0; v < n; ++v) {
    if (parent[v] < 0 && !paired[v]) blocks.push_back({smallest(v), v, -1});
  }
  for (const auto& [x, y] : plan.pairs) {
    std::size_t ix = instance.index(x);
    std::size_t iy = instance.index(y);
    blocks.push_back({std::min(ix, iy), std::min(ix, iy), static_cast<long>(std::max(ix, iy))});
  }
  std::sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) { return a.key < b.key; });

  Schedule schedule;
  std::function<void(std::size_t, Time)> lay_tree = [&](std::size_t v, Time start) {
    schedule.place(instance.task(v), start);
    Time cursor = start + instance.alpha(v);
    for (std::size_t k : kids[v]) {
      lay_tree(k, cursor);
      cursor += 3 * instance.alpha(k);
    }
  };

  Time clock = 0;
  for (const Block& b : blocks) {
    const Alpha a = instance.alpha(b.first);
    if (b.second < 0) {
      lay_tree(b.first, clock);
      clock += 3 * a;
    } else {
      schedule.place(instance.task(b.first), clock);
      schedule.place(instance.task(static_cast<std::size_t>(b.second)), clock + a);
      clock += 4 * a;
    }
  }
  return schedule;
}

Time savings(const Instance& instance, const PackingPlan& plan) {
  check_plan(instance, plan);
  Time total = 0;
  for (const auto& [child, host] : plan.parent) total += 3 * instance.alpha(instance.index(child));
  for (const auto& [x, y] : plan.pairs) total += 2 * instance.alpha(instance.index(x));
  return total;
}

ScheduleStats stats(const Instance& instance, const PackingPlan& plan) {
  ScheduleStats s;
  s.makespan = makespan(plan_to_schedule(instance, plan));
  s.savings = savings(instance, plan);
  s.seq_total = seq(instance);
  return s;
}

}  // namespace coupled
