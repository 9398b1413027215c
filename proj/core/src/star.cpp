#include <string>

#include "coupled/errors.hpp"
#include "coupled/exact.hpp"
#include "coupled/topology.hpp"

namespace coupled::exact {

namespace {

// Center of a star. A lone edge counts as a star centred on either end: the
// smaller task for outgoing stars, the larger one for incoming stars.
std::size_t center_of(const Instance& instance, bool outgoing) {
  if (instance.size() == 2 && instance.edges().size() == 1) {
    const bool second_larger = instance.alpha(1) > instance.alpha(0);
    return second_larger != outgoing ? 1 : 0;
  }
  auto c = gen::star_center(instance);
  if (!c) throw TopologyError("star solver: the compatibility graph is not a star");
  return *c;
}

// Packs the best subset of the center's guests into it.
PackingPlan host_plan(const Instance& instance, std::size_t center, std::int64_t capacity_limit, Time* saved) {
  std::vector<packing::Item> items;
  for (std::size_t s : instance.neighbors(center)) {
    if (fits_inside(instance.alpha(s), instance.alpha(center))) {
      items.push_back({instance.id(s), 3 * instance.alpha(s)});
    }
  }
  auto best = packing::ssp_exact(items, instance.alpha(center), capacity_limit);
  PackingPlan plan;
  for (std::int64_t id : best.witness) plan.pack(id, instance.id(center));
  *saved = best.sum;
  return plan;
}

Solution finish(const Instance& instance, PackingPlan plan) {
  Solution solution;
  solution.schedule = plan_to_schedule(instance, plan);
  solution.makespan = makespan(solution.schedule);
  solution.plan = std::move(plan);
  return solution;
}

}  // namespace

Solution solve_star_out(const Instance& instance) {
  const std::size_t c = center_of(instance, true);
  const Alpha center_alpha = instance.alpha(c);
  bool outgoing = false;
  for (std::size_t s : instance.neighbors(c)) outgoing = outgoing || instance.alpha(s) >= center_alpha;
  if (!outgoing) throw TopologyError("star solver: the center has no outgoing arc; use the incoming-star solver");

  const Time total = seq(instance);
  const Time satellites = total - 3 * center_alpha;

  // Center inside a satellite: reaches the independent-set bound seq(S).
  for (std::size_t s : instance.neighbors(c)) {
    if (fits_inside(center_alpha, instance.alpha(s))) {
      PackingPlan plan;
      plan.pack(instance.id(c), instance.id(s));
      return finish(instance, std::move(plan));
    }
  }

  Time saved = 0;
  PackingPlan hosting = host_plan(instance, c, packing::default_capacity_limit, &saved);
  const Time hosting_cost = total - saved;
  for (std::size_t s : instance.neighbors(c)) {
    if (instance.alpha(s) == center_alpha && satellites + center_alpha <= hosting_cost) {
      PackingPlan plan;
      plan.pair(instance.id(c), instance.id(s));
      return finish(instance, std::move(plan));
    }
  }
  return finish(instance, std::move(hosting));
}

Solution solve_star_in_exact(const Instance& instance, std::int64_t capacity_limit) {
  const std::size_t c = center_of(instance, false);
  for (std::size_t s : instance.neighbors(c)) {
    if (instance.alpha(s) >= instance.alpha(c)) {
      throw TopologyError("incoming-star solver: satellite " + std::to_string(instance.id(s)) +
                          " is not smaller than the center");
    }
  }
  Time saved = 0;
  return finish(instance, host_plan(instance, c, capacity_limit, &saved));
}

}  // namespace coupled::exact
