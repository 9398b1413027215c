#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "coupled/approx.hpp"
#include "coupled/errors.hpp"
#include "coupled/exact.hpp"
#include "coupled/packing.hpp"
#include "coupled/topology.hpp"

namespace coupled::approx {

namespace {

ApproxOutcome finish(const Instance& instance, std::string solver, PackingPlan plan, Rational ratio, Time lower) {
  ApproxOutcome out;
  out.solver = std::move(solver);
  out.schedule = plan_to_schedule(instance, plan);
  out.makespan = makespan(out.schedule);
  out.plan = std::move(plan);
  out.certified_ratio = ratio;
  out.lower_bound = std::max(lower, independent_set_bound(instance));
  return out;
}

ApproxOutcome from_exact(std::string solver, exact::Solution solution) {
  ApproxOutcome out;
  out.solver = std::move(solver);
  out.plan = std::move(solution.plan);
  out.schedule = std::move(solution.schedule);
  out.makespan = solution.makespan;
  out.lower_bound = solution.makespan;
  return out;
}

std::vector<std::size_t> indices_of(const Instance& instance, const std::vector<TaskId>& ids) {
  std::vector<std::size_t> out;
  out.reserve(ids.size());
  for (TaskId id : ids) out.push_back(instance.index(id));
  std::sort(out.begin(), out.end());
  return out;
}

// Checks that `layers` covers every task once and that every edge goes from a
// layer to the next one towards the larger stretch factor.
std::vector<int> check_layers(const Instance& instance, const std::vector<std::vector<TaskId>>& layers,
                              const char* who) {
  std::vector<int> level(instance.size(), -1);
  for (std::size_t l = 0; l < layers.size(); ++l) {
    for (TaskId id : layers[l]) {
      auto idx = instance.index_of(id);
      if (!idx) throw TopologyError(std::string(who) + ": partition names unknown task " + std::to_string(id));
      if (level[*idx] != -1) throw TopologyError(std::string(who) + ": task " + std::to_string(id) + " is in two layers");
      level[*idx] = static_cast<int>(l);
    }
  }
  for (std::size_t i = 0; i < instance.size(); ++i) {
    if (level[i] == -1) {
      throw TopologyError(std::string(who) + ": task " + std::to_string(instance.id(i)) + " is in no layer");
    }
  }
  for (const Edge& e : instance.edges()) {
    std::size_t lo = level[e.u] < level[e.v] ? e.u : e.v;
    std::size_t hi = lo == e.u ? e.v : e.u;
    if (level[hi] != level[lo] + 1 || instance.alpha(lo) >= instance.alpha(hi)) {
      throw TopologyError(std::string(who) + ": edge " + std::to_string(instance.id(e.u)) + "-" +
                          std::to_string(instance.id(e.v)) + " does not go up one layer");
    }
  }
  return level;
}

// Multiple-knapsack packing of xs into ys, returned as index -> host index.
std::map<std::size_t, std::size_t> stage_pack(const Instance& instance, const std::vector<std::size_t>& xs,
                                              const std::vector<std::size_t>& ys) {
  std::vector<packing::Item> items;
  for (std::size_t x : xs) items.push_back({static_cast<std::int64_t>(x), 3 * instance.alpha(x)});
  std::set<std::size_t> x_set(xs.begin(), xs.end());
  std::vector<packing::BinSpec> bins;
  for (std::size_t y : ys) {
    packing::BinSpec bin{static_cast<std::int64_t>(y), instance.alpha(y), std::vector<std::int64_t>{}};
    for (std::size_t x : instance.neighbors(y)) {
      if (x_set.count(x) && fits_inside(instance.alpha(x), instance.alpha(y))) {
        bin.eligible->push_back(static_cast<std::int64_t>(x));
      }
    }
    bins.push_back(std::move(bin));
  }
  auto result = packing::fill_bins(items, bins);
  std::map<std::size_t, std::size_t> out;
  for (auto [item, bin] : result.assignment) out[static_cast<std::size_t>(item)] = static_cast<std::size_t>(bin);
  return out;
}

}  // namespace

ApproxOutcome sequential(const Instance& instance) {
  return finish(instance, "sequential", PackingPlan{}, Rational(3, 2), 0);
}

ApproxOutcome star_fptas(const Instance& instance, const Rational& epsilon) {
  if (!(Rational(0) < epsilon && epsilon < Rational(1))) {
    throw ParameterError("epsilon must lie strictly between 0 and 1, got " + epsilon.to_string());
  }
  std::optional<std::size_t> center;
  if (instance.size() == 2 && instance.edges().size() == 1) {
    center = instance.alpha(1) >= instance.alpha(0) ? 1 : 0;
  } else {
    center = gen::star_center(instance);
  }
  if (!center) throw TopologyError("star FPTAS: the compatibility graph is not a star");
  std::vector<packing::Item> items;
  for (std::size_t s : instance.neighbors(*center)) {
    if (instance.alpha(s) >= instance.alpha(*center)) {
      throw TopologyError("star FPTAS: satellite " + std::to_string(instance.id(s)) +
                          " is not smaller than the center");
    }
    if (fits_inside(instance.alpha(s), instance.alpha(*center))) items.push_back({instance.id(s), 3 * instance.alpha(s)});
  }
  auto chosen = packing::ssp_fptas(items, instance.alpha(*center), epsilon);
  PackingPlan plan;
  for (std::int64_t id : chosen.witness) plan.pack(id, instance.id(*center));
  Rational ratio = items.empty() ? Rational(1) : Rational(1) + epsilon / Rational(2);
  return finish(instance, "star_fptas", std::move(plan), ratio, 0);
}

ApproxOutcome one_stage(const Instance& instance, const StagePartition& partition) {
  if (!partition.v2.empty()) throw TopologyError("one_stage: the partition has a third layer");
  check_layers(instance, {partition.v0, partition.v1}, "one_stage");
  auto xs = indices_of(instance, partition.v0);
  auto ys = indices_of(instance, partition.v1);
  PackingPlan plan;
  for (auto [x, y] : stage_pack(instance, xs, ys)) plan.pack(instance.id(x), instance.id(y));
  return finish(instance, "one_stage", std::move(plan), Rational(7, 6), seq(instance, ys));
}

TwoStageOutcome two_stage(const Instance& instance, const StagePartition& partition, const TwoStageOptions& options) {
  check_layers(instance, {partition.v0, partition.v1, partition.v2}, "two_stage");
  auto v0 = indices_of(instance, partition.v0);
  auto v1 = indices_of(instance, partition.v1);
  auto v2 = indices_of(instance, partition.v2);

  auto upper = stage_pack(instance, v1, v2);
  auto lower = stage_pack(instance, v0, v1);

  TwoStageOutcome result;
  PackingPlan plan;
  std::vector<Time> residual(instance.size());
  for (std::size_t i = 0; i < instance.size(); ++i) residual[i] = instance.alpha(i);
  for (auto [x, y] : upper) {
    plan.pack(instance.id(x), instance.id(y));
    result.v1_packed.push_back(instance.id(x));
  }
  std::vector<std::size_t> conflict;
  for (auto [x, y] : lower) {
    result.v0_packed.push_back(instance.id(x));
    if (upper.count(y)) {
      conflict.push_back(x);
    } else {
      plan.pack(instance.id(x), instance.id(y));
      residual[y] -= 3 * instance.alpha(x);
    }
  }
  if (options.repack_conflicts) {
    std::vector<std::size_t> stuck;
    for (std::size_t x : conflict) {
      bool placed = false;
      for (std::size_t y : instance.neighbors(x)) {
        if (upper.count(y) || !fits_inside(instance.alpha(x), instance.alpha(y)) ||
            residual[y] < 3 * instance.alpha(x)) {
          continue;
        }
        plan.pack(instance.id(x), instance.id(y));
        residual[y] -= 3 * instance.alpha(x);
        placed = true;
        break;
      }
      if (!placed) stuck.push_back(x);
    }
    conflict = std::move(stuck);
  }
  for (std::size_t x : conflict) result.conflict.push_back(instance.id(x));
  result.outcome = finish(instance, "two_stage", std::move(plan), Rational(13, 9), seq(instance, v2));
  return result;
}

ApproxOutcome auto_solve(const Instance& instance, const AutoOptions& options) {
  auto report = gen::classify(instance);
  switch (report.cls) {
    case gen::TopologyClass::chain:
      return from_exact("chain", exact::solve_chain(instance));
    case gen::TopologyClass::star_out:
      return from_exact("star_out", exact::solve_star_out(instance));
    case gen::TopologyClass::star_in: {
      const Alpha center = instance.alpha(instance.index(*report.center));
      if (center > options.fptas_threshold) return star_fptas(instance, options.epsilon);
      return from_exact("star_in", exact::solve_star_in_exact(instance));
    }
    case gen::TopologyClass::one_sbg:
    case gen::TopologyClass::complete_one_sbg:
      if (report.max_degree_y <= 2) return from_exact("bipartite_deg2", exact::solve_bipartite_deg2(instance));
      return one_stage(instance, *report.layers);
    case gen::TopologyClass::two_sbg:
      return two_stage(instance, *report.layers).outcome;
    case gen::TopologyClass::general:
      break;
  }
  return sequential(instance);
}

}  // namespace coupled::approx
