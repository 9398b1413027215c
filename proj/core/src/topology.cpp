#include "coupled/topology.hpp"

#include <algorithm>
#include <array>
#include <queue>

#include "coupled/orientation.hpp"

namespace coupled::gen {

std::string_view to_string(TopologyClass cls) {
  switch (cls) {
    case TopologyClass::chain: return "chain";
    case TopologyClass::star_out: return "star_out";
    case TopologyClass::star_in: return "star_in";
    case TopologyClass::one_sbg: return "one_sbg";
    case TopologyClass::complete_one_sbg: return "complete_one_sbg";
    case TopologyClass::two_sbg: return "two_sbg";
    case TopologyClass::general: return "general";
  }
  return "?";
}

std::optional<TopologyClass> parse_topology_class(std::string_view text) {
  constexpr std::array all{TopologyClass::chain,   TopologyClass::star_out,         TopologyClass::star_in,
                           TopologyClass::one_sbg, TopologyClass::complete_one_sbg, TopologyClass::two_sbg,
                           TopologyClass::general};
  for (TopologyClass cls : all) {
    if (to_string(cls) == text) return cls;
  }
  return std::nullopt;
}

namespace {

std::size_t component_count(const Instance& instance) {
  std::vector<bool> seen(instance.size(), false);
  std::size_t count = 0;
  for (std::size_t s = 0; s < instance.size(); ++s) {
    if (seen[s]) continue;
    ++count;
    std::vector<std::size_t> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w : instance.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
  }
  return count;
}

}  // namespace

bool is_chain(const Instance& instance) {
  for (std::size_t i = 0; i < instance.size(); ++i) {
    if (instance.degree(i) > 2) return false;
  }
  // Degree <= 2 and acyclic means every component is a path.
  return instance.edges().size() + component_count(instance) == instance.size();
}

std::optional<std::size_t> star_center(const Instance& instance) {
  const std::size_t n = instance.size();
  if (n < 3 || instance.edges().size() != n - 1) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i) {
    if (instance.degree(i) == n - 1) return i;
  }
  return std::nullopt;
}

std::optional<approx::StagePartition> stage_partition(const Instance& instance, int max_layers) {
  const std::size_t n = instance.size();
  constexpr long unset = -1'000'000'000;
  std::vector<long> level(n, unset);

  for (std::size_t s = 0; s < n; ++s) {
    if (level[s] != unset) continue;
    std::vector<std::size_t> members{s};
    level[s] = 0;
    std::queue<std::size_t> queue;
    queue.push(s);
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop();
      for (std::size_t w : instance.neighbors(v)) {
        if (instance.alpha(v) == instance.alpha(w)) return std::nullopt;
        long want = instance.alpha(v) < instance.alpha(w) ? level[v] + 1 : level[v] - 1;
        if (level[w] == unset) {
          level[w] = want;
          members.push_back(w);
          queue.push(w);
        } else if (level[w] != want) {
          return std::nullopt;
        }
      }
    }
    long lowest = level[s];
    for (std::size_t m : members) lowest = std::min(lowest, level[m]);
    for (std::size_t m : members) {
      level[m] -= lowest;
      if (level[m] >= max_layers || level[m] > 2) return std::nullopt;
    }
  }

  approx::StagePartition layers;
  for (std::size_t i = 0; i < n; ++i) {
    auto& target = level[i] == 0 ? layers.v0 : level[i] == 1 ? layers.v1 : layers.v2;
    target.push_back(instance.id(i));
  }
  return layers;
}

TopologyReport classify(const Instance& instance) {
  TopologyReport report;
  OrientedView view(instance);
  for (std::size_t i = 0; i < instance.size(); ++i) {
    report.max_in_degree = std::max(report.max_in_degree, view.in_degree(i));
    report.max_out_degree = std::max(report.max_out_degree, view.out_degree(i));
  }
  report.max_degree = view.max_degree();
  report.layers = stage_partition(instance, 3);

  if (report.layers && report.layers->v2.empty()) {
    for (TaskId id : report.layers->v0) {
      report.max_degree_x = std::max(report.max_degree_x, instance.degree(instance.index(id)));
    }
    report.uniform_y = true;
    for (TaskId id : report.layers->v1) {
      std::size_t y = instance.index(id);
      report.max_degree_y = std::max(report.max_degree_y, instance.degree(y));
      if (instance.alpha(y) != instance.alpha(instance.index(report.layers->v1.front()))) report.uniform_y = false;
    }
  }

  if (is_chain(instance)) {
    report.cls = TopologyClass::chain;
    return report;
  }
  if (auto c = star_center(instance)) {
    report.center = instance.id(*c);
    bool outgoing = std::any_of(instance.neighbors(*c).begin(), instance.neighbors(*c).end(),
                                [&](std::size_t s) { return instance.alpha(s) >= instance.alpha(*c); });
    report.cls = outgoing ? TopologyClass::star_out : TopologyClass::star_in;
    return report;
  }
  if (report.layers) {
    const auto& layers = *report.layers;
    if (layers.v2.empty()) {
      bool complete = !layers.v0.empty() && !layers.v1.empty() &&
                      instance.edges().size() == layers.v0.size() * layers.v1.size();
      report.cls = complete ? TopologyClass::complete_one_sbg : TopologyClass::one_sbg;
    } else {
      report.cls = TopologyClass::two_sbg;
    }
    return report;
  }
  report.cls = TopologyClass::general;
  return report;
}

}  // namespace coupled::gen
