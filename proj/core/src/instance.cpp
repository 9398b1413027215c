#include "coupled/instance.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "coupled/errors.hpp"

namespace coupled {

Instance::Instance(std::vector<Task> tasks, const std::vector<std::pair<TaskId, TaskId>>& edges)
    : tasks_(std::move(tasks)) {
  std::sort(tasks_.begin(), tasks_.end(), [](const Task& a, const Task& b) { return a.id < b.id; });
  index_.reserve(tasks_.size());
  for (std::size_t i = 0; i < tasks_.size(); ++i) {
    const Task& t = tasks_[i];
    if (t.id < 0) throw InvalidInstance("task id " + std::to_string(t.id) + " is negative");
    if (t.alpha < 1) {
      throw InvalidInstance("task " + std::to_string(t.id) + " has stretch factor " +
                            std::to_string(t.alpha) + " < 1");
    }
    if (!index_.emplace(t.id, i).second) {
      throw InvalidInstance("duplicate task id " + std::to_string(t.id));
    }
  }

  edges_.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    if (a == b) throw InvalidInstance("self loop on task " + std::to_string(a));
    auto ia = index_of(a);
    auto ib = index_of(b);
    if (!ia || !ib) {
      throw InvalidInstance("edge (" + std::to_string(a) + ", " + std::to_string(b) +
                            ") names an unknown task");
    }
    edges_.push_back(Edge{std::min(*ia, *ib), std::max(*ia, *ib)});
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  adjacency_.assign(tasks_.size(), {});
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

std::optional<std::size_t> Instance::index_of(TaskId id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Instance::index(TaskId id) const {
  auto i = index_of(id);
  if (!i) throw InvalidInstance("unknown task id " + std::to_string(id));
  return *i;
}

std::vector<std::pair<TaskId, TaskId>> Instance::edge_ids() const {
  std::vector<std::pair<TaskId, TaskId>> out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_) out.emplace_back(tasks_[e.u].id, tasks_[e.v].id);
  return out;
}

bool Instance::adjacent(std::size_t a, std::size_t b) const {
  const auto& list = adjacency_[a];
  return std::binary_search(list.begin(), list.end(), b);
}

Instance Instance::induced(std::span<const std::size_t> indices) const {
  std::vector<Task> sub;
  std::vector<bool> keep(tasks_.size(), false);
  for (std::size_t i : indices) {
    if (!keep[i]) sub.push_back(tasks_[i]);
    keep[i] = true;
  }
  std::vector<std::pair<TaskId, TaskId>> sub_edges;
  for (const Edge& e : edges_) {
    if (keep[e.u] && keep[e.v]) sub_edges.emplace_back(tasks_[e.u].id, tasks_[e.v].id);
  }
  return Instance(std::move(sub), sub_edges);
}

Time seq(std::span<const Task> tasks) {
  Time total = 0;
  for (const Task& t : tasks) total += 3 * t.alpha;
  return total;
}

Time seq(const Instance& instance) { return seq(instance.tasks()); }

Time seq(const Instance& instance, std::span<const std::size_t> indices) {
  Time total = 0;
  for (std::size_t i : indices) total += 3 * instance.alpha(i);
  return total;
}

std::vector<std::size_t> greedy_independent_set(const Instance& instance) {
  std::vector<std::size_t> order(instance.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return instance.alpha(a) > instance.alpha(b);
  });
  std::vector<bool> blocked(instance.size(), false);
  std::vector<std::size_t> chosen;
  for (std::size_t i : order) {
    if (blocked[i]) continue;
    chosen.push_back(i);
    for (std::size_t j : instance.neighbors(i)) blocked[j] = true;
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

Time independent_set_bound(const Instance& instance) {
  auto chosen = greedy_independent_set(instance);
  return seq(instance, chosen);
}

}  // namespace coupled
