#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

namespace coupled {

using TaskId = std::int64_t;
/// Stretch factor: sub-task a, idle gap l and sub-task b all last alpha.
using Alpha = std::int64_t;
using Time = std::int64_t;

struct Task {
  TaskId id = 0;
  Alpha alpha = 1;

  friend bool operator==(const Task&, const Task&) = default;
};

/// Undirected edge between two dense task indices, `u < v`.
struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A task set together with its undirected compatibility graph.
///
/// Tasks are stored in ascending id order and addressed by a dense index
/// (0 .. size()-1), so "ascending index" and "ascending id" coincide. Every
/// deterministic tie-break in the library relies on that. Instances are
/// immutable once built.
class Instance {
 public:
  Instance() = default;

  /// Throws InvalidInstance on duplicate or negative ids, alpha < 1, self
  /// loops and edges naming unknown tasks. Repeated edges collapse.
  Instance(std::vector<Task> tasks, const std::vector<std::pair<TaskId, TaskId>>& edges);

  std::size_t size() const { return tasks_.size(); }
  bool empty() const { return tasks_.empty(); }

  std::span<const Task> tasks() const { return tasks_; }
  const Task& task(std::size_t index) const { return tasks_[index]; }
  TaskId id(std::size_t index) const { return tasks_[index].id; }
  Alpha alpha(std::size_t index) const { return tasks_[index].alpha; }

  std::optional<std::size_t> index_of(TaskId id) const;
  /// Throws InvalidInstance when the id is unknown.
  std::size_t index(TaskId id) const;

  std::span<const Edge> edges() const { return edges_; }
  std::vector<std::pair<TaskId, TaskId>> edge_ids() const;

  /// Neighbors of a task, ascending.
  std::span<const std::size_t> neighbors(std::size_t index) const { return adjacency_[index]; }
  std::size_t degree(std::size_t index) const { return adjacency_[index].size(); }
  bool adjacent(std::size_t a, std::size_t b) const;

  /// Subgraph induced by the given task indices (ids are preserved).
  Instance induced(std::span<const std::size_t> indices) const;

 private:
  std::vector<Task> tasks_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::unordered_map<TaskId, std::size_t> index_;
};

/// Time needed to run the tasks back to back: sum of 3 * alpha.
Time seq(std::span<const Task> tasks);
Time seq(const Instance& instance);
Time seq(const Instance& instance, std::span<const std::size_t> indices);

/// Remark 1: a task fits entirely inside the idle gap of a host.
constexpr bool fits_inside(Alpha child, Alpha host) { return 3 * child <= host; }

/// Greedy maximal independent set, largest alpha first (ties by index).
std::vector<std::size_t> greedy_independent_set(const Instance& instance);

/// seq() of the greedy independent set. Any valid schedule is at least this
/// long, since pairwise incompatible tasks never overlap.
Time independent_set_bound(const Instance& instance);

}  // namespace coupled
