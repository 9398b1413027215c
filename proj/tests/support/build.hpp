#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "coupled/instance.hpp"

namespace coupled::testing {

/// Tasks 0..n-1 with the given stretch factors.
inline Instance make_instance(std::vector<Alpha> alphas, std::vector<std::pair<TaskId, TaskId>> edges = {}) {
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < alphas.size(); ++i) tasks.push_back({static_cast<TaskId>(i), alphas[i]});
  return Instance(std::move(tasks), edges);
}

inline Instance make_path(std::vector<Alpha> alphas) {
  std::vector<std::pair<TaskId, TaskId>> edges;
  for (std::size_t i = 1; i < alphas.size(); ++i) edges.emplace_back(static_cast<TaskId>(i - 1), static_cast<TaskId>(i));
  return make_instance(std::move(alphas), std::move(edges));
}

}  // namespace coupled::testing
