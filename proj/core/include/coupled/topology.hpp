#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "coupled/instance.hpp"
#include "coupled/stage_partition.hpp"

namespace coupled::gen {

enum class TopologyClass {
  chain,             ///< every connected component is a simple path
  star_out,          ///< star whose center has an outgoing or bidirectional arc
  star_in,           ///< star whose center only receives arcs
  one_sbg,           ///< 1-stage bipartite orientation
  complete_one_sbg,  ///< 1-stage bipartite with every X-Y pair an edge
  two_sbg,           ///< 2-stage bipartite orientation
  general,
};

std::string_view to_string(TopologyClass cls);
std::optional<TopologyClass> parse_topology_class(std::string_view text);

struct TopologyReport {
  TopologyClass cls = TopologyClass::general;
  /// Star center, for star classes.
  std::optional<TaskId> center;
  /// Stage layers whenever a layering with at most three layers exists,
  /// whatever the reported class.
  std::optional<approx::StagePartition> layers;
  std::size_t max_in_degree = 0;
  std::size_t max_out_degree = 0;
  std::size_t max_degree = 0;
  /// Largest degree among layer-0 (X) and layer-1 (Y) tasks of a 1-stage
  /// layering; zero otherwise.
  std::size_t max_degree_x = 0;
  std::size_t max_degree_y = 0;
  /// All Y-tasks of a 1-stage layering share one stretch factor.
  bool uniform_y = false;
};

/// Most specific class first: chain, then star, then 1-stage, complete
/// 1-stage, 2-stage, general.
TopologyReport classify(const Instance& instance);

bool is_chain(const Instance& instance);
/// Center index when the graph is a star with at least two satellites.
std::optional<std::size_t> star_center(const Instance& instance);

/// Layering where every arc joins consecutive layers, with each connected
/// component shifted to start at layer 0. Fails when some edge joins equal
/// stretch factors, when no consistent layering exists, or when more than
/// `max_layers` layers would be needed.
std::optional<approx::StagePartition> stage_partition(const Instance& instance, int max_layers);

}  // namespace coupled::gen
