#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "coupled/instance.hpp"

namespace coupled {

/// How a compatibility edge can be used (Remark 1 case split).
enum class EdgeKind {
  packable,  ///< 3 * alpha(low) <= alpha(high): low runs inside high's gap.
  pairable,  ///< equal stretch: the two tasks interleave with no idle time.
  useless,   ///< alpha(low) < alpha(high) < 3 * alpha(low): no overlap possible.
};

const char* to_string(EdgeKind kind);

/// An edge directed from the smaller to the larger stretch factor. For equal
/// stretch factors the arc is bidirectional and `low` is the smaller index.
struct Arc {
  std::size_t low = 0;
  std::size_t high = 0;
  EdgeKind kind = EdgeKind::useless;
};

/// Orientation of an instance's compatibility graph derived from stretch
/// factors. Nothing here is stored on the Instance itself.
class OrientedView {
 public:
  explicit OrientedView(const Instance& instance);

  std::span<const Arc> arcs() const { return arcs_; }

  /// Tasks with an arc into `index` (bidirectional arcs included).
  std::span<const std::size_t> in_neighbors(std::size_t index) const { return in_[index]; }
  /// Tasks `index` has an arc to (bidirectional arcs included).
  std::span<const std::size_t> out_neighbors(std::size_t index) const { return out_[index]; }

  std::size_t in_degree(std::size_t index) const { return in_[index].size(); }
  std::size_t out_degree(std::size_t index) const { return out_[index].size(); }
  std::size_t degree(std::size_t index) const { return degree_[index]; }
  std::size_t max_degree() const;

  /// Tasks `index` can be packed into, ascending.
  std::span<const std::size_t> hosts(std::size_t index) const { return hosts_[index]; }
  /// Tasks that can be packed into `index`, ascending.
  std::span<const std::size_t> guests(std::size_t index) const { return guests_[index]; }

  std::size_t count(EdgeKind kind) const;

 private:
  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> in_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> hosts_;
  std::vector<std::vector<std::size_t>> guests_;
  std::vector<std::size_t> degree_;
};

OrientedView orient(const Instance& instance);

EdgeKind classify_edge(Alpha a, Alpha b);

}  // namespace coupled
