#include "coupled/orientation.hpp"

#include <algorithm>

namespace coupled {

const char* to_string(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::packable: return "packable";
    case EdgeKind::pairable: return "pairable";
    case EdgeKind::useless: return "useless";
  }
  return "?";
}

EdgeKind classify_edge(Alpha a, Alpha b) {
  Alpha lo = std::min(a, b);
  Alpha hi = std::max(a, b);
  if (lo == hi) return EdgeKind::pairable;
  if (fits_inside(lo, hi)) return EdgeKind::packable;
  return EdgeKind::useless;
}

OrientedView::OrientedView(const Instance& instance)
    : in_(instance.size()),
      out_(instance.size()),
      hosts_(instance.size()),
      guests_(instance.size()),
      degree_(instance.size(), 0) {
  arcs_.reserve(instance.edges().size());
  for (const Edge& e : instance.edges()) {
    Alpha au = instance.alpha(e.u);
    Alpha av = instance.alpha(e.v);
    Arc arc;
    arc.kind = classify_edge(au, av);
    if (au <= av) {
      arc.low = e.u;
      arc.high = e.v;
    } else {
      arc.low = e.v;
      arc.high = e.u;
    }
    arcs_.push_back(arc);

    out_[arc.low].push_back(arc.high);
    in_[arc.high].push_back(arc.low);
    if (arc.kind == EdgeKind::pairable) {
      out_[arc.high].push_back(arc.low);
      in_[arc.low].push_back(arc.high);
    }
    if (arc.kind == EdgeKind::packable) {
      hosts_[arc.low].push_back(arc.high);
      guests_[arc.high].push_back(arc.low);
    }
    ++degree_[e.u];
    ++degree_[e.v];
  }
  for (auto* lists : {&in_, &out_, &hosts_, &guests_}) {
    for (auto& list : *lists) std::sort(list.begin(), list.end());
  }
}

std::size_t OrientedView::max_degree() const {
  std::size_t best = 0;
  for (std::size_t d : degree_) best = std::max(best, d);
  return best;
}

std::size_t OrientedView::count(EdgeKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(arcs_.begin(), arcs_.end(), [kind](const Arc& a) { return a.kind == kind; }));
}

OrientedView orient(const Instance& instance) { return OrientedView(instance); }

}  // namespace coupled
