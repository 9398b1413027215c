#include "coupled/packing.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "coupled/errors.hpp"

namespace coupled::packing {

namespace {

__extension__ using Wide = __int128;

std::vector<Item> sorted_items(std::span<const Item> items) {
  std::vector<Item> out(items.begin(), items.end());
  std::sort(out.begin(), out.end(), [](const Item& a, const Item& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].weight < 1) throw ParameterError("item " + std::to_string(out[i].id) + " has weight < 1");
    if (i > 0 && out[i].id == out[i - 1].id) throw ParameterError("duplicate item id " + std::to_string(out[i].id));
  }
  return out;
}

}  // namespace

SubsetResult ssp_exact(std::span<const Item> items, std::int64_t capacity, std::int64_t capacity_limit) {
  if (capacity < 0) throw ParameterError("negative capacity");
  auto sorted = sorted_items(items);
  const std::size_t n = sorted.size();

  std::int64_t total = 0;
  for (const Item& it : sorted) total += it.weight;
  const std::int64_t range = std::min(capacity, total);
  if (range > capacity_limit) {
    throw CapacityLimitError("subset-sum capacity " + std::to_string(range) + " exceeds the limit " +
                             std::to_string(capacity_limit));
  }

  // latest[s] is the largest k such that s is a subset sum of items k..n-1
  // (-1 when unreachable). Membership of s in the suffix k.. is then simply
  // latest[s] >= k, which lets the witness be rebuilt front to back.
  std::vector<std::int32_t> latest(static_cast<std::size_t>(range) + 1, -1);
  latest[0] = static_cast<std::int32_t>(n);
  for (std::size_t k = n; k-- > 0;) {
    const std::int64_t w = sorted[k].weight;
    const auto next = static_cast<std::int32_t>(k + 1);
    for (std::int64_t s = range; s >= w; --s) {
      auto& cell = latest[static_cast<std::size_t>(s)];
      if (cell < 0 && latest[static_cast<std::size_t>(s - w)] >= next) cell = static_cast<std::int32_t>(k);
    }
  }

  SubsetResult result;
  for (std::int64_t s = range; s >= 0; --s) {
    if (latest[static_cast<std::size_t>(s)] >= 0) {
      result.sum = s;
      break;
    }
  }
  std::int64_t rest = result.sum;
  for (std::size_t i = 0; i < n && rest > 0; ++i) {
    const std::int64_t w = sorted[i].weight;
    if (w <= rest && latest[static_cast<std::size_t>(rest - w)] >= static_cast<std::int32_t>(i + 1)) {
      result.witness.push_back(sorted[i].id);
      rest -= w;
    }
  }
  return result;
}

SubsetResult ssp_fptas(std::span<const Item> items, std::int64_t capacity, const Rational& epsilon) {
  if (!(epsilon > Rational(0)) || !(epsilon < Rational(1))) {
    throw ParameterError("epsilon must lie strictly between 0 and 1, got " + epsilon.to_string());
  }
  if (capacity < 0) throw ParameterError("negative capacity");
  auto sorted = sorted_items(items);
  std::erase_if(sorted, [capacity](const Item& it) { return it.weight > capacity; });
  const auto n = static_cast<Wide>(std::max<std::size_t>(sorted.size(), 1));

  struct Node {
    std::size_t item;
    long prev;
  };
  struct Entry {
    std::int64_t sum;
    long node;
  };
  std::vector<Node> nodes;
  std::vector<Entry> list{{0, -1}};

  // Trim with delta = epsilon / (2n): keep y only if y > last * (1 + delta).
  const Wide scale = 2 * n * epsilon.den();
  const Wide grown = scale + epsilon.num();

  for (std::size_t i = 0; i < sorted.size(); ++i) {
    std::vector<Entry> shifted;
    shifted.reserve(list.size());
    for (const Entry& e : list) {
      std::int64_t s = e.sum + sorted[i].weight;
      if (s > capacity) break;
      nodes.push_back({i, e.node});
      shifted.push_back({s, static_cast<long>(nodes.size()) - 1});
    }
    std::vector<Entry> merged;
    merged.reserve(list.size() + shifted.size());
    std::merge(list.begin(), list.end(), shifted.begin(), shifted.end(), std::back_inserter(merged),
               [](const Entry& a, const Entry& b) { return a.sum < b.sum; });

    list.clear();
    for (const Entry& e : merged) {
      if (list.empty()) {
        list.push_back(e);
        continue;
      }
      const Wide last = list.back().sum;
      if (static_cast<Wide>(e.sum) * scale > last * grown) list.push_back(e);
    }
  }

  SubsetResult result;
  const Entry& best = list.back();
  result.sum = best.sum;
  for (long node = best.node; node >= 0; node = nodes[static_cast<std::size_t>(node)].prev) {
    result.witness.push_back(sorted[nodes[static_cast<std::size_t>(node)].item].id);
  }
  std::sort(result.witness.begin(), result.witness.end());
  return result;
}

PackingResult fill_bins(std::span<const Item> items, std::span<const BinSpec> bins, std::int64_t capacity_limit) {
  auto sorted = sorted_items(items);
  std::vector<const BinSpec*> order;
  order.reserve(bins.size());
  for (const BinSpec& b : bins) {
    if (b.capacity < 1) throw ParameterError("bin " + std::to_string(b.id) + " has capacity < 1");
    order.push_back(&b);
  }
  std::sort(order.begin(), order.end(), [](const BinSpec* a, const BinSpec* b) {
    if (a->capacity != b->capacity) return a->capacity > b->capacity;
    return a->id < b->id;
  });

  PackingResult result;
  std::set<std::int64_t> taken;
  for (const BinSpec* bin : order) {
    std::vector<Item> candidates;
    if (bin->eligible) {
      std::set<std::int64_t> allowed(bin->eligible->begin(), bin->eligible->end());
      for (const Item& it : sorted) {
        if (allowed.count(it.id) && !taken.count(it.id)) candidates.push_back(it);
      }
    } else {
      for (const Item& it : sorted) {
        if (!taken.count(it.id)) candidates.push_back(it);
      }
    }
    if (candidates.empty()) continue;
    auto best = ssp_exact(candidates, bin->capacity, capacity_limit);
    for (std::int64_t id : best.witness) {
      taken.insert(id);
      result.assignment.emplace(id, bin->id);
    }
    result.packed_weight += best.sum;
  }
  return result;
}

}  // namespace coupled::packing
