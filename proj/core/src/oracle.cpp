#include <string>

#include "coupled/errors.hpp"
#include "coupled/oracle.hpp"

namespace coupled::exact {

namespace {

constexpr std::size_t none = static_cast<std::size_t>(-1);

class Search {
 public:
  Search(const Instance& instance, bool prune)
      : inst_(instance),
        n_(instance.size()),
        prune_(prune),
        parent_(n_, none),
        children_(n_),
        residual_(n_),
        pair_partner_(n_, none),
        pair_with_(n_, none),
        has_equal_neighbor_(n_, false) {
    for (std::size_t i = 0; i < n_; ++i) {
      residual_[i] = inst_.alpha(i);
      for (std::size_t w : inst_.neighbors(i)) {
        if (inst_.alpha(w) == inst_.alpha(i)) has_equal_neighbor_[i] = true;
      }
    }
  }

  OracleResult run() {
    decide(0, 0);
    OracleResult result;
    result.nodes = nodes_;
    result.makespan = seq(inst_) - best_;
    for (std::size_t i = 0; i < n_; ++i) {
      if (best_parent_[i] != none) result.plan.pack(inst_.id(i), inst_.id(best_parent_[i]));
      if (best_pair_[i] != none && i < best_pair_[i]) result.plan.pair(inst_.id(i), inst_.id(best_pair_[i]));
    }
    return result;
  }

 private:
  Time pair_bound(std::size_t t) const { return has_equal_neighbor_[t] ? inst_.alpha(t) : 0; }

  bool has_room_somewhere(std::size_t t) const {
    const Time need = 3 * inst_.alpha(t);
    for (std::size_t h : inst_.neighbors(t)) {
      if (fits_inside(inst_.alpha(t), inst_.alpha(h)) && residual_[h] >= need) return true;
    }
    return false;
  }

  Time bound(std::size_t next, Time packed) const {
    Time total = packed;
    for (std::size_t t = 0; t < next; ++t) {
      if (parent_[t] == none && children_[t].empty()) total += pair_bound(t);
    }
    for (std::size_t t = next; t < n_; ++t) {
      const Time pack = has_room_somewhere(t) ? 3 * inst_.alpha(t) : 0;
      total += std::max(pack, pair_bound(t));
    }
    return total;
  }

  // Every task of t's decided subtree must be adjacent to h and to h's
  // ancestors, since all of them end up inside those idle gaps.
  bool subtree_compatible(std::size_t t, std::size_t h) const {
    std::vector<std::size_t> chain;
    for (std::size_t a = h; a != none; a = parent_[a]) chain.push_back(a);
    std::vector<std::size_t> stack{t};
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t a : chain) {
        if (!inst_.adjacent(u, a)) return false;
      }
      for (std::size_t c : children_[u]) stack.push_back(c);
    }
    return true;
  }

  void decide(std::size_t t, Time packed) {
    ++nodes_;
    if (prune_ && bound(t, packed) <= best_) return;
    if (t == n_) {
      leaf(packed);
      return;
    }
    const Time need = 3 * inst_.alpha(t);
    for (std::size_t h : inst_.neighbors(t)) {
      if (!fits_inside(inst_.alpha(t), inst_.alpha(h)) || residual_[h] < need) continue;
      if (!subtree_compatible(t, h)) continue;
      parent_[t] = h;
      children_[h].push_back(t);
      residual_[h] -= need;
      decide(t + 1, packed + need);
      residual_[h] += need;
      children_[h].pop_back();
      parent_[t] = none;
    }
    decide(t + 1, packed);
  }

  void leaf(Time packed) {
    free_.clear();
    for (std::size_t t = 0; t < n_; ++t) {
      if (parent_[t] == none && children_[t].empty() && has_equal_neighbor_[t]) free_.push_back(t);
    }
    std::fill(pair_partner_.begin(), pair_partner_.end(), none);
    pair_best_ = -1;
    match_pairs(0, 0);
    const Time total = packed + pair_best_;
    if (total > best_) {
      best_ = total;
      best_parent_ = parent_;
      best_pair_ = pair_with_;
    }
  }

  void match_pairs(std::size_t k, Time gained) {
    while (k < free_.size() && pair_partner_[free_[k]] != none) ++k;
    if (k == free_.size()) {
      if (gained > pair_best_) {
        pair_best_ = gained;
        pair_with_ = pair_partner_;
      }
      return;
    }
    const std::size_t a = free_[k];
    for (std::size_t j = k + 1; j < free_.size(); ++j) {
      const std::size_t b = free_[j];
      if (pair_partner_[b] != none || inst_.alpha(a) != inst_.alpha(b) || !inst_.adjacent(a, b)) continue;
      pair_partner_[a] = b;
      pair_partner_[b] = a;
      match_pairs(k + 1, gained + 2 * inst_.alpha(a));
      pair_partner_[a] = none;
      pair_partner_[b] = none;
    }
    pair_partner_[a] = a;
    match_pairs(k + 1, gained);
    pair_partner_[a] = none;
  }

  const Instance& inst_;
  std::size_t n_;
  bool prune_;
  std::vector<std::size_t> parent_;
  std::vector<std::vector<std::size_t>> children_;
  std::vector<Time> residual_;
  std::vector<std::size_t> pair_partner_;
  std::vector<std::size_t> pair_with_;
  std::vector<bool> has_equal_neighbor_;
  std::vector<std::size_t> free_;
  Time pair_best_ = -1;
  Time best_ = -1;
  std::vector<std::size_t> best_parent_;
  std::vector<std::size_t> best_pair_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

OracleResult solve_oracle(const Instance& instance, const OracleOptions& options) {
  if (instance.size() > options.limit_n) {
    throw InstanceTooLarge("oracle: " + std::to_string(instance.size()) + " tasks exceed the limit of " +
                           std::to_string(options.limit_n));
  }
  return Search(instance, options.prune).run();
}

}  // namespace coupled::exact
