#include <limits>
#include <string>

#include "coupled/errors.hpp"
#include "coupled/random.hpp"
#include "coupled/random_instance.hpp"

namespace coupled {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw ParameterError("empty range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  const std::uint64_t range = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (range == 0) return static_cast<std::int64_t>(engine_());
  // Values below 2^64 mod range would make the low residues more likely.
  const std::uint64_t reject_below = (0 - range) % range;
  std::uint64_t x = engine_();
  while (x < reject_below) x = engine_();
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + x % range);
}

bool Rng::chance(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw ParameterError("chance with zero denominator");
  return static_cast<std::uint64_t>(uniform(0, static_cast<std::int64_t>(den) - 1)) < num;
}

}  // namespace coupled

namespace coupled::gen {

namespace {

constexpr int max_attempts = 10'000;

struct Draft {
  std::vector<Alpha> alpha;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

std::size_t min_size(TopologyClass cls) {
  switch (cls) {
    case TopologyClass::chain: return 1;
    case TopologyClass::star_out:
    case TopologyClass::star_in: return 4;
    case TopologyClass::complete_one_sbg: return 4;
    case TopologyClass::one_sbg:
    case TopologyClass::two_sbg: return 5;
    case TopologyClass::general: return 3;
  }
  return 0;
}

Alpha draw(Rng& rng, Alpha lo, Alpha hi) { return rng.uniform(lo, hi); }

// Splits n tasks into groups of at least `least` each; returns the sizes.
std::vector<std::size_t> split(Rng& rng, std::size_t n, std::size_t groups, std::size_t least) {
  std::vector<std::size_t> sizes(groups, least);
  for (std::size_t i = groups * least; i < n; ++i) {
    sizes[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(groups) - 1))] += 1;
  }
  return sizes;
}

void connect_layers(Rng& rng, Draft& d, const std::vector<std::size_t>& low, const std::vector<std::size_t>& high,
                    const RandomOptions& options, bool cap_high) {
  for (std::size_t y : high) {
    std::vector<std::size_t> order = low;
    rng.shuffle(order);
    std::size_t degree = 0;
    for (std::size_t x : order) {
      if (cap_high && options.max_y_degree && degree >= *options.max_y_degree) break;
      if (rng.chance(static_cast<std::uint64_t>(options.edge_percent), 100)) {
        d.edges.emplace_back(x, y);
        ++degree;
      }
    }
  }
}

Draft draft(Rng& rng, TopologyClass cls, std::size_t n, AlphaRange a, const RandomOptions& options) {
  Draft d;
  d.alpha.assign(n, a.lo);
  std::vector<std::size_t> slots(n);
  for (std::size_t i = 0; i < n; ++i) slots[i] = i;
  rng.shuffle(slots);

  switch (cls) {
    case TopologyClass::chain: {
      for (std::size_t i = 0; i < n; ++i) d.alpha[i] = draw(rng, a.lo, a.hi);
      for (std::size_t i = 1; i < n; ++i) d.edges.emplace_back(slots[i - 1], slots[i]);
      break;
    }
    case TopologyClass::star_in:
    case TopologyClass::star_out: {
      const std::size_t center = slots[0];
      if (cls == TopologyClass::star_in) {
        d.alpha[center] = draw(rng, a.lo + (a.hi - a.lo + 1) / 2, a.hi);
        for (std::size_t i = 1; i < n; ++i) d.alpha[slots[i]] = draw(rng, a.lo, d.alpha[center] - 1);
      } else {
        d.alpha[center] = draw(rng, a.lo, a.hi);
        for (std::size_t i = 1; i < n; ++i) d.alpha[slots[i]] = draw(rng, a.lo, a.hi);
        d.alpha[slots[static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(n) - 1))]] =
            draw(rng, d.alpha[center], a.hi);
      }
      for (std::size_t i = 1; i < n; ++i) d.edges.emplace_back(center, slots[i]);
      break;
    }
    case TopologyClass::one_sbg:
    case TopologyClass::complete_one_sbg: {
      const Alpha b = a.lo + (a.hi - a.lo) / 4;
      auto sizes = split(rng, n, 2, cls == TopologyClass::complete_one_sbg ? 2 : 1);
      std::vector<std::size_t> xs(slots.begin(), slots.begin() + static_cast<std::ptrdiff_t>(sizes[0]));
      std::vector<std::size_t> ys(slots.begin() + static_cast<std::ptrdiff_t>(sizes[0]), slots.end());
      for (std::size_t x : xs) d.alpha[x] = draw(rng, a.lo, b);
      for (std::size_t y : ys) d.alpha[y] = draw(rng, b + 1, a.hi);
      if (cls == TopologyClass::complete_one_sbg) {
        for (std::size_t y : ys) {
          for (std::size_t x : xs) d.edges.emplace_back(x, y);
        }
      } else {
        connect_layers(rng, d, xs, ys, options, true);
      }
      break;
    }
    case TopologyClass::two_sbg: {
      const Alpha b1 = a.lo + (a.hi - a.lo) / 7;
      const Alpha b2 = a.lo + 3 * (a.hi - a.lo) / 7;
      auto sizes = split(rng, n, 3, 1);
      auto first = slots.begin();
      std::vector<std::size_t> v0(first, first + static_cast<std::ptrdiff_t>(sizes[0]));
      std::vector<std::size_t> v1(first + static_cast<std::ptrdiff_t>(sizes[0]),
                                  first + static_cast<std::ptrdiff_t>(sizes[0] + sizes[1]));
      std::vector<std::size_t> v2(first + static_cast<std::ptrdiff_t>(sizes[0] + sizes[1]), slots.end());
      for (std::size_t i : v0) d.alpha[i] = draw(rng, a.lo, b1);
      for (std::size_t i : v1) d.alpha[i] = draw(rng, b1 + 1, b2);
      for (std::size_t i : v2) d.alpha[i] = draw(rng, b2 + 1, a.hi);
      connect_layers(rng, d, v0, v1, options, false);
      connect_layers(rng, d, v1, v2, options, false);
      break;
    }
    case TopologyClass::general: {
      for (std::size_t i = 0; i < n; ++i) d.alpha[i] = draw(rng, a.lo, a.hi);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (rng.chance(static_cast<std::uint64_t>(options.edge_percent), 100)) d.edges.emplace_back(i, j);
        }
      }
      break;
    }
  }

  if (options.distinct_alpha) {
    const Alpha scale = 3 * static_cast<Alpha>(n) + 1;
    std::vector<Alpha> offsets(n);
    for (std::size_t i = 0; i < n; ++i) offsets[i] = static_cast<Alpha>(i);
    rng.shuffle(offsets);
    for (std::size_t i = 0; i < n; ++i) d.alpha[i] = scale * d.alpha[i] + offsets[i];
  }
  return d;
}

}  // namespace

Instance random_instance(TopologyClass cls, std::size_t n, AlphaRange alpha, std::uint64_t seed,
                         const RandomOptions& options) {
  if (alpha.lo < 1 || alpha.hi < alpha.lo) {
    throw ParameterError("invalid stretch range [" + std::to_string(alpha.lo) + ", " + std::to_string(alpha.hi) + "]");
  }
  if (options.edge_percent < 0 || options.edge_percent > 100) {
    throw ParameterError("edge percentage must lie in [0, 100]");
  }
  if (n < min_size(cls)) {
    throw ParameterError(std::string(to_string(cls)) + " instances need at least " + std::to_string(min_size(cls)) +
                         " tasks");
  }
  const bool layered = cls == TopologyClass::one_sbg || cls == TopologyClass::complete_one_sbg;
  if (cls == TopologyClass::star_in && alpha.hi == alpha.lo) {
    throw ParameterError("incoming stars need at least two distinct stretch factors");
  }
  if ((layered || cls == TopologyClass::two_sbg) && alpha.hi - alpha.lo < (layered ? 1 : 6)) {
    throw ParameterError("stretch range too narrow for " + std::string(to_string(cls)));
  }

  Rng rng(seed);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    Draft d = draft(rng, cls, n, alpha, options);
    std::vector<Task> tasks;
    for (std::size_t i = 0; i < n; ++i) tasks.push_back({static_cast<TaskId>(i), d.alpha[i]});
    std::vector<std::pair<TaskId, TaskId>> edges;
    for (auto [u, v] : d.edges) edges.emplace_back(static_cast<TaskId>(u), static_cast<TaskId>(v));
    Instance instance(std::move(tasks), edges);
    if (classify(instance).cls == cls) return instance;
  }
  throw ParameterError("could not draw a " + std::string(to_string(cls)) + " instance with " + std::to_string(n) +
                       " tasks after " + std::to_string(max_attempts) + " attempts");
}

}  // namespace coupled::gen
