#include <doctest.h>

#include <functional>

#include "build.hpp"
#include "coupled/errors.hpp"
#include "coupled/exact.hpp"
#include "coupled/hungarian.hpp"
#include "coupled/oracle.hpp"
#include "coupled/random.hpp"
#include "coupled/random_instance.hpp"
#include "oracles.hpp"

using namespace coupled;
using namespace coupled::exact;
using coupled::testing::make_instance;
using coupled::testing::make_path;

namespace {

void check_solution(const Instance& inst, const Solution& s) {
  REQUIRE_NOTHROW(check_plan(inst, s.plan));
  CHECK(validate(inst, s.schedule).ok());
  CHECK(s.makespan == makespan(s.schedule));
  CHECK(s.makespan == seq(inst) - savings(inst, s.plan));
}

Time oracle(const Instance& inst) { return solve_oracle(inst).makespan; }

Instance random_of(gen::TopologyClass cls, std::size_t n, std::uint64_t seed, gen::RandomOptions options = {}) {
  return gen::random_instance(cls, n, {1, 27}, seed, options);
}

}  // namespace

TEST_SUITE("chain") {
  TEST_CASE("examples") {
    Instance fig = make_path({2, 8, 8});
    auto s = solve_chain(fig);
    CHECK(s.makespan == 38);
    CHECK(s.plan.pairs.count({1, 2}) == 1);
    check_solution(fig, s);
    CHECK(solve_chain(make_instance({5})).makespan == 15);
    auto triple = solve_chain(make_path({1, 9, 1}));
    CHECK(triple.makespan == 27);
    CHECK(triple.plan.parent.size() == 2);
  }

  TEST_CASE("several paths and isolated tasks") {
    Instance inst = make_instance({2, 8, 8, 4, 1, 3, 6}, {{0, 1}, {1, 2}, {4, 5}, {5, 6}});
    auto s = solve_chain(inst);
    check_solution(inst, s);
    CHECK(s.makespan == oracle(inst));
    CHECK(solve_chain(Instance{}).makespan == 0);
  }

  TEST_CASE("non-paths are rejected") {
    Instance star = make_instance({1, 3, 3, 3}, {{0, 1}, {0, 2}, {0, 3}});
    CHECK_THROWS_AS(solve_chain(star), TopologyError);
    Instance cycle = make_instance({1, 3, 9}, {{0, 1}, {1, 2}, {0, 2}});
    CHECK_THROWS_AS(solve_chain(cycle), TopologyError);
  }

  TEST_CASE("optimal against the oracle on random chains") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
      Instance inst = random_of(gen::TopologyClass::chain, 1 + seed % 12, seed);
      auto s = solve_chain(inst);
      check_solution(inst, s);
      CHECK(s.makespan == oracle(inst));
    }
  }

  TEST_CASE("matching savings agree with the doubled-graph perfect matching") {
    Rng rng(3);
    for (int round = 0; round < 150; ++round) {
      std::vector<Alpha> alphas;
      auto n = static_cast<std::size_t>(rng.uniform(1, 10));
      for (std::size_t i = 0; i < n; ++i) alphas.push_back(rng.uniform(1, 9));
      Instance inst = make_path(alphas);
      CHECK(2 * (seq(inst) - chain_matching_savings(inst)) == coupled::testing::h_graph_min_matching(alphas));
    }
  }
}

TEST_SUITE("star") {
  TEST_CASE("outgoing examples") {
    Instance a = make_instance({1, 3, 5}, {{0, 1}, {0, 2}});
    auto sa = solve_star_out(a);
    CHECK(sa.makespan == 24);
    CHECK(sa.plan.parent.at(0) == 1);
    check_solution(a, sa);

    Instance b = make_instance({4, 4, 4}, {{0, 1}, {0, 2}});
    auto sb = solve_star_out(b);
    CHECK(sb.makespan == 28);
    CHECK(sb.plan.pairs.size() == 1);

    Instance c = make_instance({2, 5}, {{0, 1}});
    CHECK(solve_star_out(c).makespan == 21);
  }

  TEST_CASE("hosting small satellites can beat keeping the center alone") {
    Instance inst = make_instance({4, 1, 5}, {{0, 1}, {0, 2}});
    auto s = solve_star_out(inst);
    CHECK(s.makespan == 15 + 3 + 12 - 3);
    CHECK(s.makespan == oracle(inst));
  }

  TEST_CASE("incoming examples") {
    Instance a = make_instance({9, 1, 2, 3}, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(solve_star_in_exact(a).makespan == 36);
    CHECK(solve_star_in_exact(make_instance({3, 1}, {{0, 1}})).makespan == 9);
    CHECK(solve_star_in_exact(make_instance({2, 1}, {{0, 1}})).makespan == 9);
  }

  TEST_CASE("wrong shapes are rejected") {
    Instance in = make_instance({9, 1, 2, 3}, {{0, 1}, {0, 2}, {0, 3}});
    CHECK_THROWS_AS(solve_star_out(in), TopologyError);
    Instance out = make_instance({1, 3, 5, 2}, {{0, 1}, {0, 2}, {0, 3}});
    CHECK_THROWS_AS(solve_star_in_exact(out), TopologyError);
    CHECK_THROWS_AS(solve_star_in_exact(make_path({1, 3, 9, 27})), TopologyError);
  }

  TEST_CASE("optimal against the oracle on random stars") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      std::size_t n = 4 + seed % 9;
      Instance in = random_of(gen::TopologyClass::star_in, n, seed);
      auto si = solve_star_in_exact(in);
      check_solution(in, si);
      CHECK(si.makespan == oracle(in));
      Instance out = random_of(gen::TopologyClass::star_out, n, seed);
      auto so = solve_star_out(out);
      check_solution(out, so);
      CHECK(so.makespan == oracle(out));
    }
  }
}

TEST_SUITE("bipartite") {
  TEST_CASE("examples") {
    Instance a = make_instance({1, 1, 6}, {{0, 2}, {1, 2}});
    CHECK(solve_bipartite_deg2(a).makespan == 18);
    Instance b = make_instance({1, 2, 3}, {{0, 2}, {1, 2}});
    CHECK(solve_bipartite_deg2(b).makespan == 15);
    Instance c = make_instance({2, 2, 6, 6}, {{0, 2}, {0, 3}, {1, 2}});
    auto sc = solve_bipartite_deg2(c);
    CHECK(sc.plan.parent.size() == 2);
    CHECK(sc.makespan == 36);
    check_solution(c, sc);
  }

  TEST_CASE("degree and shape preconditions") {
    Instance wide = make_instance({1, 1, 1, 9}, {{0, 3}, {1, 3}, {2, 3}});
    CHECK_THROWS_AS(solve_bipartite_deg2(wide), TopologyError);
    CHECK_THROWS_AS(solve_bipartite_deg2(make_path({1, 3, 9})), TopologyError);
    CHECK_THROWS_AS(solve_bipartite_deg2(make_path({4, 4})), TopologyError);
  }

  TEST_CASE("optimal against the oracle on degree-two instances") {
    gen::RandomOptions options;
    options.max_y_degree = 2;
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
      Instance inst = random_of(gen::TopologyClass::one_sbg, 5 + seed % 8, seed, options);
      auto s = solve_bipartite_deg2(inst);
      check_solution(inst, s);
      CHECK(s.makespan == oracle(inst));
    }
  }

  TEST_CASE("hungarian matching") {
    using W = std::vector<std::vector<std::optional<std::int64_t>>>;
    W w{{3, 2}, {3, std::nullopt}};
    CHECK(max_weight_matching(w) == std::vector<int>{1, 0});
    W rect{{std::nullopt, 5, 1}};
    CHECK(max_weight_matching(rect) == std::vector<int>{1});
    W tall{{4}, {7}, {std::nullopt}};
    CHECK(max_weight_matching(tall) == std::vector<int>{-1, 0, -1});
    CHECK(max_weight_matching(W{}).empty());
  }

  TEST_CASE("hungarian matching is maximum on random matrices") {
    Rng rng(9);
    for (int round = 0; round < 200; ++round) {
      auto rows = static_cast<std::size_t>(rng.uniform(1, 5));
      auto cols = static_cast<std::size_t>(rng.uniform(1, 5));
      std::vector<std::vector<std::optional<std::int64_t>>> w(rows, std::vector<std::optional<std::int64_t>>(cols));
      for (auto& row : w) {
        for (auto& cell : row) {
          if (rng.chance(2, 3)) cell = rng.uniform(1, 20);
        }
      }
      auto match = max_weight_matching(w);
      std::int64_t got = 0;
      std::vector<bool> used(cols, false);
      for (std::size_t r = 0; r < rows; ++r) {
        if (match[r] < 0) continue;
        auto c = static_cast<std::size_t>(match[r]);
        REQUIRE(w[r][c]);
        CHECK_FALSE(used[c]);
        used[c] = true;
        got += *w[r][c];
      }
      std::function<std::int64_t(std::size_t)> best = [&](std::size_t r) -> std::int64_t {
        if (r == rows) return 0;
        std::int64_t b = best(r + 1);
        for (std::size_t c = 0; c < cols; ++c) {
          if (!w[r][c] || used[c]) continue;
          used[c] = true;
          b = std::max(b, *w[r][c] + best(r + 1));
          used[c] = false;
        }
        return b;
      };
      std::fill(used.begin(), used.end(), false);
      CHECK(got == best(0));
    }
  }
}

TEST_SUITE("oracle") {
  TEST_CASE("examples") {
    CHECK(oracle(make_path({2, 8, 8})) == 38);
    CHECK(oracle(make_instance({4, 4})) == 24);
    CHECK(oracle(make_path({1, 3, 9})) == 30);
    CHECK(oracle(make_instance({1, 3, 9}, {{0, 1}, {1, 2}, {0, 2}})) == 27);
    CHECK(oracle(Instance{}) == 0);
  }

  TEST_CASE("plan is valid and realises the makespan") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      Instance inst = random_of(gen::TopologyClass::general, 3 + seed % 8, seed);
      auto r = solve_oracle(inst);
      REQUIRE_NOTHROW(check_plan(inst, r.plan));
      Schedule s = plan_to_schedule(inst, r.plan);
      CHECK(validate(inst, s).ok());
      CHECK(makespan(s) == r.makespan);
      CHECK(r.nodes > 0);
    }
  }

  TEST_CASE("pruning does not change the result") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      Instance inst = random_of(gen::TopologyClass::general, 3 + seed % 6, seed);
      OracleOptions full;
      full.prune = false;
      auto a = solve_oracle(inst);
      auto b = solve_oracle(inst, full);
      CHECK(a.makespan == b.makespan);
      CHECK(a.plan == b.plan);
      CHECK(a.nodes <= b.nodes);
    }
  }

  TEST_CASE("agrees with enumeration of every accepted plan") {
    Rng rng(21);
    for (int round = 0; round < 120; ++round) {
      std::vector<Alpha> alphas;
      auto n = static_cast<std::size_t>(rng.uniform(1, 7));
      for (std::size_t i = 0; i < n; ++i) alphas.push_back(rng.uniform(1, 4) * (rng.chance(1, 2) ? 1 : 3));
      std::vector<std::pair<TaskId, TaskId>> edges;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (rng.chance(3, 5)) edges.emplace_back(i, j);
        }
      }
      Instance inst = make_instance(alphas, edges);
      CHECK(oracle(inst) == coupled::testing::plan_enumeration_optimum(inst));
    }
  }

  TEST_CASE("agrees with a search over raw start times on tiny triangle-free instances") {
    Rng rng(8);
    for (int round = 0; round < 200; ++round) {
      auto n = static_cast<std::size_t>(rng.uniform(1, round < 120 ? 3 : 4));
      const Alpha hi = n <= 3 ? 9 : 3;
      std::vector<Alpha> alphas;
      for (std::size_t i = 0; i < n; ++i) alphas.push_back(rng.uniform(1, hi));
      std::vector<std::pair<TaskId, TaskId>> edges;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (rng.chance(2, 3)) edges.emplace_back(i, j);
        }
      }
      Instance inst = make_instance(alphas, edges);
      bool triangle = false;
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
          for (std::size_t c = b + 1; c < n; ++c) {
            triangle = triangle || (inst.adjacent(a, b) && inst.adjacent(b, c) && inst.adjacent(a, c));
          }
        }
      }
      if (triangle) continue;
      CAPTURE(round);
      CHECK(oracle(inst) == coupled::testing::geometric_optimum(inst));
    }
  }

  TEST_CASE("a pair nested inside a host is outside the plan model") {
    Instance inst = make_instance({2, 9, 2}, {{0, 1}, {0, 2}, {1, 2}});
    CHECK(coupled::testing::geometric_optimum(inst) == 27);
    CHECK(oracle(inst) == 33);
  }

  TEST_CASE("size limit") {
    std::vector<Alpha> alphas(15, 1);
    CHECK_THROWS_AS(solve_oracle(make_instance(alphas)), InstanceTooLarge);
    OracleOptions small;
    small.limit_n = 3;
    CHECK_THROWS_AS(solve_oracle(make_path({1, 2, 3, 4}), small), InstanceTooLarge);
  }
}
