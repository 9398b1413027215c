#include <doctest.h>

#include <set>

#include "build.hpp"
#include "coupled/approx.hpp"
#include "coupled/errors.hpp"
#include "coupled/exact.hpp"
#include "coupled/oracle.hpp"
#include "coupled/random_instance.hpp"
#include "coupled/topology.hpp"
#include "oracles.hpp"

using namespace coupled;
using namespace coupled::approx;
using coupled::testing::make_instance;
using coupled::testing::make_path;

namespace {

Time opt(const Instance& inst) { return exact::solve_oracle(inst).makespan; }

Time seq_ids(const Instance& inst, const std::vector<TaskId>& ids) {
  Time total = 0;
  for (TaskId id : ids) total += 3 * inst.alpha(inst.index(id));
  return total;
}

void check_outcome(const Instance& inst, const ApproxOutcome& out) {
  REQUIRE_NOTHROW(check_plan(inst, out.plan));
  CHECK(validate(inst, out.schedule).ok());
  CHECK(out.makespan == makespan(out.schedule));
  CHECK(out.makespan >= out.lower_bound);
  CHECK(out.makespan >= independent_set_bound(inst));
}

StagePartition layers_of(const Instance& inst, int count) {
  auto p = gen::stage_partition(inst, count);
  REQUIRE(p);
  return *p;
}

}  // namespace

TEST_SUITE("sequential") {
  TEST_CASE("examples") {
    auto a = sequential(make_instance({2, 8, 8}));
    CHECK(a.makespan == 54);
    CHECK(a.certified_ratio == Rational(3, 2));
    CHECK(sequential(Instance{}).makespan == 0);
    Instance one = make_instance({7});
    auto s = sequential(one);
    CHECK(s.makespan == 21);
    CHECK(Rational(s.makespan, opt(one)) == Rational(1));
  }
}

TEST_SUITE("star_fptas") {
  TEST_CASE("examples") {
    Instance a = make_instance({9, 1, 2, 3}, {{0, 1}, {0, 2}, {0, 3}});
    auto out = star_fptas(a, Rational(1, 2));
    CHECK(Rational(out.makespan) <= Rational(5, 4) * Rational(36));
    CHECK(out.certified_ratio == Rational(5, 4));
    check_outcome(a, out);
    Instance b = make_instance({3, 1}, {{0, 1}});
    CHECK(star_fptas(b, Rational(1, 10)).makespan == 9);
    Instance c = make_instance({5, 4, 3, 2}, {{0, 1}, {0, 2}, {0, 3}});
    auto none = star_fptas(c, Rational(1, 4));
    CHECK(none.makespan == seq(c));
    CHECK(none.certified_ratio == Rational(1));
  }

  TEST_CASE("errors") {
    Instance a = make_instance({9, 1, 2, 3}, {{0, 1}, {0, 2}, {0, 3}});
    CHECK_THROWS_AS(star_fptas(a, Rational(0)), ParameterError);
    CHECK_THROWS_AS(star_fptas(a, Rational(3, 2)), ParameterError);
    CHECK_THROWS_AS(star_fptas(make_path({1, 3, 9, 27}), Rational(1, 2)), TopologyError);
    Instance out = make_instance({1, 3, 5, 2}, {{0, 1}, {0, 2}, {0, 3}});
    CHECK_THROWS_AS(star_fptas(out, Rational(1, 2)), TopologyError);
  }

  TEST_CASE("within 1 + epsilon/2 of the exact star") {
    const Rational eps[] = {Rational(1, 10), Rational(1, 4), Rational(1, 2)};
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      Instance inst = gen::random_instance(gen::TopologyClass::star_in, 4 + seed % 20, {1, 400}, seed);
      Time exact_makespan = exact::solve_star_in_exact(inst).makespan;
      for (const Rational& e : eps) {
        auto out = star_fptas(inst, e);
        check_outcome(inst, out);
        CHECK(Rational(out.makespan) <= (Rational(1) + e / Rational(2)) * Rational(exact_makespan));
      }
    }
  }
}

TEST_SUITE("one_stage") {
  TEST_CASE("examples") {
    Instance a = make_instance({1, 1, 1, 3}, {{0, 3}, {1, 3}, {2, 3}});
    auto out = one_stage(a, layers_of(a, 2));
    CHECK(out.makespan == 15);
    CHECK(out.makespan == opt(a));
    CHECK(out.certified_ratio == Rational(7, 6));
    Instance b = make_instance({4, 4});
    StagePartition only_y{{}, {0, 1}, {}};
    CHECK(one_stage(b, only_y).makespan == 24);
    Instance c = make_instance({1, 1, 6}, {{0, 2}, {1, 2}});
    CHECK(one_stage(c, layers_of(c, 2)).makespan == 18);
  }

  TEST_CASE("partition must match the graph") {
    Instance a = make_instance({1, 3}, {{0, 1}});
    CHECK_THROWS_AS(one_stage(a, StagePartition{{1}, {0}, {}}), TopologyError);
    CHECK_THROWS_AS(one_stage(a, StagePartition{{0}, {}, {}}), TopologyError);
    CHECK_THROWS_AS(one_stage(a, StagePartition{{0}, {1}, {7}}), TopologyError);
    Instance path = make_path({1, 3, 9});
    CHECK_THROWS_AS(one_stage(path, StagePartition{{0}, {1, 2}, {}}), TopologyError);
  }

  TEST_CASE("cost identity and 7/6 bound on random 1-stage instances") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
      auto cls = seed % 3 == 0 ? gen::TopologyClass::complete_one_sbg : gen::TopologyClass::one_sbg;
      Instance inst = gen::random_instance(cls, 5 + seed % 8, {1, 27}, seed);
      auto layers = layers_of(inst, 2);
      auto out = one_stage(inst, layers);
      check_outcome(inst, out);
      std::vector<TaskId> packed;
      for (auto [child, host] : out.plan.parent) packed.push_back(child);
      CHECK(out.makespan == seq_ids(inst, layers.v1) + seq_ids(inst, layers.v0) - seq_ids(inst, packed));
      CHECK(Rational(out.makespan) <= Rational(7, 6) * Rational(opt(inst)));
    }
  }
}

TEST_SUITE("two_stage") {
  TEST_CASE("examples") {
    Instance path = make_path({1, 3, 9});
    auto r = two_stage(path, layers_of(path, 3));
    CHECK(r.outcome.makespan == 30);
    CHECK(r.conflict == std::vector<TaskId>{0});
    CHECK(opt(path) == 30);
    CHECK(r.outcome.certified_ratio == Rational(13, 9));

    Instance upper = make_instance({2, 6}, {{0, 1}});
    CHECK(two_stage(upper, StagePartition{{}, {0}, {1}}).outcome.makespan == 18);
    Instance lower = make_instance({1, 3}, {{0, 1}});
    CHECK(two_stage(lower, StagePartition{{0}, {1}, {}}).outcome.makespan == 9);
  }

  TEST_CASE("optional conflict repacking") {
    Instance inst = make_instance({1, 3, 9, 3}, {{0, 1}, {1, 2}, {0, 3}});
    StagePartition layers{{0}, {1, 3}, {2}};
    auto plain = two_stage(inst, layers);
    CHECK(plain.conflict == std::vector<TaskId>{0});
    TwoStageOptions options;
    options.repack_conflicts = true;
    auto repacked = two_stage(inst, layers, options);
    CHECK(repacked.conflict.empty());
    CHECK(repacked.outcome.makespan == plain.outcome.makespan - 3);
    check_outcome(inst, repacked.outcome);
  }

  TEST_CASE("cost decomposition, conflict bound and 13/9 on random 2-stage instances") {
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
      Instance inst = gen::random_instance(gen::TopologyClass::two_sbg, 5 + seed % 8, {1, 27}, seed);
      auto layers = layers_of(inst, 3);
      auto r = two_stage(inst, layers);
      check_outcome(inst, r.outcome);

      std::set<TaskId> v1p(r.v1_packed.begin(), r.v1_packed.end());
      std::set<TaskId> v0p(r.v0_packed.begin(), r.v0_packed.end());
      std::vector<TaskId> v1a;
      std::vector<TaskId> v0a;
      for (TaskId id : layers.v1) {
        if (!v1p.count(id)) v1a.push_back(id);
      }
      for (TaskId id : layers.v0) {
        if (!v0p.count(id)) v0a.push_back(id);
      }
      const Time decomposition =
          seq_ids(inst, layers.v2) + seq_ids(inst, v1a) + seq_ids(inst, v0a) + seq_ids(inst, r.conflict);
      CHECK(r.outcome.makespan == decomposition);
      CHECK(3 * seq_ids(inst, r.conflict) <= seq_ids(inst, r.v1_packed));
      CHECK(Rational(r.outcome.makespan) <= Rational(13, 9) * Rational(opt(inst)));
    }
  }
}

TEST_SUITE("auto_solve") {
  TEST_CASE("examples") {
    auto chain = auto_solve(make_path({2, 8, 8}));
    CHECK(chain.solver == "chain");
    CHECK(chain.makespan == 38);
    CHECK(chain.certified_ratio == Rational(1));

    Instance star = make_instance({1, 1, 1, 3}, {{0, 3}, {1, 3}, {2, 3}});
    auto s = auto_solve(star);
    CHECK(s.solver == "star_in");
    CHECK(s.makespan == 15);

    Instance disconnected = make_instance({1, 3, 9, 4, 4}, {{0, 1}, {1, 2}, {0, 2}, {3, 4}});
    auto g = auto_solve(disconnected);
    CHECK(g.solver == "sequential");
    CHECK(g.certified_ratio == Rational(3, 2));
  }

  TEST_CASE("dispatch by class") {
    gen::RandomOptions deg2;
    deg2.max_y_degree = 2;
    CHECK(auto_solve(gen::random_instance(gen::TopologyClass::star_out, 6, {1, 27}, 1)).solver == "star_out");
    CHECK(auto_solve(gen::random_instance(gen::TopologyClass::one_sbg, 8, {1, 27}, 1, deg2)).solver ==
          "bipartite_deg2");
    CHECK(auto_solve(gen::random_instance(gen::TopologyClass::two_sbg, 9, {1, 27}, 3)).solver == "two_stage");

    Instance wide = make_instance({1, 1, 1, 9, 9}, {{0, 3}, {1, 3}, {2, 3}, {0, 4}});
    CHECK(auto_solve(wide).solver == "one_stage");

    Instance big = make_instance({3'000'000, 1, 2}, {{0, 1}, {0, 2}});
    AutoOptions options;
    options.fptas_threshold = 1'000;
    CHECK(auto_solve(make_instance({3000, 1, 2, 3}, {{0, 1}, {0, 2}, {0, 3}}), options).solver == "star_fptas");
    CHECK(auto_solve(big).solver == "chain");
  }

  TEST_CASE("every outcome respects its certificate and lower bound") {
    const gen::TopologyClass classes[] = {gen::TopologyClass::chain,   gen::TopologyClass::star_in,
                                          gen::TopologyClass::star_out, gen::TopologyClass::one_sbg,
                                          gen::TopologyClass::complete_one_sbg, gen::TopologyClass::two_sbg,
                                          gen::TopologyClass::general};
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      for (auto cls : classes) {
        Instance inst = gen::random_instance(cls, 5 + seed % 7, {1, 27}, seed);
        auto out = auto_solve(inst);
        check_outcome(inst, out);
        CHECK(Rational(out.makespan) <= out.certified_ratio * Rational(opt(inst)));
      }
    }
  }
}
