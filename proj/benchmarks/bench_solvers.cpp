#include <benchmark/benchmark.h>

#include <vector>

#include "coupled/approx.hpp"
#include "coupled/exact.hpp"
#include "coupled/oracle.hpp"
#include "coupled/packing.hpp"
#include "coupled/random.hpp"
#include "coupled/random_instance.hpp"
#include "coupled/topology.hpp"

using namespace coupled;
using gen::TopologyClass;

namespace {

std::vector<packing::Item> random_items(std::size_t n, std::int64_t max_weight, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<packing::Item> items;
  for (std::size_t i = 0; i < n; ++i) items.push_back({static_cast<std::int64_t>(i), rng.uniform(1, max_weight)});
  return items;
}

void BM_SspExact(benchmark::State& state) {
  const auto items = random_items(static_cast<std::size_t>(state.range(0)), 10'000, 1);
  const std::int64_t capacity = 5'000 * state.range(0) / 2;
  for (auto _ : state) benchmark::DoNotOptimize(packing::ssp_exact(items, capacity).sum);
}
BENCHMARK(BM_SspExact)->RangeMultiplier(4)->Range(8, 512);

void BM_SspFptas(benchmark::State& state) {
  const auto items = random_items(static_cast<std::size_t>(state.range(0)), 1'000'000'000, 2);
  const std::int64_t capacity = 500'000'000 * state.range(0) / 2;
  for (auto _ : state) benchmark::DoNotOptimize(packing::ssp_fptas(items, capacity, Rational(1, 10)).sum);
}
BENCHMARK(BM_SspFptas)->RangeMultiplier(4)->Range(8, 512);

void BM_FillBins(benchmark::State& state) {
  const auto items = random_items(static_cast<std::size_t>(state.range(0)), 100, 3);
  std::vector<packing::BinSpec> bins;
  for (std::int64_t b = 0; b < 8; ++b) bins.push_back({b, 40 + 10 * b, std::nullopt});
  for (auto _ : state) benchmark::DoNotOptimize(packing::fill_bins(items, bins).packed_weight);
}
BENCHMARK(BM_FillBins)->RangeMultiplier(4)->Range(8, 512);

void BM_Chain(benchmark::State& state) {
  const Instance inst = gen::random_instance(TopologyClass::chain, static_cast<std::size_t>(state.range(0)), {1, 27}, 4);
  for (auto _ : state) benchmark::DoNotOptimize(exact::solve_chain(inst).makespan);
}
BENCHMARK(BM_Chain)->RangeMultiplier(8)->Range(8, 4096);

void BM_StarInExact(benchmark::State& state) {
  const Instance inst =
      gen::random_instance(TopologyClass::star_in, static_cast<std::size_t>(state.range(0)), {1, 1000}, 5);
  for (auto _ : state) benchmark::DoNotOptimize(exact::solve_star_in_exact(inst).makespan);
}
BENCHMARK(BM_StarInExact)->RangeMultiplier(4)->Range(8, 512);

void BM_BipartiteDeg2(benchmark::State& state) {
  gen::RandomOptions options;
  options.max_y_degree = 2;
  const Instance inst =
      gen::random_instance(TopologyClass::one_sbg, static_cast<std::size_t>(state.range(0)), {1, 27}, 6, options);
  for (auto _ : state) benchmark::DoNotOptimize(exact::solve_bipartite_deg2(inst).makespan);
}
BENCHMARK(BM_BipartiteDeg2)->RangeMultiplier(2)->Range(8, 128);

void BM_OneStage(benchmark::State& state) {
  const Instance inst =
      gen::random_instance(TopologyClass::one_sbg, static_cast<std::size_t>(state.range(0)), {1, 27}, 7);
  const auto layers = *gen::stage_partition(inst, 2);
  for (auto _ : state) benchmark::DoNotOptimize(approx::one_stage(inst, layers).makespan);
}
BENCHMARK(BM_OneStage)->RangeMultiplier(2)->Range(8, 128);

void BM_TwoStage(benchmark::State& state) {
  const Instance inst =
      gen::random_instance(TopologyClass::two_sbg, static_cast<std::size_t>(state.range(0)), {1, 27}, 8);
  const auto layers = *gen::stage_partition(inst, 3);
  for (auto _ : state) benchmark::DoNotOptimize(approx::two_stage(inst, layers).outcome.makespan);
}
BENCHMARK(BM_TwoStage)->RangeMultiplier(2)->Range(8, 128);

void BM_Oracle(benchmark::State& state) {
  const Instance inst =
      gen::random_instance(TopologyClass::general, static_cast<std::size_t>(state.range(0)), {1, 27}, 9);
  for (auto _ : state) benchmark::DoNotOptimize(exact::solve_oracle(inst).makespan);
}
BENCHMARK(BM_Oracle)->DenseRange(6, 12, 2);

}  // namespace

BENCHMARK_MAIN();
