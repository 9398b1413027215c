#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "coupled/rational.hpp"
#include "coupled/topology.hpp"

namespace coupled::cli {

struct BenchConfig {
  std::vector<gen::TopologyClass> classes;
  std::vector<std::size_t> sizes;
  std::vector<std::uint64_t> seeds;
  std::vector<std::string> algorithms{"auto"};
  std::size_t oracle_limit = 14;
  std::optional<std::size_t> max_y_degree;
  Rational epsilon{1, 10};
  unsigned threads = 1;
  bool timing = true;
};

struct BenchRow {
  std::string instance;
  std::string cls;
  std::size_t n = 0;
  std::string solver;
  Time makespan = 0;
  std::optional<Time> opt;
  std::optional<Rational> ratio;
  Rational bound{1};
  std::optional<std::int64_t> micros;
};

inline constexpr const char* bench_header = "instance,class,n,solver,makespan,opt,ratio,bound,micros";

/// Rows ordered by class, size, seed and algorithm as listed in the config,
/// whatever the number of threads. Combinations that cannot be generated or
/// whose algorithm does not apply are skipped and reported on `log`.
std::vector<BenchRow> run_bench(const BenchConfig& config, std::ostream& log);

std::string format_csv(const std::vector<BenchRow>& rows);

}  // namespace coupled::cli
