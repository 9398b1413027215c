#include "coupled/cli/bench.hpp"

#include <atomic>
#include <chrono>
#include <ostream>
#include <sstream>
#include <thread>

#include "coupled/cli/algorithm.hpp"
#include "coupled/errors.hpp"
#include "coupled/oracle.hpp"
#include "coupled/random_instance.hpp"

namespace coupled::cli {

namespace {

struct Job {
  gen::TopologyClass cls;
  std::size_t n;
  std::uint64_t seed;
};

struct JobResult {
  std::vector<BenchRow> rows;
  std::string log;
};

JobResult run_job(const BenchConfig& config, const Job& job) {
  JobResult result;
  const std::string name =
      std::string(gen::to_string(job.cls)) + "-n" + std::to_string(job.n) + "-s" + std::to_string(job.seed);
  gen::RandomOptions options;
  options.max_y_degree = config.max_y_degree;
  Instance instance;
  try {
    instance = gen::random_instance(job.cls, job.n, gen::AlphaRange{}, job.seed, options);
  } catch (const ParameterError& e) {
    result.log += "skip " + name + ": " + e.what() + "\n";
    return result;
  }

  std::optional<Time> opt;
  if (job.n <= config.oracle_limit) {
    exact::OracleOptions o;
    o.limit_n = config.oracle_limit;
    opt = exact::solve_oracle(instance, o).makespan;
  }

  AlgorithmOptions algo;
  algo.epsilon = config.epsilon;
  algo.oracle_limit = config.oracle_limit;
  for (const std::string& algorithm : config.algorithms) {
    BenchRow row;
    row.instance = name;
    row.cls = std::string(gen::to_string(job.cls));
    row.n = job.n;
    const auto start = std::chrono::steady_clock::now();
    approx::ApproxOutcome outcome;
    try {
      outcome = run_algorithm(algorithm, instance, algo);
    } catch (const Error& e) {
      result.log += "skip " + name + " " + algorithm + ": " + e.what() + "\n";
      continue;
    }
    const auto stop = std::chrono::steady_clock::now();
    row.solver = outcome.solver;
    row.makespan = outcome.makespan;
    row.opt = opt;
    if (opt) row.ratio = *opt == 0 ? Rational(1) : Rational(outcome.makespan, *opt);
    row.bound = outcome.certified_ratio;
    if (config.timing) {
      row.micros = std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count();
    }
    result.rows.push_back(std::move(row));
  }
  return result;
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchConfig& config, std::ostream& log) {
  std::vector<Job> jobs;
  for (auto cls : config.classes) {
    for (std::size_t n : config.sizes) {
      for (std::uint64_t seed : config.seeds) jobs.push_back({cls, n, seed});
    }
  }
  std::vector<JobResult> results(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) results[i] = run_job(config, jobs[i]);
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(config.threads, static_cast<unsigned>(jobs.size())));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  std::vector<BenchRow> rows;
  for (auto& r : results) {
    log << r.log;
    for (auto& row : r.rows) rows.push_back(std::move(row));
  }
  return rows;
}

std::string format_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << bench_header << '\n';
  for (const BenchRow& r : rows) {
    out << r.instance << ',' << r.cls << ',' << r.n << ',' << r.solver << ',' << r.makespan << ',';
    if (r.opt) out << *r.opt;
    out << ',';
    if (r.ratio) out << r.ratio->to_string();
    out << ',' << r.bound.to_string() << ',';
    if (r.micros) out << *r.micros;
    out << '\n';
  }
  return out.str();
}

}  // namespace coupled::cli
