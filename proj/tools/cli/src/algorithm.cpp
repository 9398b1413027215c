#include "coupled/cli/algorithm.hpp"

#include <charconv>
#include <cstdlib>
#include <string>

#include "coupled/errors.hpp"
#include "coupled/exact.hpp"
#include "coupled/oracle.hpp"
#include "coupled/topology.hpp"

namespace coupled::cli {

namespace {

approx::ApproxOutcome exact_outcome(std::string solver, exact::Solution solution) {
  approx::ApproxOutcome out;
  out.solver = std::move(solver);
  out.plan = std::move(solution.plan);
  out.schedule = std::move(solution.schedule);
  out.makespan = solution.makespan;
  out.lower_bound = solution.makespan;
  return out;
}

approx::StagePartition layers(const Instance& instance, int count, const char* who) {
  auto partition = gen::stage_partition(instance, count);
  if (!partition) {
    throw TopologyError(std::string(who) + ": the graph has no " + std::to_string(count - 1) +
                        "-stage bipartite orientation");
  }
  return *partition;
}

}  // namespace

const std::vector<std::string>& algorithm_names() {
  static const std::vector<std::string> names{"auto",      "chain",      "star",       "bipartite-deg2", "one-stage",
                                              "two-stage", "fptas",      "sequential", "oracle"};
  return names;
}

approx::ApproxOutcome run_algorithm(std::string_view name, const Instance& instance, const AlgorithmOptions& options) {
  if (name == "auto") {
    approx::AutoOptions a;
    a.epsilon = options.epsilon;
    return approx::auto_solve(instance, a);
  }
  if (name == "chain") return exact_outcome("chain", exact::solve_chain(instance));
  if (name == "star") {
    const bool lone_edge = instance.size() == 2 && instance.edges().size() == 1;
    const bool incoming = lone_edge ? instance.alpha(0) != instance.alpha(1)
                                    : gen::classify(instance).cls == gen::TopologyClass::star_in;
    if (incoming) {
      return exact_outcome("star_in", exact::solve_star_in_exact(instance));
    }
    return exact_outcome("star_out", exact::solve_star_out(instance));
  }
  if (name == "bipartite-deg2") return exact_outcome("bipartite_deg2", exact::solve_bipartite_deg2(instance));
  if (name == "one-stage") {
    auto partition = layers(instance, 2, "one_stage");
    return approx::one_stage(instance, partition);
  }
  if (name == "two-stage") return approx::two_stage(instance, layers(instance, 3, "two_stage")).outcome;
  if (name == "fptas") return approx::star_fptas(instance, options.epsilon);
  if (name == "sequential") return approx::sequential(instance);
  if (name == "oracle") {
    exact::OracleOptions o;
    o.limit_n = options.oracle_limit;
    auto result = exact::solve_oracle(instance, o);
    approx::ApproxOutcome out;
    out.solver = "oracle";
    out.schedule = plan_to_schedule(instance, result.plan);
    out.plan = std::move(result.plan);
    out.makespan = result.makespan;
    out.lower_bound = result.makespan;
    return out;
  }
  throw ParameterError("unknown algorithm '" + std::string(name) + "'");
}

std::size_t oracle_limit_from_env() {
  const char* value = std::getenv("SCHED_ORACLE_LIMIT");
  if (value == nullptr) return exact::default_oracle_limit;
  std::string_view text(value);
  std::size_t limit = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), limit);
  if (ec != std::errc{} || ptr != text.data() + text.size() || limit == 0) return exact::default_oracle_limit;
  return limit;
}

}  // namespace coupled::cli
