#include "coupled/cli/commands.hpp"

#include <algorithm>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coupled/cli/algorithm.hpp"
#include "coupled/cli/bench.hpp"
#include "coupled/cli/io.hpp"
#include "coupled/formula.hpp"
#include "coupled/random_instance.hpp"
#include "coupled/reductions.hpp"

namespace coupled::cli {

namespace {

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  for (std::string part; std::getline(in, part, ',');) {
    if (!part.empty()) parts.push_back(part);
  }
  return parts;
}

std::int64_t to_integer(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  std::int64_t value = 0;
  try {
    value = std::stoll(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw ParameterError(what + ": '" + text + "' is not an integer");
  return value;
}

// "1,4,7" or "6-12" or a mix of both.
std::vector<std::int64_t> integer_list(const std::string& text, const std::string& what) {
  std::vector<std::int64_t> values;
  for (const std::string& part : split_commas(text)) {
    auto dash = part.find('-', 1);
    if (dash == std::string::npos) {
      values.push_back(to_integer(part, what));
      continue;
    }
    std::int64_t lo = to_integer(part.substr(0, dash), what);
    std::int64_t hi = to_integer(part.substr(dash + 1), what);
    if (hi < lo) throw ParameterError(what + ": empty range '" + part + "'");
    for (std::int64_t v = lo; v <= hi; ++v) values.push_back(v);
  }
  if (values.empty()) throw ParameterError(what + ": empty list");
  return values;
}

template <typename T>
std::vector<T> non_negative_list(const std::string& text, const std::string& what) {
  std::vector<T> out;
  for (std::int64_t v : integer_list(text, what)) {
    if (v < 0) throw ParameterError(what + ": negative value " + std::to_string(v));
    out.push_back(static_cast<T>(v));
  }
  return out;
}

gen::TopologyClass class_from(const std::string& text) {
  auto cls = gen::parse_topology_class(text);
  if (!cls) throw ParameterError("unknown class '" + text + "'");
  return *cls;
}

Instance load_instance(const std::string& path) { return parse_instance(read_file(path)); }

gen::Formula131 load_formula(const std::string& path) {
  try {
    return gen::parse_formula(read_file(path));
  } catch (const FormulaError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::vector<bool> parse_assignment(const std::string& bits, int n) {
  std::vector<bool> out;
  for (char c : bits) {
    if (c == ',') continue;
    if (c != '0' && c != '1') throw ParameterError("assignment must be a string of 0 and 1");
    out.push_back(c == '1');
  }
  if (out.size() != static_cast<std::size_t>(n)) {
    throw ParameterError("assignment has " + std::to_string(out.size()) + " values for " + std::to_string(n) +
                         " variables");
  }
  return out;
}

std::string bits(const std::vector<bool>& values) {
  std::string out;
  for (bool b : values) out += b ? '1' : '0';
  return out;
}

struct SolveArgs {
  std::string input;
  std::string algorithm = "auto";
  std::string epsilon = "1/10";
  std::string output;
};

struct ValidateArgs {
  std::string instance;
  std::string schedule;
};

struct SspArgs {
  std::string values;
  std::int64_t v = 0;
  std::string output;
};

struct SatArgs {
  std::string formula;
  bool dummies = false;
  std::string assignment;
  std::string schedule_output;
  std::string output;
};

struct FormulaArgs {
  int n = 6;
  std::uint64_t seed = 1;
  std::string output;
};

struct RandomArgs {
  std::string cls;
  std::size_t n = 8;
  std::uint64_t seed = 1;
  Alpha alpha_min = 1;
  Alpha alpha_max = 27;
  bool distinct = false;
  std::size_t max_y_degree = 0;
  int edge_percent = 50;
  std::string output;
};

struct BenchArgs {
  std::string classes = "chain,star_in,star_out,one_sbg,two_sbg";
  std::string sizes = "6-10";
  std::string seeds = "1-5";
  std::string algorithms = "auto";
  std::size_t oracle_limit = 0;
  std::size_t max_y_degree = 0;
  std::string epsilon = "1/10";
  unsigned threads = 1;
  bool no_timing = false;
  std::string output;
};

int cmd_solve(const SolveArgs& args, std::ostream& out) {
  Instance instance = load_instance(args.input);
  AlgorithmOptions options;
  options.epsilon = Rational::parse(args.epsilon);
  options.oracle_limit = oracle_limit_from_env();
  auto outcome = run_algorithm(args.algorithm, instance, options);
  ScheduleFile file{outcome.schedule.starts(), outcome.makespan, outcome.solver, outcome.certified_ratio.to_string()};
  write_output(args.output, format_schedule(file), out);
  return exit_ok;
}

int cmd_validate(const ValidateArgs& args, std::ostream& out) {
  Instance instance = load_instance(args.instance);
  ScheduleFile file = parse_schedule(read_file(args.schedule));
  Schedule schedule;
  try {
    schedule = schedule_from_starts(instance, file.starts);
  } catch (const InvalidInstance& e) {
    throw ParseError(std::string("schedule: ") + e.what());
  }
  auto report = validate(instance, schedule);
  for (const auto& v : report.violations) out << v.describe() << '\n';
  if (!report.ok()) return exit_invalid;
  out << "valid, makespan " << makespan(schedule) << '\n';
  return exit_ok;
}

int cmd_ssp(const SspArgs& args, std::ostream& out, std::ostream& err) {
  auto values = integer_list(args.values, "--values");
  auto star = gen::ssp_to_star(values, args.v);
  write_output(args.output, format_instance(star.instance), out);
  err << "target " << star.target << '\n';
  return exit_ok;
}

int cmd_sat(const SatArgs& args, std::ostream& out, std::ostream& err) {
  auto formula = load_formula(args.formula);
  auto reduction = gen::sat_to_bipartite(formula, args.dummies);
  std::string schedule_text;
  if (!args.assignment.empty()) {
    auto assignment = parse_assignment(args.assignment, formula.n);
    Schedule schedule;
    try {
      schedule = gen::assignment_to_schedule(formula, assignment, reduction);
    } catch (const FormulaError& e) {
      throw ParameterError(e.what());
    }
    ScheduleFile file{schedule.starts(), makespan(schedule), "reduction", "1"};
    schedule_text = format_schedule(file);
  } else if (!args.schedule_output.empty()) {
    throw ParameterError("--schedule-out needs --assignment");
  }
  write_output(args.output, format_instance(reduction.instance), out);
  if (!schedule_text.empty()) write_output(args.schedule_output, schedule_text, out);
  err << "target " << reduction.target << " (" << reduction.instance.size() << " tasks; 54 x tasks reading "
      << reduction.target_task_count_reading << ")\n";
  return exit_ok;
}

int cmd_formula(const FormulaArgs& args, std::ostream& out, std::ostream& err) {
  auto planted = gen::random_formula(args.n, args.seed);
  write_output(args.output, gen::format_formula(planted.formula), out);
  err << "assignment " << bits(planted.assignment) << '\n';
  return exit_ok;
}

int cmd_random(const RandomArgs& args, std::ostream& out) {
  gen::RandomOptions options;
  options.distinct_alpha = args.distinct;
  options.edge_percent = args.edge_percent;
  if (args.max_y_degree > 0) options.max_y_degree = args.max_y_degree;
  auto instance =
      gen::random_instance(class_from(args.cls), args.n, {args.alpha_min, args.alpha_max}, args.seed, options);
  write_output(args.output, format_instance(instance), out);
  return exit_ok;
}

int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
  BenchConfig config;
  for (const auto& c : split_commas(args.classes)) config.classes.push_back(class_from(c));
  config.sizes = non_negative_list<std::size_t>(args.sizes, "--sizes");
  config.seeds = non_negative_list<std::uint64_t>(args.seeds, "--seeds");
  config.algorithms = split_commas(args.algorithms);
  for (const auto& a : config.algorithms) {
    if (std::find(algorithm_names().begin(), algorithm_names().end(), a) == algorithm_names().end()) {
      throw ParameterError("unknown algorithm '" + a + "'");
    }
  }
  config.oracle_limit = args.oracle_limit > 0 ? args.oracle_limit : oracle_limit_from_env();
  if (args.max_y_degree > 0) config.max_y_degree = args.max_y_degree;
  config.epsilon = Rational::parse(args.epsilon);
  config.threads = args.threads;
  config.timing = !args.no_timing;
  auto rows = run_bench(config, err);
  write_output(args.output, format_csv(rows), out);
  return exit_ok;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stretched coupled-task scheduling: solve, validate, generate and benchmark"};
  app.name("coupled-sched");
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Schedule an instance file");
  solve_cmd->add_option("input", solve.input, "Instance JSON file")->required();
  solve_cmd->add_option("--algorithm,-a", solve.algorithm, "Algorithm to run")
      ->check(CLI::IsMember(algorithm_names()))
      ->capture_default_str();
  solve_cmd->add_option("--epsilon", solve.epsilon, "FPTAS accuracy, e.g. 0.1 or 1/4")->capture_default_str();
  solve_cmd->add_option("--output,-o", solve.output, "Schedule JSON file (default: stdout)");

  ValidateArgs check;
  auto* validate_cmd = app.add_subcommand("validate", "Check a schedule against an instance");
  validate_cmd->add_option("instance", check.instance, "Instance JSON file")->required();
  validate_cmd->add_option("schedule", check.schedule, "Schedule JSON file")->required();

  auto* generate_cmd = app.add_subcommand("generate", "Produce instances and formulas");
  generate_cmd->require_subcommand(1);

  SspArgs ssp;
  auto* ssp_cmd = generate_cmd->add_subcommand("ssp-star", "Star instance from a subset-sum instance");
  ssp_cmd->add_option("--values", ssp.values, "Comma separated positive values")->required();
  ssp_cmd->add_option("--v", ssp.v, "Subset-sum target")->required();
  ssp_cmd->add_option("--output,-o", ssp.output, "Instance JSON file (default: stdout)");

  SatArgs sat;
  auto* sat_cmd = generate_cmd->add_subcommand("sat", "Bipartite instance from a one-in-three formula");
  sat_cmd->add_option("--formula", sat.formula, "Formula text file")->required();
  sat_cmd->add_flag("--dummies", sat.dummies, "Add one unit dummy task per clause");
  sat_cmd->add_option("--assignment", sat.assignment, "Truth values as a 0/1 string, x0 first");
  sat_cmd->add_option("--schedule-out", sat.schedule_output, "Write the assignment's schedule here");
  sat_cmd->add_option("--output,-o", sat.output, "Instance JSON file (default: stdout)");

  FormulaArgs formula;
  auto* formula_cmd = generate_cmd->add_subcommand("formula", "Random satisfiable one-in-three formula");
  formula_cmd->add_option("--n", formula.n, "Number of variables (multiple of 3, at least 6)")->capture_default_str();
  formula_cmd->add_option("--seed", formula.seed, "Random seed")->capture_default_str();
  formula_cmd->add_option("--output,-o", formula.output, "Formula file (default: stdout)");

  RandomArgs random;
  auto* random_cmd = generate_cmd->add_subcommand("random", "Random instance of a topology class");
  random_cmd->add_option("--class", random.cls, "chain, star_in, star_out, one_sbg, complete_one_sbg, two_sbg, general")
      ->required();
  random_cmd->add_option("--n", random.n, "Number of tasks")->capture_default_str();
  random_cmd->add_option("--seed", random.seed, "Random seed")->capture_default_str();
  random_cmd->add_option("--alpha-min", random.alpha_min, "Smallest stretch factor")->capture_default_str();
  random_cmd->add_option("--alpha-max", random.alpha_max, "Largest stretch factor")->capture_default_str();
  random_cmd->add_flag("--distinct", random.distinct, "Make all stretch factors distinct");
  random_cmd->add_option("--max-y-degree", random.max_y_degree, "Degree cap for Y-tasks of 1-stage classes");
  random_cmd->add_option("--edge-percent", random.edge_percent, "Edge probability in percent")->capture_default_str();
  random_cmd->add_option("--output,-o", random.output, "Instance JSON file (default: stdout)");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Ratio table over random instances as CSV");
  bench_cmd->add_option("--classes", bench.classes, "Comma separated topology classes")->capture_default_str();
  bench_cmd->add_option("--sizes", bench.sizes, "Task counts, e.g. 6-12 or 6,8,10")->capture_default_str();
  bench_cmd->add_option("--seeds", bench.seeds, "Seeds, e.g. 1-20")->capture_default_str();
  bench_cmd->add_option("--algorithms", bench.algorithms, "Comma separated algorithms")->capture_default_str();
  bench_cmd->add_option("--oracle-limit", bench.oracle_limit, "Largest n solved by the oracle (default 14)");
  bench_cmd->add_option("--max-y-degree", bench.max_y_degree, "Degree cap for Y-tasks of 1-stage classes");
  bench_cmd->add_option("--epsilon", bench.epsilon, "FPTAS accuracy")->capture_default_str();
  bench_cmd->add_option("--threads", bench.threads, "Worker threads")->capture_default_str();
  bench_cmd->add_flag("--no-timing", bench.no_timing, "Leave the micros column empty");
  bench_cmd->add_option("--output,-o", bench.output, "CSV file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_parameter;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve, out);
    if (*validate_cmd) return cmd_validate(check, out);
    if (*ssp_cmd) return cmd_ssp(ssp, out, err);
    if (*sat_cmd) return cmd_sat(sat, out, err);
    if (*formula_cmd) return cmd_formula(formula, out, err);
    if (*random_cmd) return cmd_random(random, out);
    if (*bench_cmd) return cmd_bench(bench, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return exit_parse;
  } catch (const OutputError& e) {
    err << "output error: " << e.what() << '\n';
    return exit_output;
  } catch (const TopologyError& e) {
    err << "topology error: " << e.what() << '\n';
    return exit_topology;
  } catch (const InvalidInstance& e) {
    err << "parse error: " << e.what() << '\n';
    return exit_parse;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_parameter;
  }
  return exit_parameter;
}

int run_cli(int argc, char** argv) { return run_cli(argc, argv, std::cout, std::cerr); }

}  // namespace coupled::cli
