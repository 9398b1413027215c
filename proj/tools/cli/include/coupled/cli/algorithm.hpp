#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coupled/approx.hpp"
#include "coupled/instance.hpp"
#include "coupled/rational.hpp"

namespace coupled::cli {

/// Names accepted by --algorithm.
const std::vector<std::string>& algorithm_names();

struct AlgorithmOptions {
  Rational epsilon{1, 10};
  std::size_t oracle_limit = 14;
};

/// Runs one named algorithm. Throws TopologyError when its precondition fails
/// and ParameterError for unknown names.
approx::ApproxOutcome run_algorithm(std::string_view name, const Instance& instance,
                                    const AlgorithmOptions& options = {});

/// SCHED_ORACLE_LIMIT when set to a positive integer, the default cap otherwise.
std::size_t oracle_limit_from_env();

}  // namespace coupled::cli
