#pragma once

#include <stdexcept>
#include <string>

namespace coupled {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A task set or edge list that breaks the Instance invariants.
class InvalidInstance : public Error {
 public:
  using Error::Error;
};

/// The instance does not have the compatibility-graph shape a solver requires.
class TopologyError : public Error {
 public:
  using Error::Error;
};

/// A caller-supplied parameter is out of range (epsilon, generator sizes, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A subset-sum table would exceed the configured capacity limit.
class CapacityLimitError : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

/// The exhaustive oracle refuses instances above its size limit.
class InstanceTooLarge : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

/// Malformed one-in-three formula or an assignment that does not satisfy it.
class FormulaError : public Error {
 public:
  using Error::Error;
};

}  // namespace coupled
