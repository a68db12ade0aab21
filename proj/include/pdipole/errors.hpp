#pragma once

#include <stdexcept>
#include <string>

namespace pdipole {

// Process exit codes used by the command-line tool.
enum class ExitCode : int {
  kOk = 0,
  kConfig = 2,
  kDesignRule = 3,
  kSolver = 4,
  kIo = 5,
};

/// Invalid numeric input to a closed-form design equation (f <= 0, eps_r < 1, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A requested value lies outside what a synthesis routine can reach.
class RangeError : public std::range_error {
 public:
  using std::range_error::range_error;
};

/// Caller misuse, such as an even segment count or an unsolved current.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A geometry breaks one of the hard design restrictions.
class DesignRuleError : public std::runtime_error {
 public:
  DesignRuleError(std::string rule_id, const std::string& what)
      : std::runtime_error(what), rule_id_(std::move(rule_id)) {}
  const std::string& rule_id() const noexcept { return rule_id_; }

 private:
  std::string rule_id_;
};

class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pdipole

namespace pdipole {

/// Negative-resistance input to a passive-network routine.
class NonPassiveError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Reactance never crosses zero inside the sweep.
class NoResonanceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pdipole

namespace pdipole {

/// A radiation pattern with no power in it.
class DegeneratePatternError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Optimiser bounds that do not bracket a sign change.
class BracketError : public SolverError {
 public:
  using SolverError::SolverError;
};

}  // namespace pdipole
