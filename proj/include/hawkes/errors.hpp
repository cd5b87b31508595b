#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hawkes {

// Solver failures: non-convergence, residuals above tolerance, divergent tables.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A requested (kernel, offspring) combination violates a regime assumption,
// e.g. the kernel tail is heavier than the offspring tail.
class InconsistentRegime : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct TruncationReport {
  std::int64_t families_truncated = 0;
  std::int64_t events_dropped_lower_bound = 0;
  std::int64_t budget = 0;
};

class BudgetExhausted : public std::runtime_error {
 public:
  BudgetExhausted(TruncationReport report, const std::string& message)
      : std::runtime_error(message), report(report) {}

  TruncationReport report;
  std::int64_t replica = -1;  // set when thrown out of a replica pool
};

class ConfigError : public std::invalid_argument {
 public:
  ConfigError(std::string field_path, const std::string& message)
      : std::invalid_argument(field_path + ": " + message),
        field_path(std::move(field_path)) {}

  std::string field_path;
};

}  // namespace hawkes
