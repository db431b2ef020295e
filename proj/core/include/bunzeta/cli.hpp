#pragma once

#include <optional>
#include <ostream>
#include <string>

namespace bunzeta {

enum class Command { info, zeta, trace, series_compare, euler, poincare, verify_tamagawa };

enum class OutputFormat { text, json };

// One CLI invocation. Defaults match the documented desk-scale settings:
// series order 20, Euler cutoff 12, cohomology cutoff 40, twist cutoff 20.
struct RunConfig {
  Command command = Command::info;
  std::string group_spec;
  std::string curve_spec;
  std::optional<long> q;
  int order = 20;
  int point_degree_cutoff = 12;
  int cohomology_cutoff = 40;
  long max_twist = 20;
  OutputFormat format = OutputFormat::text;
  std::optional<int> decimal_digits;
};

// Executes one command and writes the report to `out`.
// Exit codes: 0 success / verified, 1 verification failure, 2 input error
// (reported on `err`).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace bunzeta
