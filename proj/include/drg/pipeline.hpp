#pragma once

// The commands behind the command-line tool.

#include <cstdint>
#include <string>

#include "drg/problem.hpp"
#include "drg/report.hpp"

namespace drg {

struct RunOptions {
  std::size_t max_k = 4;
  std::size_t budget = 50000;
  std::uint64_t seed = 1;
};

/// command is one of classify, weyl, dynkin, center, check.  Errors from the
/// modules propagate as exceptions.
Report run(const std::string& command, const ProblemFile& problem, const RunOptions& options);

/// Report for a failed run: kind is validation, budget or internal.
Report error_report(const std::string& command, const std::string& kind, const std::string& message);

}  // namespace drg
