#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "commands.hpp"

namespace subclose::cli {

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Identity suites at the chosen scale. `inject` corrupts one input on
/// purpose so the harness itself can be shown to fail.
std::vector<SuiteResult> run_selftest(Level level, Fault inject, std::uint64_t seed);

}  // namespace subclose::cli
