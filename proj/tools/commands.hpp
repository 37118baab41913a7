#pragma once

// Batch commands behind the `subclose` executable. Each command writes its
// output to `out` and returns the process exit status.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace subclose::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,  // disagreement, proven-regime violation, selftest failure
  kUsage = 2,
  kBudget = 3,
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Format { Table, Json, Csv };
enum class KrMode { Closed, Oracle, Both };
enum class Level { Fast, Full };
enum class Fault { None, Field, KrTable };

struct RRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

struct RunConfig {
  std::string command;
  int ell = 2;
  int m = 0;
  std::optional<RRange> r;
  int q = 2;
  std::optional<std::vector<int>> alpha;
  KrMode mode = KrMode::Both;
  Format format = Format::Table;
  std::uint64_t budget_families = 100'000'000;
  std::uint64_t budget_subspaces = 10'000'000;
  std::uint64_t seed = 20240101;
  Level level = Level::Fast;
  Fault inject = Fault::None;
};

/// "5" or "1..10" (inclusive).
RRange parse_r_range(const std::string& text);
/// "3,4" -> {3,4}
std::vector<int> parse_alpha(const std::string& text);

/// Checks ell <= m, r within [0, C(m,ell)], q a supported prime power and
/// alpha a valid Schubert index; throws UsageError.
void validate(const RunConfig& cfg);

int cmd_kr_table(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_optimal_graphs(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify_conjecture(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_export_code(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_selftest(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Validates and dispatches on cfg.command, mapping library exceptions to
/// exit codes.
int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace subclose::cli
