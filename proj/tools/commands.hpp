#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace tracefree::cli {

enum ExitCode : int {
  kOk = 0,
  kParseError = 2,
  kResourceLimit = 3,
  kNotZeroDimensional = 4,
};

struct RunConfig {
  double tolerance = 1e-9;
  int precision_bits = 64;
  std::size_t gb_budget = 500000;
  std::string format = "json";  // json | csv | text
  std::uint64_t seed = 1;
  /// 1-based index of the Wirtinger relator left out (cover); last if unset.
  std::optional<std::size_t> drop_relator;
  /// Fixed lifting pivot as index digits, e.g. "123".
  std::optional<std::string> pivot;
  /// Variable whose eliminant is reported, e.g. "x13".
  std::optional<std::string> parameter;
  /// Adds wall-clock columns to census output (makes it nondeterministic).
  bool timing = false;
};

struct CommandResult {
  int exit_code = kOk;
  std::string out;
  std::string err;
};

/// Throws std::invalid_argument on a config that cannot be used.
void check_config(const RunConfig& config);

CommandResult cmd_ideals(const std::string& path, const std::string& which, const RunConfig& config);
CommandResult cmd_f2(const std::string& path, const RunConfig& config);
CommandResult cmd_s0(const std::string& path, const RunConfig& config);
CommandResult cmd_ghosts(const std::string& path, const RunConfig& config);
CommandResult cmd_cover(const std::string& path, const RunConfig& config);
CommandResult cmd_census(const std::string& dir, const RunConfig& config);

}  // namespace tracefree::cli
