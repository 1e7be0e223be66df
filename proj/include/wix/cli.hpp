#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wix/types.hpp"

namespace wix::cli {

enum class Command { kMin, kMax, kWiener, kVerify, kEnumerate, kSearch };
enum class OutputFormat { kJson, kDot };

enum ExitCode : int {
  kExitOk = 0,
  kExitInvalidInput = 1,
  kExitViolation = 2,
  kExitCapExceeded = 3,
};

struct CliConfig {
  Command command = Command::kMin;
  std::optional<std::vector<int>> degrees;
  std::optional<std::string> input_path;
  OutputFormat output_format = OutputFormat::kJson;
  std::optional<Direction> direction;
  std::uint64_t seed = 0;
  std::uint64_t cap = 0;
  std::optional<std::size_t> max_n;
  bool count_only = false;
  bool distinct = false;
  unsigned jobs = 1;
};

/// "4,4,3" or "4 4 3"; any order (normalized later).
std::vector<int> parse_degree_list(const std::string& text);

/// Enumeration cap: the WIX_CAP environment variable if set, else the default.
std::uint64_t default_cap();

/// Parses argv into a config. On --help or a parse error, writes to out/err
/// and returns the exit code to use instead.
struct ParseOutcome {
  std::optional<CliConfig> config;
  int exit_code = kExitOk;
};
ParseOutcome parse_args(int argc, char** argv, std::ostream& out, std::ostream& err);

/// Executes one command. Payload goes to out, diagnostics to err.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

int main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace wix::cli
