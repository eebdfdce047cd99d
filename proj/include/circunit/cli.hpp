#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace circunit {

struct RunConfig {
  std::string subcommand;  // verify, tables, funnel, unit, identities
  std::optional<int> n;
  std::string json_path;   // verify: file (single n) or directory; "-" for stdout
  bool json = false;
  bool explore = false;
  bool timing = true;
  std::uint64_t seed = 0;
  std::string word;
};

enum ExitCode : int { kOk = 0, kUsage = 1, kNegative = 2, kDisagreement = 3 };

int run(const RunConfig& config, std::ostream& out, std::ostream& err);
// Parses argv with CLI11, then dispatches to run().
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace circunit
