#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace vml::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInfeasible = 2;
inline constexpr int kExitUsage = 64;

struct RunConfig {
  std::string subcommand;  // hyphenated form, e.g. "vortex-solve"
  std::map<std::string, std::string> parameters;
  std::string output_path = "-";
  std::uint64_t seed = 0;
};

/// Entry point behind the `vml` binary. `args` excludes the program name.
/// The envelope goes to the output path (or `out` for "-"); messages go to
/// `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Runs an already resolved configuration.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

std::string usage();

}  // namespace vml::cli
