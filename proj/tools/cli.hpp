#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace reldisp::cli {

enum ExitCode : int
{
  Success = 0,
  UsageError = 1,
  DataError = 2,
  ComputationError = 3
};

//! Environment variable holding the default seed; --seed takes precedence.
inline constexpr const char* seed_env = "RELDISP_SEED";

/// Runs one command line. `args` excludes the program name. Results go to
/// `out`; errors are written to `err` as a JSON object.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

} // namespace reldisp::cli
