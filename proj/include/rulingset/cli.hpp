#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rulingset::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kRejected = 1,  // verification failed, or a witness was found
  kUsage = 2,     // bad flags or unparseable input
  kSizeCap = 3,   // exact solver or oracle size cap exceeded
};

/// Runs one invocation. `args` excludes the program name. Input named "-"
/// (the default) is read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace rulingset::cli
