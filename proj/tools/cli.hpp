#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bergek4::cli {

/// Exit codes shared by every subcommand.
enum Exit : int {
  kOk = 0,
  /// A mathematical negative: a forbidden configuration was found or a claim failed.
  kFound = 1,
  kUsage = 2,
  kBudget = 3,
};

/// Runs one command line (without the program name). `in` backs
/// `--input -` and a missing `--input`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace bergek4::cli
