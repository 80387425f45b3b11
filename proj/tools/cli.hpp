#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace zetacoef::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kDomainError = 2,
  kUsage = 64,
  kCannotCreate = 73,
};

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics to `err`; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct CheckOutcome {
  std::string suite;
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Verification suites: "identities", "coefficients", "oracle" or "all".
/// Throws std::invalid_argument for an unknown suite.
std::vector<CheckOutcome> run_suite(std::string_view suite, int digits);

}  // namespace zetacoef::cli
