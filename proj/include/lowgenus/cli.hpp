#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lowgenus::cli {

enum ExitCode : int {
  kOk = 0,
  kDomainError = 1,
  kUsageError = 2,
  kVerificationFailed = 3,
};

/// Runs one command line.  `args` excludes the program name.
///
///   rational | node-point | node-line | elliptic   (--d N | --max-d N) [--char]
///   fixed-j  (--d N | --max-d N) [--char] [--j generic|0|1728]
///   hurwitz  (--d N | --max-d N) [--genus 0|1|2]
///   codim1   (--d N | --max-d N) [--genus 0..3] [--severi-inputs PATH]
///   verify   [--severi-inputs PATH]
///
/// Every subcommand also takes --format table|json|csv and --jobs N.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lowgenus::cli
