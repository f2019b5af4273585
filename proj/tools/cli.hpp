#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hochq::cli {

/// Exit codes: 0 success, 1 verification failure, 2 usage or input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Artifacts go to `out`
/// unless --out is given; summaries, timings and errors go to `err`.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace hochq::cli
