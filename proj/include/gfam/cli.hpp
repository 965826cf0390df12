#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gfam::cli {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsage = 2;
inline constexpr int kNonConvergence = 3;
}  // namespace exit_code

/// Runs the `gfam` command line. args[0] is the program name. Normal output
/// goes to `out` (or the --out file), diagnostics to `err`. Returns one of
/// the exit codes above.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gfam::cli
