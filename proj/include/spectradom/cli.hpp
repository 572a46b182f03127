#ifndef SPECTRADOM_CLI_HPP
#define SPECTRADOM_CLI_HPP

#include <iosfwd>

namespace spectradom {

/// Exit codes of the command line tool.
enum ExitCode : int {
  kExitClean = 0,
  kExitViolations = 1,  // bound violation, characterization mismatch, census mismatch
  kExitUsage = 2,
  kExitInput = 3,  // unreadable or malformed input
};

/// Entry point of the `spectradom` tool with injectable streams; `in` serves
/// `--input -`.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace spectradom

#endif
