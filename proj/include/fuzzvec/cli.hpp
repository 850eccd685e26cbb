#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fuzzvec::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kInvalid = 2, kNumerical = 3 };

/// Runs one command line (args[0] is the program name). Results go to
/// `out` or to the file named by -o; errors go to `err` as one JSON line
/// {"code", "message", "condition"?, "witness"?}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv);

}  // namespace fuzzvec::cli
