#ifndef GCL_CLI_HPP
#define GCL_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace gcl {

enum ExitCode : int { kOk = 0, kUsage = 2, kData = 3, kSolver = 4 };

/// Runs the gcl front end on `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace gcl

#endif // GCL_CLI_HPP
