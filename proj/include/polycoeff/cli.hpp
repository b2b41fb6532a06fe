#ifndef POLYCOEFF_CLI_HPP
#define POLYCOEFF_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace polycoeff::cli {

enum ExitCode : int {
    kOk = 0,
    kDomainError = 1,
    kUsageError = 2,
    kResourceError = 3,
};

/// Parses `args` (without the program name) and runs one subcommand.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polycoeff::cli

#endif  // POLYCOEFF_CLI_HPP
