#ifndef GLP_TOOLS_COMMANDS_HPP
#define GLP_TOOLS_COMMANDS_HPP

#include "run_config.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace glp::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kFormat = 2,
    kNumericalGuard = 3,
    kVerifyFailed = 4,
};

/// Parses `args` (without the program name) and runs the subcommand.
/// Text results go to `out` unless an output path is given; diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Runs an already-resolved configuration.
int run_config(const RunConfig& config, std::ostream& out, std::ostream& err);

} // namespace glp::cli

#endif // GLP_TOOLS_COMMANDS_HPP
