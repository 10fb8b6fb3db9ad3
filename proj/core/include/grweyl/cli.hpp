#pragma once

#include <string>
#include <vector>

namespace grweyl {

/// Outcome of one batch invocation. Exit codes: 0 success (and boolean
/// queries answering true), 1 domain errors and boolean queries answering
/// false, 2 parse/usage errors, 70 internal consistency faults.
struct CliResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

/// Runs one subcommand; args excludes the program name. Recognizes the
/// global flag --json for machine-readable output.
CliResult run_command(const std::vector<std::string>& args);

} // namespace grweyl
