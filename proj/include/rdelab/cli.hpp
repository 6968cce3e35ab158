#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rdelab::cli {

/// The only exit codes the tool produces.
enum ExitCode : int {
    exit_ok = 0,
    exit_singular = 1,      // singularity in the run, or a forbidden formula condition
    exit_usage = 2,         // bad arguments, config or pattern text
    exit_verification = 3,  // a comparison that should hold exactly did not
};

/**
 * Runs one rde-lab command. `args` excludes the program name, e.g.
 * {"iterate", "--config", "run.json", "--format", "jsonl"}.
 * Data goes to `out` (or to --output FILE), diagnostics to `err`.
 */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rdelab::cli
