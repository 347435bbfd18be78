/// @file commands.hpp
/// @brief Command drivers behind the CLI and the shared-library API. Each
///        command consumes a resolved RunConfig and produces a Report with a
///        JSON body and file artifacts. Exit statuses: 0 all checks hold,
///        1 violation/witness, 2 usage or config error (raised as
///        std::invalid_argument / std::domain_error), 3 solver
///        non-convergence.
#pragma once

#include "config.hpp"
#include "report.hpp"

namespace orlicz {

const char* tool_version();

Report cmd_verify_conditions(const RunConfig& cfg);
Report cmd_lambda(const RunConfig& cfg);
Report cmd_iterate(const RunConfig& cfg);
Report cmd_solve(const RunConfig& cfg);
Report merge_reports(const std::vector<std::string>& report_jsons);

/// Dispatch by subcommand name: verify-conditions | lambda | iterate | solve.
Report run_command(const RunConfig& cfg, const std::string& command);

}  // namespace orlicz
