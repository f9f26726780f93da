#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "lmode/cli/config.hpp"

namespace lmode::cli {

/// Subcommands in the order they appear in --help.
const std::vector<std::string>& command_names();

/// Run one subcommand. Data goes to `out` (CSV, or the text report for
/// perturb); the human-readable summary goes to `summary`. Returns the exit
/// code; UsageError and InvariantViolation propagate to the caller.
int run_command(std::string_view name, const RunConfig& config, std::ostream& out,
                std::ostream& summary);

int cmd_spectrum(const RunConfig& config, std::ostream& out, std::ostream& summary);
int cmd_fidelity(const RunConfig& config, std::ostream& out, std::ostream& summary);
int cmd_entropy(const RunConfig& config, std::ostream& out, std::ostream& summary);
int cmd_witnesses(const RunConfig& config, std::ostream& out, std::ostream& summary);
int cmd_bell(const RunConfig& config, std::ostream& out, std::ostream& summary);
int cmd_quadratures(const RunConfig& config, std::ostream& out, std::ostream& summary);
int cmd_perturb(const RunConfig& config, std::ostream& out, std::ostream& summary);

}  // namespace lmode::cli
