#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "lmode/cli/commands.hpp"
#include "lmode/cli/config.hpp"

namespace {

struct Flags {
  std::optional<double> omega, gamma, epsilon, lambda;
  std::optional<std::string> initial, tmax, time_unit, witnesses, out, config;
  std::optional<int> steps, total;
};

void add_common(CLI::App& sub, Flags& f) {
  sub.add_option("--omega", f.omega, "harmonic frequency omega (cm^-1)");
  sub.add_option("--gamma", f.gamma, "anharmonicity gamma (cm^-1)");
  sub.add_option("--epsilon", f.epsilon, "coupling epsilon (cm^-1)");
  sub.add_option("--initial", f.initial, "initial state 'n,m' or 'amps:N:re,im;...'");
  sub.add_option("--tmax", f.tmax, "end of the time grid, e.g. 10pi or 5.5");
  sub.add_option("--steps", f.steps, "number of grid points including t=0");
  sub.add_option("--time-unit", f.time_unit, "grid unit: ps or phase (epsilon*t)");
  sub.add_option("--lambda", f.lambda, "Duan scaling parameter");
  sub.add_option("--witnesses", f.witnesses, "comma-separated witness columns");
  sub.add_option("--total", f.total, "total quantum number N (spectrum)");
  sub.add_option("--out", f.out, "write data to this file; the summary then goes to stdout");
  sub.add_option("--config", f.config, "key=value configuration file (flags override it)");
}

lmode::cli::RunConfig resolve(const Flags& f) {
  using namespace lmode::cli;
  RunConfig cfg;
  if (f.config) {
    std::ifstream in(*f.config);
    if (!in) throw UsageError("cannot open config file '" + *f.config + "'");
    apply_config(cfg, in);
  }
  // Flags go through the same parser as the config file so both accept the same syntax.
  std::ostringstream overrides;
  overrides.precision(17);
  if (f.omega) overrides << "omega_cm1=" << *f.omega << '\n';
  if (f.gamma) overrides << "gamma_cm1=" << *f.gamma << '\n';
  if (f.epsilon) overrides << "epsilon_cm1=" << *f.epsilon << '\n';
  if (f.initial) overrides << "initial=" << *f.initial << '\n';
  if (f.tmax) overrides << "t_max=" << *f.tmax << '\n';
  if (f.steps) overrides << "steps=" << *f.steps << '\n';
  if (f.time_unit) overrides << "time_unit=" << *f.time_unit << '\n';
  if (f.lambda) overrides << "lambda=" << *f.lambda << '\n';
  if (f.witnesses) overrides << "witnesses=" << *f.witnesses << '\n';
  std::istringstream in(overrides.str());
  apply_config(cfg, in);
  if (f.total) cfg.total = *f.total;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace lmode::cli;
  CLI::App app{"Two-mode local-mode Hamiltonian simulator"};
  app.require_subcommand(1);
  Flags flags;
  for (const auto& name : command_names()) add_common(*app.add_subcommand(name), flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const std::string command = app.get_subcommands().front()->get_name();
    const RunConfig cfg = resolve(flags);
    if (flags.out) {
      std::ofstream out(*flags.out);
      if (!out) throw UsageError("cannot write '" + *flags.out + "'");
      return run_command(command, cfg, out, std::cout);
    }
    return run_command(command, cfg, std::cout, std::cerr);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violated: " << e.what() << '\n';
    return kExitInvariant;
  }
}
