#pragma once

#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lmode/dynamics.hpp"
#include "lmode/fock.hpp"

namespace lmode::cli {

/// Malformed flags, config entries or out-of-range requests. Exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numerical invariant (norm conservation, eigen residual) was broken. Exit code 3.
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInvariant = 3;

/// Largest S_N the spectrum command accepts.
inline constexpr int kMaxSpectrumTotal = 64;

struct RunConfig {
  ModelParams params = ModelParams::representative();
  std::string initial = "0,1";
  double t_max = 10.0 * 3.141592653589793;
  int steps = 2001;
  TimeUnit unit = TimeUnit::phase;
  double lambda = 1.0;
  /// Witness columns to emit; empty selects all nine.
  std::vector<std::string> witnesses;
  /// Overrides the total quantum number taken from `initial` (spectrum only).
  std::optional<int> total;
};

/// "n,m" selects |n,m>; "amps:N:re,im;re,im;..." lists the N+1 amplitudes
/// of |N,0>, |N-1,1>, ..., |0,N> (renormalized after parsing).
SubspaceState parse_initial(std::string_view text);

/// The canonical pair behind "n,m", or nullopt for an amplitude list.
std::optional<FockPair> parse_fock_pair(std::string_view text);

/// Plain number, or a multiple of pi written "pi", "2pi", "0.5pi".
double parse_time_value(std::string_view text);

TimeUnit parse_time_unit(std::string_view text);
std::string_view time_unit_name(TimeUnit unit);

/// Apply key=value lines (keys: omega_cm1, gamma_cm1, epsilon_cm1, initial,
/// t_max, steps, time_unit, lambda, witnesses). '#' starts a comment.
void apply_config(RunConfig& config, std::istream& in);

/// Throws UsageError when the configuration cannot drive a run.
void validate(const RunConfig& config);

TimeSpec time_grid(const RunConfig& config);

}  // namespace lmode::cli
