#pragma once

#include <vector>

#include <Eigen/Dense>

#include "lmode/fock.hpp"
#include "lmode/hamiltonian.hpp"

namespace lmode {

/// Speed of light in cm/ps.
inline constexpr double kSpeedOfLight = 2.99792458e-2;

/// Angular phase accumulated per picosecond by an energy given in cm^-1: 2 pi c E.
double phase_per_ps(double energy_cm1);

struct Picoseconds {
  double value = 0.0;
};

/// Time axes understood by TimeSpec. `phase` is the coupling phase epsilon*t
/// (radians), the natural clock of the Rabi exchange between the two modes.
enum class TimeUnit { picoseconds, phase };

/// Ascending grid of finite time values in a single unit.
class TimeSpec {
 public:
  TimeSpec(TimeUnit unit, std::vector<double> values);

  /// steps points from 0 to t_max inclusive (a single point at 0 when steps == 1).
  static TimeSpec uniform(TimeUnit unit, double t_max, int steps);

  TimeUnit unit() const { return unit_; }
  const std::vector<double>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }

 private:
  TimeUnit unit_;
  std::vector<double> values_;
};

/// Convert a grid value to picoseconds. The phase axis needs epsilon > 0.
Picoseconds to_picoseconds(double value, TimeUnit unit, const ModelParams& params);

/// Coupling phase epsilon*t reached after t.
double coupling_phase(Picoseconds t, const ModelParams& params);

/// U(t) psi0 with U = sum_k exp(-i theta_k(t)) |v_k><v_k| and theta_k = 2 pi c E_k t.
/// The global phase is kept. Throws DimensionError if psi0 is not in S_N of h.
SubspaceState evolve(const SubspaceHamiltonian& h, const SubspaceState& psi0, Picoseconds t);

/// |<psi0| U(t) |psi0>|.
double fidelity(const SubspaceHamiltonian& h, const SubspaceState& psi0, Picoseconds t);

/// Time at which eigenbranches `lower` and `upper` of h have acquired the
/// relative phase `relative_phase`.
Picoseconds relative_phase_time(const SubspaceHamiltonian& h, int lower, int upper,
                                double relative_phase);

/// (|0,1> + sign * i |1,0>) / sqrt(2), sign = +1 or -1.
SubspaceState bell_like_state(int sign);

struct BellOverlaps {
  double plus_i = 0.0;   // |<(|0,1> + i|1,0>)/sqrt2 | psi(t)>|
  double minus_i = 0.0;  // |<(|0,1> - i|1,0>)/sqrt2 | psi(t)>|
};

/// Overlaps of U(t)|0,1> with the two Bell-like states of S_1.
BellOverlaps bell_overlaps(const ModelParams& params, Picoseconds t);

struct Trajectory {
  TimeSpec times;
  std::vector<Picoseconds> picoseconds;
  std::vector<SubspaceState> states;
  SubspaceState initial;
};

/// Evolve psi0 to every grid point independently (no step-to-step accumulation).
Trajectory sample_trajectory(const SubspaceHamiltonian& h, const SubspaceState& psi0,
                             const TimeSpec& times);

/// Largest norm correction recorded along a trajectory.
double max_norm_drift(const Trajectory& trajectory);

/// Full-space reference propagation exp(-i 2 pi c H t) psi by Pade matrix
/// exponential, independent of any eigendecomposition.
Eigen::VectorXcd evolve_full(const Eigen::MatrixXd& full_h, const Eigen::VectorXcd& psi,
                             Picoseconds t);

}  // namespace lmode
