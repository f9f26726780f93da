#include "lmode/dynamics.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

#include "lmode/errors.hpp"

namespace lmode {

double phase_per_ps(double energy_cm1) {
  return 2.0 * std::numbers::pi * kSpeedOfLight * energy_cm1;
}

TimeSpec::TimeSpec(TimeUnit unit, std::vector<double> values)
    : unit_(unit), values_(std::move(values)) {
  if (values_.empty()) throw DomainError("time grid must not be empty");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) throw DomainError("time grid values must be finite");
    if (i > 0 && !(values_[i] > values_[i - 1])) {
      throw DomainError("time grid must be strictly ascending");
    }
  }
}

TimeSpec TimeSpec::uniform(TimeUnit unit, double t_max, int steps) {
  if (steps < 1) throw DomainError("time grid needs at least one step");
  if (!std::isfinite(t_max) || t_max < 0.0) throw DomainError("t_max must be finite and >= 0");
  if (steps > 1 && t_max == 0.0) throw DomainError("t_max must be positive for more than one step");
  std::vector<double> values(static_cast<std::size_t>(steps));
  for (int k = 0; k < steps; ++k) {
    values[static_cast<std::size_t>(k)] = steps == 1 ? 0.0 : t_max * k / (steps - 1);
  }
  return {unit, std::move(values)};
}

Picoseconds to_picoseconds(double value, TimeUnit unit, const ModelParams& params) {
  if (unit == TimeUnit::picoseconds) return {value};
  if (params.epsilon <= 0.0) throw DomainError("phase time axis requires epsilon > 0");
  return {value / phase_per_ps(params.epsilon)};
}

double coupling_phase(Picoseconds t, const ModelParams& params) {
  return phase_per_ps(params.epsilon) * t.value;
}

SubspaceState evolve(const SubspaceHamiltonian& h, const SubspaceState& psi0, Picoseconds t) {
  if (psi0.total() != h.total()) {
    throw DimensionError("state in S_" + std::to_string(psi0.total()) +
                         " evolved with the S_" + std::to_string(h.total()) + " Hamiltonian");
  }
  if (t.value == 0.0) return psi0;

  const Eigen::MatrixXd& vecs = h.eigenvectors();
  const Eigen::Index dim = vecs.rows();
  Eigen::VectorXcd psi(dim);
  for (Eigen::Index j = 0; j < dim; ++j) psi(j) = psi0.amp(static_cast<int>(j));

  // Global phase from the offset, relative phases from the shifted spectrum.
  const cplx global = std::polar(1.0, -phase_per_ps(h.energy_offset()) * t.value);
  Eigen::VectorXcd coeffs = vecs.transpose().cast<cplx>() * psi;
  for (Eigen::Index k = 0; k < dim; ++k) {
    coeffs(k) *= global * std::polar(1.0, -phase_per_ps(h.relative_eigenvalues()(k)) * t.value);
  }
  const Eigen::VectorXcd out = vecs.cast<cplx>() * coeffs;
  return {h.total(), std::vector<cplx>(out.data(), out.data() + dim)};
}

double fidelity(const SubspaceHamiltonian& h, const SubspaceState& psi0, Picoseconds t) {
  return std::abs(inner_product(psi0, evolve(h, psi0, t)));
}

Picoseconds relative_phase_time(const SubspaceHamiltonian& h, int lower, int upper,
                                double relative_phase) {
  const auto& rel = h.relative_eigenvalues();
  if (lower < 0 || upper < 0 || lower >= rel.size() || upper >= rel.size()) {
    throw DomainError("eigenbranch index out of range");
  }
  const double gap = rel(upper) - rel(lower);
  if (gap == 0.0) throw DomainError("degenerate eigenbranches never dephase");
  return {relative_phase / phase_per_ps(gap)};
}

SubspaceState bell_like_state(int sign) {
  if (sign != 1 && sign != -1) throw DomainError("Bell-like sign must be +1 or -1");
  const double h = std::numbers::sqrt2 / 2.0;
  // amps[0] is |1,0>, amps[1] is |0,1>.
  return {1, {cplx{0.0, sign * h}, cplx{h, 0.0}}};
}

BellOverlaps bell_overlaps(const ModelParams& params, Picoseconds t) {
  const SubspaceHamiltonian h(1, params);
  const SubspaceState psi = evolve(h, SubspaceState::basis({0, 1}), t);
  return {std::abs(inner_product(bell_like_state(+1), psi)),
          std::abs(inner_product(bell_like_state(-1), psi))};
}

Trajectory sample_trajectory(const SubspaceHamiltonian& h, const SubspaceState& psi0,
                             const TimeSpec& times) {
  Trajectory out{times, {}, {}, psi0};
  out.picoseconds.reserve(times.size());
  out.states.reserve(times.size());
  for (double value : times.values()) {
    const Picoseconds t = to_picoseconds(value, times.unit(), h.params());
    out.picoseconds.push_back(t);
    out.states.push_back(evolve(h, psi0, t));
  }
  return out;
}

double max_norm_drift(const Trajectory& trajectory) {
  double drift = 0.0;
  for (const auto& s : trajectory.states) drift = std::max(drift, s.norm_correction());
  return drift;
}

Eigen::VectorXcd evolve_full(const Eigen::MatrixXd& full_h, const Eigen::VectorXcd& psi,
                             Picoseconds t) {
  if (full_h.rows() != psi.size() || full_h.cols() != psi.size()) {
    throw DimensionError("full Hamiltonian and state sizes differ");
  }
  const Eigen::MatrixXcd generator = full_h.cast<cplx>() * cplx{0.0, -phase_per_ps(1.0) * t.value};
  const Eigen::MatrixXcd propagator = generator.exp();
  return propagator * psi;
}

}  // namespace lmode
