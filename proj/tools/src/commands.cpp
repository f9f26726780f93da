#include "lmode/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "lmode/cli/csv.hpp"
#include "lmode/dynamics.hpp"
#include "lmode/entanglement.hpp"
#include "lmode/errors.hpp"
#include "lmode/hamiltonian.hpp"
#include "lmode/quadratures.hpp"

namespace lmode::cli {

namespace {

constexpr double kNormDriftLimit = 1e-12;
constexpr double kEigenResidualLimit = 1e-8;

struct Evolution {
  SubspaceHamiltonian hamiltonian;
  Trajectory trajectory;
};

std::string ket(int n, int m) {
  if (n < 0 || m < 0) return "(outside S_N)";
  return "|" + std::to_string(n) + "," + std::to_string(m) + ">";
}

Evolution evolve_config(const RunConfig& config, const SubspaceState& psi0) {
  validate(config);
  SubspaceHamiltonian h(psi0.total(), config.params);
  Trajectory traj = sample_trajectory(h, psi0, time_grid(config));
  const double drift = max_norm_drift(traj);
  if (drift > kNormDriftLimit) {
    throw InvariantViolation("norm drift " + format_number(drift) + " exceeds " +
                             format_number(kNormDriftLimit));
  }
  return {std::move(h), std::move(traj)};
}

Evolution evolve_config(const RunConfig& config) {
  validate(config);
  return evolve_config(config, parse_initial(config.initial));
}

std::vector<double> time_columns(const Evolution& ev, std::size_t i) {
  const Picoseconds t = ev.trajectory.picoseconds[i];
  return {t.value, coupling_phase(t, ev.hamiltonian.params())};
}

void summary_header(std::ostream& summary, std::string_view command, const RunConfig& config,
                    const Evolution& ev) {
  summary << "# " << command << ": S_" << ev.hamiltonian.total() << ", initial "
          << config.initial << ", omega=" << format_number(config.params.omega)
          << " gamma=" << format_number(config.params.gamma)
          << " epsilon=" << format_number(config.params.epsilon) << " cm^-1, "
          << ev.trajectory.times.size() << " points to " << format_number(config.t_max) << ' '
          << time_unit_name(config.unit) << '\n';
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"spectrum", "fidelity",    "entropy", "witnesses",
                                              "bell",     "quadratures", "perturb"};
  return names;
}

int run_command(std::string_view name, const RunConfig& config, std::ostream& out,
                std::ostream& summary) {
  if (name == "spectrum") return cmd_spectrum(config, out, summary);
  if (name == "fidelity") return cmd_fidelity(config, out, summary);
  if (name == "entropy") return cmd_entropy(config, out, summary);
  if (name == "witnesses") return cmd_witnesses(config, out, summary);
  if (name == "bell") return cmd_bell(config, out, summary);
  if (name == "quadratures") return cmd_quadratures(config, out, summary);
  if (name == "perturb") return cmd_perturb(config, out, summary);
  throw UsageError("unknown command '" + std::string(name) + "'");
}

int cmd_spectrum(const RunConfig& config, std::ostream& out, std::ostream& summary) {
  validate(config);
  const int total = config.total ? *config.total : parse_initial(config.initial).total();
  if (total < 0 || total > kMaxSpectrumTotal) {
    throw UsageError("spectrum needs 0 <= N <= " + std::to_string(kMaxSpectrumTotal) + ", got " +
                     std::to_string(total));
  }
  const SubspaceHamiltonian h(total, config.params);
  const Eigen::VectorXd values = h.eigenvalues();
  const Eigen::MatrixXd& vecs = h.eigenvectors();

  const double asymmetry = (h.matrix() - h.matrix().transpose()).cwiseAbs().maxCoeff();
  double residual = 0.0;
  for (Eigen::Index k = 0; k < values.size(); ++k) {
    residual = std::max(residual,
                        (h.matrix() * vecs.col(k) - values(k) * vecs.col(k)).cwiseAbs().maxCoeff());
  }
  if (asymmetry > 1e-12 || residual > kEigenResidualLimit) {
    throw InvariantViolation("eigensystem check failed: asymmetry " + format_number(asymmetry) +
                             ", residual " + format_number(residual));
  }

  CsvWriter csv(out);
  std::vector<std::string> columns{"index", "eigenvalue_cm1"};
  for (int j = 0; j <= total; ++j) columns.push_back("amp_" + std::to_string(total - j) + "_" +
                                                     std::to_string(j));
  csv.header(columns);
  for (Eigen::Index k = 0; k < values.size(); ++k) {
    std::vector<double> row{static_cast<double>(k), values(k)};
    for (Eigen::Index j = 0; j < vecs.rows(); ++j) row.push_back(vecs(j, k));
    csv.row(row);
  }

  summary << "# spectrum: S_" << total << ", " << values.size() << " eigenvalues in ["
          << format_number(values.minCoeff()) << ", " << format_number(values.maxCoeff())
          << "] cm^-1\n"
          << "matrix symmetric: " << (asymmetry == 0.0 ? "yes" : "within 1e-12") << '\n'
          << "max eigen residual: " << format_number(residual) << " cm^-1\n";
  return kExitOk;
}

int cmd_fidelity(const RunConfig& config, std::ostream& out, std::ostream& summary) {
  const Evolution ev = evolve_config(config);
  CsvWriter csv(out);
  csv.header({"t", "phase", "fidelity"});
  double min_fid = std::numeric_limits<double>::infinity();
  std::size_t argmin = 0;
  for (std::size_t i = 0; i < ev.trajectory.states.size(); ++i) {
    const double f = std::abs(inner_product(ev.trajectory.initial, ev.trajectory.states[i]));
    if (f < min_fid) {
      min_fid = f;
      argmin = i;
    }
    auto row = time_columns(ev, i);
    row.push_back(f);
    csv.row(row);
  }
  summary_header(summary, "fidelity", config, ev);
  summary << "min fidelity: " << format_number(min_fid) << " at t="
          << format_number(ev.trajectory.picoseconds[argmin].value) << " ps\n";
  return kExitOk;
}

int cmd_entropy(const RunConfig& config, std::ostream& out, std::ostream& summary) {
  validate(config);
  const SubspaceState psi0 = parse_initial(config.initial);
  if (psi0.total() == 0) throw UsageError("entropy ratio is undefined for S_0 initial states");
  const Evolution ev = evolve_config(config, psi0);
  CsvWriter csv(out);
  csv.header({"t", "phase", "S_bits", "S_normalized", "L"});
  double peak = 0.0;
  double peak_linear = 0.0;
  for (std::size_t i = 0; i < ev.trajectory.states.size(); ++i) {
    const auto& s = ev.trajectory.states[i];
    const double bits = von_neumann_entropy(s);
    const double ratio = normalized_entropy(s);
    const double lin = linear_entropy(s);
    peak = std::max(peak, ratio);
    peak_linear = std::max(peak_linear, lin);
    auto row = time_columns(ev, i);
    row.insert(row.end(), {bits, ratio, lin});
    csv.row(row);
  }
  summary_header(summary, "entropy", config, ev);
  summary << "peak normalized entropy: " << format_number(peak) << '\n'
          << "peak entropy: " << format_number(peak * std::log2(psi0.total() + 1.0))
          << " bits (max " << format_number(std::log2(psi0.total() + 1.0)) << ")\n"
          << "peak linear entropy: " << format_number(peak_linear) << '\n';
  return kExitOk;
}

int cmd_witnesses(const RunConfig& config, std::ostream& out, std::ostream& summary) {
  const Evolution ev = evolve_config(config);
  const auto& all = witness_names();
  const std::vector<std::string>& selected = config.witnesses.empty() ? all : config.witnesses;
  std::vector<std::size_t> picks;
  for (const auto& name : selected) {
    picks.push_back(static_cast<std::size_t>(std::find(all.begin(), all.end(), name) -
                                             all.begin()));
  }

  CsvWriter csv(out);
  std::vector<std::string> columns{"t", "phase", "S_bits"};
  columns.insert(columns.end(), selected.begin(), selected.end());
  csv.header(columns);

  std::vector<double> mins(picks.size(), std::numeric_limits<double>::infinity());
  std::vector<std::size_t> detections(picks.size(), 0);
  std::size_t d_mismatch = 0;
  for (std::size_t i = 0; i < ev.trajectory.states.size(); ++i) {
    const auto& s = ev.trajectory.states[i];
    const auto battery = witness_battery(s, config.lambda);
    const double bits = von_neumann_entropy(s);
    auto row = time_columns(ev, i);
    row.push_back(bits);
    for (std::size_t k = 0; k < picks.size(); ++k) {
      const auto& w = battery[picks[k]];
      row.push_back(w.value);
      mins[k] = std::min(mins[k], w.value);
      if (w.detected) ++detections[k];
    }
    const bool entangled = s.total() > 0 && normalized_entropy(s) > 1e-6;
    if (battery.back().detected != entangled) ++d_mismatch;
    csv.row(row);
  }

  summary_header(summary, "witnesses", config, ev);
  summary << "convention: " << WitnessReport::kConvention << " (threshold -"
          << format_number(kDetectionThreshold) << ")\n";
  for (std::size_t k = 0; k < picks.size(); ++k) {
    summary << selected[k] << ": min " << format_number(mins[k]) << ", detected "
            << (detections[k] ? "yes" : "no") << " (" << detections[k] << " of "
            << ev.trajectory.states.size() << " points)\n";
  }
  summary << "D detection vs entropy > 1e-6 disagreements: " << d_mismatch << '\n';
  return kExitOk;
}

int cmd_bell(const RunConfig& config, std::ostream& out, std::ostream& summary) {
  const SubspaceState psi0 = SubspaceState::basis({0, 1});
  const Evolution ev = evolve_config(config, psi0);
  const SubspaceState plus = bell_like_state(+1);
  const SubspaceState minus = bell_like_state(-1);

  CsvWriter csv(out);
  csv.header({"t", "phase", "overlap_plus_i", "overlap_minus_i"});
  double best_plus = 0.0;
  double best_minus = 0.0;
  for (std::size_t i = 0; i < ev.trajectory.states.size(); ++i) {
    const auto& s = ev.trajectory.states[i];
    const double op = std::abs(inner_product(plus, s));
    const double om = std::abs(inner_product(minus, s));
    best_plus = std::max(best_plus, op);
    best_minus = std::max(best_minus, om);
    auto row = time_columns(ev, i);
    row.insert(row.end(), {op, om});
    csv.row(row);
  }

  summary << "# bell: initial |0,1>, omega=" << format_number(config.params.omega)
          << " gamma=" << format_number(config.params.gamma)
          << " epsilon=" << format_number(config.params.epsilon) << " cm^-1, "
          << ev.trajectory.times.size() << " points\n"
          << "max overlap with (|0,1>+i|1,0>)/sqrt2 on grid: " << format_number(best_plus) << '\n'
          << "max overlap with (|0,1>-i|1,0>)/sqrt2 on grid: " << format_number(best_minus) << '\n';
  if (config.params.epsilon > 0.0) {
    const auto& h = ev.hamiltonian;
    for (int quarter : {1, 3}) {
      const Picoseconds t = relative_phase_time(h, 0, 1, quarter * std::numbers::pi / 2.0);
      const BellOverlaps o = bell_overlaps(config.params, t);
      summary << "relative phase " << quarter << "pi/2 at t=" << format_number(t.value)
              << " ps: overlaps " << format_number(o.plus_i) << ", " << format_number(o.minus_i)
              << '\n';
    }
    const Picoseconds half = relative_phase_time(h, 0, 1, std::numbers::pi);
    const double transfer = std::norm(evolve(h, psi0, half).amp(0));
    summary << "half period t=" << format_number(half.value)
            << " ps: population of |1,0> = " << format_number(transfer) << '\n';
  }
  return kExitOk;
}

int cmd_quadratures(const RunConfig& config, std::ostream& out, std::ostream& summary) {
  const Evolution ev = evolve_config(config);
  CsvWriter csv(out);
  csv.header({"t", "phase", "varQa", "varPa", "varQb", "varPb", "varD1", "varD2"});
  double min_single = std::numeric_limits<double>::infinity();
  double min_two = std::numeric_limits<double>::infinity();
  bool single_flag = false;
  bool two_flag = false;
  for (std::size_t i = 0; i < ev.trajectory.states.size(); ++i) {
    const QuadratureReport q = quadrature_report(ev.trajectory.states[i]);
    min_single = std::min({min_single, q.varQa, q.varPa, q.varQb, q.varPb});
    min_two = std::min({min_two, q.varD1, q.varD2});
    single_flag = single_flag || q.squeezing_single;
    two_flag = two_flag || q.squeezing_two_mode;
    auto row = time_columns(ev, i);
    row.insert(row.end(), {q.varQa, q.varPa, q.varQb, q.varPb, q.varD1, q.varD2});
    csv.row(row);
  }
  summary_header(summary, "quadratures", config, ev);
  summary << "min single-mode variance: " << format_number(min_single) << " (vacuum "
          << format_number(kSingleModeVacuumVariance) << ")\n"
          << "min two-mode variance: " << format_number(min_two) << " (vacuum "
          << format_number(kTwoModeVacuumVariance) << ")\n"
          << "single-mode squeezing: " << (single_flag ? "yes" : "no") << '\n'
          << "two-mode squeezing: " << (two_flag ? "yes" : "no") << '\n';
  return kExitOk;
}

int cmd_perturb(const RunConfig& config, std::ostream& out, std::ostream& summary) {
  validate(config);
  const auto pair = parse_fock_pair(config.initial);
  if (!pair) throw UsageError("perturb needs a canonical initial state 'n,m'");
  const int total = pair->total();
  const int m = pair->m;

  const PerturbedState p = perturbed_state(total, m, config.params);
  const auto [mag1, mag2] = admixture_magnitudes(total, m, config.params);
  out << "unperturbed state: " << ket(total - m, m) << " (N=" << total << ", m=" << m << ")\n"
      << "f1 on " << ket(total - m + 1, m - 1) << ": " << format_number(p.f1)
      << " (closed-form magnitude " << format_number(mag1) << ")\n"
      << "f2 on " << ket(total - m - 1, m + 1) << ": " << format_number(p.f2)
      << " (closed-form magnitude " << format_number(mag2) << ")\n"
      << "valid: " << (p.valid ? "true" : "false") << '\n'
      << "weak validity (gamma < 4 epsilon): " << (p.weak_validity ? "true" : "false") << '\n';
  if (!p.valid) {
    out << p.diagnostic << '\n';
    summary << "# perturb: " << p.diagnostic << '\n';
    return kExitOk;
  }
  const EigenstateOverlap ov = eigenstate_overlap(total, m, config.params);
  out << "exact eigenspace overlap: " << format_number(ov.level) << '\n'
      << "best single exact eigenvector overlap: " << format_number(ov.best_single) << '\n';
  if (!p.diagnostic.empty()) out << p.diagnostic << '\n';
  summary << "# perturb: " << ket(total - m, m) << " overlap " << format_number(ov.level) << '\n';
  return kExitOk;
}

}  // namespace lmode::cli
