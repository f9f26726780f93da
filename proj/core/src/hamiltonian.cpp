#include "lmode/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "lmode/errors.hpp"
#include "lmode/full_space.hpp"

namespace lmode {

double diagonal_energy(int total, int j, const ModelParams& params) {
  const double n = total;
  const double k = j;
  return params.omega * n - 0.5 * params.gamma * (n * n + n - 2.0 * n * k + 2.0 * k * k);
}

double coupling_element(int total, int j, const ModelParams& params) {
  return -params.epsilon * std::sqrt(static_cast<double>((j + 1) * (total - j)));
}

SubspaceHamiltonian::SubspaceHamiltonian(int total, const ModelParams& params)
    : total_(total), params_(params) {
  if (total < 0) throw DomainError("total quantum number must be non-negative");
  params.validate();

  const Eigen::Index dim = total + 1;
  matrix_ = Eigen::MatrixXd::Zero(dim, dim);
  for (int j = 0; j <= total; ++j) matrix_(j, j) = diagonal_energy(total, j, params);
  for (int j = 0; j < total; ++j) {
    matrix_(j, j + 1) = coupling_element(total, j, params);
    matrix_(j + 1, j) = matrix_(j, j + 1);
  }

  offset_ = matrix_.diagonal().mean();
  const Eigen::MatrixXd shifted = matrix_ - offset_ * Eigen::MatrixXd::Identity(dim, dim);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(shifted);
  if (solver.info() != Eigen::Success) throw Error("eigensolver failed to converge");
  relative_ = solver.eigenvalues();
  eigenvectors_ = solver.eigenvectors();

  for (Eigen::Index k = 0; k < dim; ++k) {
    auto column = eigenvectors_.col(k);
    const double peak = column.cwiseAbs().maxCoeff();
    Eigen::Index pivot = 0;
    while (std::abs(column(pivot)) < peak - 1e-12) ++pivot;
    if (column(pivot) < 0.0) column = -column;
  }
}

Eigen::VectorXd SubspaceHamiltonian::eigenvalues() const {
  return relative_.array() + offset_;
}

SubspaceHamiltonian build_subspace_hamiltonian(int total, const ModelParams& params) {
  return {total, params};
}

Eigen::MatrixXd build_full_hamiltonian(int cutoff, const ModelParams& params) {
  if (cutoff < 0) throw DomainError("cutoff must be non-negative");
  params.validate();
  const Eigen::Index side = cutoff + 1;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(side * side, side * side);
  const double linear = params.omega - 0.5 * params.gamma;
  const double quadratic = 0.5 * params.gamma;
  for (int n = 0; n <= cutoff; ++n) {
    for (int m = 0; m <= cutoff; ++m) {
      const Eigen::Index col = full_index({n, m}, cutoff);
      // (omega - gamma/2)(n_a + n_b) - (gamma/2)(n_a^2 + n_b^2)
      h(col, col) = linear * (n + m) - quadratic * (n * n + m * m);
      // -epsilon a+ b |n, m> = -epsilon sqrt((n+1) m) |n+1, m-1>
      if (m > 0 && n < cutoff) {
        const Eigen::Index row = full_index({n + 1, m - 1}, cutoff);
        h(row, col) += -params.epsilon * std::sqrt(static_cast<double>((n + 1) * m));
      }
      // -epsilon a b+ |n, m> = -epsilon sqrt(n (m+1)) |n-1, m+1>
      if (n > 0 && m < cutoff) {
        const Eigen::Index row = full_index({n - 1, m + 1}, cutoff);
        h(row, col) += -params.epsilon * std::sqrt(static_cast<double>(n * (m + 1)));
      }
    }
  }
  return h;
}

PerturbedState perturbed_state(int total, int m, const ModelParams& params) {
  if (total < 0 || m < 0 || m > total) {
    throw DomainError("perturbed state needs 0 <= m <= N");
  }
  params.validate();

  PerturbedState out;
  out.total = total;
  out.m = m;
  out.weak_validity = params.gamma < 4.0 * params.epsilon;

  // Generic first-order coefficient <k|V|n> / (E_n - E_k) for the two
  // neighbours that the coupling reaches.
  const double e_n = diagonal_energy(total, m, params);
  auto coefficient = [&](int k, double element) {
    if (element == 0.0) return 0.0;
    const double gap = e_n - diagonal_energy(total, k, params);
    if (gap == 0.0) return std::copysign(std::numeric_limits<double>::infinity(), element);
    return element / gap;
  };
  out.f1 = m > 0 ? coefficient(m - 1, coupling_element(total, m - 1, params)) : 0.0;
  out.f2 = m < total ? coefficient(m + 1, coupling_element(total, m, params)) : 0.0;

  if (std::abs(total - 2 * m) == 1) {
    out.diagnostic =
        "perturbation theory not applicable: |N-2m| = 1 couples the degenerate pair |" +
        std::to_string(total - m) + "," + std::to_string(m) + "> and |" + std::to_string(m) + "," +
        std::to_string(total - m) + "> directly";
    return out;
  }
  if (params.gamma == 0.0) {
    out.diagnostic = "first order perturbation theory fails: gamma = 0";
    return out;
  }

  std::vector<cplx> amps(static_cast<std::size_t>(total) + 1, cplx{0.0, 0.0});
  amps[static_cast<std::size_t>(m)] = 1.0;
  if (m > 0) amps[static_cast<std::size_t>(m - 1)] = out.f1;
  if (m < total) amps[static_cast<std::size_t>(m + 1)] = out.f2;
  out.state.emplace(total, std::move(amps));
  out.valid = true;
  if (out.weak_validity) {
    out.diagnostic = "weak validity: gamma < 4 epsilon, admixtures are not small";
  }
  return out;
}

std::pair<double, double> admixture_magnitudes(int total, int m, const ModelParams& params) {
  const double ratio = params.epsilon / params.gamma;
  const double n = total;
  const double k = m;
  const double f1 = ratio * std::sqrt((n - k + 1.0) * k) / std::abs(1.0 + n - 2.0 * k);
  const double f2 = ratio * std::sqrt((n - k) * (k + 1.0)) / std::abs(1.0 - n + 2.0 * k);
  return {f1, f2};
}

EigenstateOverlap eigenstate_overlap(int total, int m, const ModelParams& params) {
  const PerturbedState pert = perturbed_state(total, m, params);
  if (!pert.valid) throw DomainError(pert.diagnostic);

  const SubspaceHamiltonian h(total, params);
  const Eigen::MatrixXd& vecs = h.eigenvectors();
  const Eigen::Index dim = vecs.cols();
  const int partner = total - m;

  Eigen::VectorXcd psi(dim);
  for (Eigen::Index j = 0; j < dim; ++j) psi(j) = pert.state->amp(static_cast<int>(j));
  Eigen::VectorXd overlaps(dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    overlaps(k) = std::abs(vecs.col(k).cast<cplx>().dot(psi));
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(dim));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  auto weight = [&](Eigen::Index k) {
    double w = vecs(m, k) * vecs(m, k);
    if (partner != m) w += vecs(partner, k) * vecs(partner, k);
    return w;
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index x, Eigen::Index y) { return weight(x) > weight(y); });

  EigenstateOverlap out;
  const std::size_t level_size = partner == m ? 1 : 2;
  double projected = 0.0;
  for (std::size_t i = 0; i < level_size; ++i) projected += overlaps(order[i]) * overlaps(order[i]);
  out.level = std::min(1.0, std::sqrt(projected));

  Eigen::Index closest = 0;
  vecs.row(m).cwiseAbs().maxCoeff(&closest);
  out.best_single = overlaps(closest);
  return out;
}

}  // namespace lmode
