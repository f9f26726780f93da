#pragma once

#include <optional>
#include <string>

#include <Eigen/Dense>

#include "lmode/fock.hpp"

namespace lmode {

/// Diagonal energy of |N-j, j>: omega N - (gamma/2)(N^2 + N - 2Nj + 2j^2), in cm^-1.
double diagonal_energy(int total, int j, const ModelParams& params);

/// Coupling element <N-j-1, j+1| H |N-j, j> = -epsilon sqrt((j+1)(N-j)).
double coupling_element(int total, int j, const ModelParams& params);

/// Exact Hamiltonian restricted to S_N together with its eigensystem.
///
/// The eigenproblem is solved for the matrix shifted by its mean diagonal
/// energy so that eigenvalue differences keep full relative precision; the
/// absolute spectrum is energy_offset() + relative_eigenvalues(). Eigenvalues
/// are ascending and every eigenvector has its largest-magnitude component
/// real and positive.
class SubspaceHamiltonian {
 public:
  SubspaceHamiltonian(int total, const ModelParams& params);

  int total() const { return total_; }
  const ModelParams& params() const { return params_; }
  const Eigen::MatrixXd& matrix() const { return matrix_; }
  const Eigen::MatrixXd& eigenvectors() const { return eigenvectors_; }
  double energy_offset() const { return offset_; }
  const Eigen::VectorXd& relative_eigenvalues() const { return relative_; }
  Eigen::VectorXd eigenvalues() const;

 private:
  int total_;
  ModelParams params_;
  Eigen::MatrixXd matrix_;
  double offset_ = 0.0;
  Eigen::VectorXd relative_;
  Eigen::MatrixXd eigenvectors_;
};

SubspaceHamiltonian build_subspace_hamiltonian(int total, const ModelParams& params);

/// Hamiltonian on every |n, m> with n, m <= cutoff, assembled term by term
/// from the ladder-operator form. Basis ordering follows full_index().
Eigen::MatrixXd build_full_hamiltonian(int cutoff, const ModelParams& params);

/// First-order approximation to the eigenstate that continues |N-m, m>.
struct PerturbedState {
  int total = 0;
  int m = 0;
  /// Signed first-order coefficients on |N-m+1, m-1> (f1) and |N-m-1, m+1> (f2).
  /// Infinite when the corresponding energy denominator vanishes.
  double f1 = 0.0;
  double f2 = 0.0;
  bool valid = false;
  /// gamma < 4 epsilon: the expansion parameter is not small.
  bool weak_validity = false;
  std::string diagnostic;
  /// Normalized state; present only when valid.
  std::optional<SubspaceState> state;
};

PerturbedState perturbed_state(int total, int m, const ModelParams& params);

/// |f1| and |f2| from the closed-form magnitude expressions,
/// (eps/gamma) sqrt((N-m+1)m)/|1+N-2m| and (eps/gamma) sqrt((N-m)(m+1))/|1-N+2m|.
std::pair<double, double> admixture_magnitudes(int total, int m, const ModelParams& params);

struct EigenstateOverlap {
  /// Norm of the projection onto the exact eigenvectors that continue the
  /// unperturbed level of |N-m, m>: the degenerate pair {|N-m,m>, |m,N-m>}
  /// maps onto a two-dimensional exact eigenspace, the symmetric level onto one.
  double level = 0.0;
  /// |<v|psi_p>| for the single exact eigenvector v with the largest weight
  /// on |N-m, m>. Mode-swap symmetry delocalizes v across the pair, so this
  /// stays near 1/sqrt(2) for degenerate levels however small epsilon is.
  double best_single = 0.0;
};

/// Throws DomainError when the perturbed state is invalid (see diagnostic).
EigenstateOverlap eigenstate_overlap(int total, int m, const ModelParams& params);

}  // namespace lmode
