#pragma once

#include <map>

#include <Eigen/Dense>

#include "lmode/fock.hpp"

namespace lmode {

/// Sparse two-mode Fock expansion. Keys are not bounded by any cutoff, which
/// lets raising operators act without truncation artefacts.
using FockAmplitudes = std::map<FockPair, cplx>;

/// General truncated two-mode state with n, m <= cutoff.
///
/// This is the brute-force representation the subspace shortcuts are checked
/// against. Entries with |amp| < 1e-300 are dropped; nothing else is pruned.
class FullTwoModeState {
 public:
  FullTwoModeState(int cutoff, FockAmplitudes amps);

  static FullTwoModeState from_dense(int cutoff, const Eigen::VectorXcd& dense);

  int cutoff() const { return cutoff_; }
  const FockAmplitudes& amps() const { return amps_; }
  cplx amp(FockPair pair) const;
  double norm_correction() const { return norm_correction_; }

  /// Dense vector in the row-major (n, m) ordering used by build_full_hamiltonian.
  Eigen::VectorXcd to_dense() const;

 private:
  int cutoff_;
  FockAmplitudes amps_;
  double norm_correction_ = 0.0;
};

/// Row-major position of |n, m> in a (cutoff+1)^2 dense vector.
Eigen::Index full_index(FockPair pair, int cutoff);

/// Place an S_N state into the full truncated space. Throws CapacityError if cutoff < N.
FullTwoModeState embed_full(const SubspaceState& state, int cutoff);

/// Apply a+^p a^q b+^r b^s to a raw expansion, one ladder operator at a time.
FockAmplitudes apply_monomial(const FockAmplitudes& ket, const NormalMonomial& mono);

/// <psi| a+^p a^q b+^r b^s |psi> by direct operator application in the full space.
cplx expectation_full(const FullTwoModeState& state, const NormalMonomial& mono);

/// Norm of the component lying outside S_total.
double weight_outside(const FullTwoModeState& state, int total);

/// Project onto S_total and renormalize.
SubspaceState restrict_to_subspace(const FullTwoModeState& state, int total);

}  // namespace lmode
