#pragma once

#include <complex>
#include <compare>
#include <span>
#include <vector>

namespace lmode {

using cplx = std::complex<double>;

/// Spectroscopic constants of the two coupled local-mode oscillators, in cm^-1.
///
/// omega is the harmonic frequency, gamma the anharmonicity (the nonlinear
/// term enters the Hamiltonian with a negative sign) and epsilon the bilinear
/// coupling strength between the two C-H stretches.
struct ModelParams {
  double omega = 3050.0;
  double gamma = 125.0;
  double epsilon = 30.0;

  /// Representative dihalomethane values: 3050 / 125 / 30 cm^-1.
  static constexpr ModelParams representative() { return {}; }

  /// Throws DomainError unless omega > 0, gamma >= 0, epsilon >= 0 (all finite).
  void validate() const;

  friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

/// Number state |n, m>: n quanta in mode a, m quanta in mode b.
struct FockPair {
  int n = 0;
  int m = 0;

  constexpr int total() const { return n + m; }
  friend auto operator<=>(const FockPair&, const FockPair&) = default;
};

/// Exponents of the normally ordered monomial a+^p a^q b+^r b^s.
struct NormalMonomial {
  int p = 0;
  int q = 0;
  int r = 0;
  int s = 0;

  /// Net change in total quanta; expectation values on S_N vanish unless zero.
  constexpr int quanta_change() const { return (p + r) - (q + s); }
  /// Monomial of the Hermitian adjoint, (q, p, s, r).
  constexpr NormalMonomial adjoint() const { return {q, p, s, r}; }

  friend auto operator<=>(const NormalMonomial&, const NormalMonomial&) = default;
};

/// Pure state confined to the invariant subspace S_N.
///
/// amps[j] is the amplitude of |N-j, j>, i.e. j counts the quanta in mode b.
/// This ordering is used everywhere in the library. States are normalized at
/// construction; the size of the correction that was applied is kept so that
/// callers can detect norm drift.
class SubspaceState {
 public:
  static constexpr double kNormTolerance = 1e-12;

  SubspaceState(int total, std::vector<cplx> amps);

  /// Canonical basis state |n, m> inside S_{n+m}.
  static SubspaceState basis(FockPair pair);

  int total() const { return total_; }
  std::size_t dim() const { return amps_.size(); }
  std::span<const cplx> amps() const { return amps_; }
  cplx amp(int j) const { return amps_.at(static_cast<std::size_t>(j)); }

  /// | ||raw amplitudes|| - 1 | measured before renormalization.
  double norm_correction() const { return norm_correction_; }

 private:
  int total_;
  std::vector<cplx> amps_;
  double norm_correction_ = 0.0;
};

/// <x|y>. Throws DimensionError when the states belong to different subspaces.
cplx inner_product(const SubspaceState& x, const SubspaceState& y);

/// Exact <psi| a+^p a^q b+^r b^s |psi> on S_N.
///
/// Evaluated as <a^p b^r psi | a^q b^s psi> with ladder factors accumulated as
/// running products of square roots. Returns exactly zero when the monomial
/// changes the total number of quanta.
cplx expectation_monomial(const SubspaceState& state, const NormalMonomial& mono);

/// A state in S_N is separable iff a single amplitude carries all the weight.
bool is_product(const SubspaceState& state, double tol = 1e-12);

}  // namespace lmode
