#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lmode/fock.hpp"

namespace lmode {

/// Diagonal of the reduced density operator. For an S_N state both reduced
/// operators share the same multiset: probs[j] is the probability that mode b
/// holds j quanta (and mode a holds N-j).
struct ReducedSpectrum {
  std::vector<double> probs;
};

ReducedSpectrum reduced_spectrum(const SubspaceState& state);

/// 1 - Tr rho_a^2.
double linear_entropy(const SubspaceState& state);
/// -Tr rho_a log2 rho_a, in bits.
double von_neumann_entropy(const SubspaceState& state);
/// von_neumann_entropy / log2(N+1). Throws DomainError for N = 0.
double normalized_entropy(const SubspaceState& state);

/// Values at or above -kDetectionThreshold are reported as "not detected".
inline constexpr double kDetectionThreshold = 1e-12;

/// One entanglement witness. Every criterion is rearranged so that a
/// negative value certifies entanglement; non-negative values are inconclusive.
struct WitnessReport {
  static constexpr std::string_view kConvention = "negative => entangled";

  std::string name;
  double value = 0.0;
  bool detected = false;
};

WitnessReport make_witness(std::string name, double value);

/// Low-order moments used by the witnesses, all from the moment engine.
struct NumberMoments {
  double na = 0.0;     // <a+a>
  double nb = 0.0;     // <b+b>
  double nab = 0.0;    // <a+a b+b>
  double na_sq = 0.0;  // <(a+a)^2>
  cplx adag_b;         // <a+b>
  cplx a2_bdag2;       // <a^2 b+^2>
};

NumberMoments number_moments(const SubspaceState& state);

struct VarianceWitnesses {
  double var_u = 0.0;  // at the requested lambda
  double var_v = 0.0;
  /// var_u + var_v - (lambda^4 + 1)/lambda^2
  WitnessReport duan;
  /// var_u var_v - 1 at lambda = 1
  WitnessReport mancini;
};

/// Duan-type sum and Mancini product criteria for the EPR-like pair
///   u = [|lambda|(a + a+) + (b + b+)/lambda] / sqrt2
///   v = [|lambda|(a - a+) - (b - b+)/lambda] / (i sqrt2).
/// Throws DomainError when lambda is zero or not finite.
VarianceWitnesses variance_witnesses(const SubspaceState& state, double lambda = 1.0);

struct DeterminantWitnesses {
  /// | 1      <a+>    <b+>   |
  /// | <a>    <a+a>   <a+b+> |
  /// | <b>    <ab>    <b+b>  |
  WitnessReport d3;
  /// | 1      <b>      <ab+>      |
  /// | <b+>   <b+b>    <a+b+b>    |
  /// | <a+b>  <a+b+b>  <a+a b+b>  |
  WitnessReport ecs;
};

DeterminantWitnesses determinant_witnesses(const SubspaceState& state);

/// Readings of the last term of the SU(1,1) witness, whose usual written form is
/// typographically ambiguous.
enum class Su11Reading {
  sum_squared,         // (N_a + N_b)^2, the adopted reading
  abs_sum_squared,     // |N_a + N_b|^2, identical for real moments
  difference_squared,  // (N_a - N_b)^2
};

/// f11 = [1 + 2N_ab + N_a + N_b - 2N_aN_b]^2
///       - 4[(Re<a^2 b+^2>)^2 - (Re<a+b>)^2]^2 - last(reading)
double su11_value(const NumberMoments& mom, Su11Reading reading = Su11Reading::sum_squared);

struct AlgebraicWitnesses {
  WitnessReport su2;
  WitnessReport su11;
  WitnessReport simon;
  WitnessReport hz;
};

AlgebraicWitnesses algebraic_witnesses(const SubspaceState& state);

/// D = <a+a b+b> - <a+a><b+b>. Zero for product states; strictly negative
/// for every entangled state of an invariant subspace.
WitnessReport number_correlation_D(const SubspaceState& state);

/// Names of the nine witnesses in battery order.
const std::vector<std::string>& witness_names();

/// duan, mancini, d3, ecs, su2, su11, simon, hz, D.
std::vector<WitnessReport> witness_battery(const SubspaceState& state, double lambda = 1.0);

/// S_N closed forms for cross-checking the moment engine.
namespace closed_form {

/// (lambda^4 + 1)/lambda^2 + lambda^2 N_a + N_b/lambda^2 as it appears in the
/// literature. Only agrees with the operator algebra when N_a = N_b = 0.
double duan_sum_literature(double na, double nb, double lambda);
/// lambda^2 (1 + 2N_a) + (1 + 2N_b)/lambda^2, from <a> = <a^2> = <ab> = 0 on S_N.
double duan_sum(double na, double nb, double lambda);
/// N_a N_b.
double d3(double na, double nb);
/// <a+a b+b> <b+b> as it appears in the literature. Drops the
/// -<b+b>|<a+b>|^2 contribution of the off-diagonal corner entries.
double ecs_literature(double nab, double nb);
/// <b+b> (<a+a b+b> - |<a+b>|^2), the full determinant on S_N.
double ecs(double nab, double nb, cplx adag_b);

}  // namespace closed_form

}  // namespace lmode
