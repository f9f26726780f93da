#pragma once

#include "lmode/fock.hpp"

namespace lmode {

/// Vacuum variance of Q = (a + a+)/sqrt2 and P = (a - a+)/(i sqrt2), [Q, P] = i.
inline constexpr double kSingleModeVacuumVariance = 0.5;
/// Vacuum variance of d1 = (a + b + a+ + b+)/2^(3/2) and
/// d2 = (a + b - a+ - b+)/(i 2^(3/2)), [d1, d2] = i/2.
inline constexpr double kTwoModeVacuumVariance = 0.25;
inline constexpr double kSqueezingTolerance = 1e-12;

/// Quadrature variances in the hbar = 1 convention.
struct QuadratureReport {
  double varQa = 0.0;
  double varPa = 0.0;
  double varQb = 0.0;
  double varPb = 0.0;
  double varD1 = 0.0;
  double varD2 = 0.0;
  /// Some single-mode variance is below the vacuum level 1/2.
  bool squeezing_single = false;
  /// Some two-mode variance is below the vacuum level 1/4 (uncertainty below 1/2).
  bool squeezing_two_mode = false;
};

/// All variances are expanded through the normal-ordering engine; nothing
/// relies on the S_N selection rules.
QuadratureReport quadrature_report(const SubspaceState& state);

namespace closed_form {

/// (1 + 2 <n>)/2, valid on S_N where <a> = <a^2> = 0.
double single_mode_variance(double mean_number);
/// (1 + N + <ab+> + <a+b>)/4 on S_N.
double two_mode_variance(int total, cplx adag_b);

}  // namespace closed_form

}  // namespace lmode
