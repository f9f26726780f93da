#include "lmode/quadratures.hpp"

#include <algorithm>
#include <cmath>

#include "lmode/normal_order.hpp"

namespace lmode {

QuadratureReport quadrature_report(const SubspaceState& state) {
  using P = NormalPolynomial;
  const cplx inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const cplx minus_i_over_sqrt2 = cplx{0.0, -1.0} * inv_sqrt2;
  const cplx inv_2sqrt2 = 1.0 / std::pow(2.0, 1.5);
  const cplx minus_i_over_2sqrt2 = cplx{0.0, -1.0} * inv_2sqrt2;

  QuadratureReport out;
  out.varQa = variance(state, inv_sqrt2 * (P::a() + P::a_dag()));
  out.varPa = variance(state, minus_i_over_sqrt2 * (P::a() - P::a_dag()));
  out.varQb = variance(state, inv_sqrt2 * (P::b() + P::b_dag()));
  out.varPb = variance(state, minus_i_over_sqrt2 * (P::b() - P::b_dag()));
  out.varD1 = variance(state, inv_2sqrt2 * (P::a() + P::b() + P::a_dag() + P::b_dag()));
  out.varD2 = variance(state, minus_i_over_2sqrt2 * (P::a() + P::b() - P::a_dag() - P::b_dag()));

  const double single = std::min({out.varQa, out.varPa, out.varQb, out.varPb});
  out.squeezing_single = single < kSingleModeVacuumVariance - kSqueezingTolerance;
  out.squeezing_two_mode =
      std::min(out.varD1, out.varD2) < kTwoModeVacuumVariance - kSqueezingTolerance;
  return out;
}

namespace closed_form {

double single_mode_variance(double mean_number) { return 0.5 * (1.0 + 2.0 * mean_number); }

double two_mode_variance(int total, cplx adag_b) {
  // <ab+> is the conjugate of <a+b>.
  return 0.25 * (1.0 + total + 2.0 * adag_b.real());
}

}  // namespace closed_form

}  // namespace lmode
