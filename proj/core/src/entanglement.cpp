#include "lmode/entanglement.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "lmode/errors.hpp"
#include "lmode/normal_order.hpp"

namespace lmode {

namespace {

cplx moment(const SubspaceState& state, int p, int q, int r, int s) {
  return expectation_monomial(state, {p, q, r, s});
}

}  // namespace

ReducedSpectrum reduced_spectrum(const SubspaceState& state) {
  ReducedSpectrum out;
  out.probs.reserve(state.dim());
  for (const auto& c : state.amps()) out.probs.push_back(std::norm(c));
  return out;
}

double linear_entropy(const SubspaceState& state) {
  double purity = 0.0;
  for (double p : reduced_spectrum(state).probs) purity += p * p;
  return 1.0 - purity;
}

double von_neumann_entropy(const SubspaceState& state) {
  double s = 0.0;
  for (double p : reduced_spectrum(state).probs) {
    p = std::min(p, 1.0);  // |amp|^2 of a phased basis state can round to 1 + 1 ulp
    if (p > 0.0) s -= p * std::log2(p);
  }
  return s;
}

double normalized_entropy(const SubspaceState& state) {
  if (state.total() == 0) throw DomainError("normalized entropy is undefined on S_0");
  return von_neumann_entropy(state) / std::log2(static_cast<double>(state.total() + 1));
}

WitnessReport make_witness(std::string name, double value) {
  return {std::move(name), value, value < -kDetectionThreshold};
}

NumberMoments number_moments(const SubspaceState& state) {
  NumberMoments m;
  m.na = moment(state, 1, 1, 0, 0).real();
  m.nb = moment(state, 0, 0, 1, 1).real();
  m.nab = moment(state, 1, 1, 1, 1).real();
  const NormalPolynomial na_op({1, 1, 0, 0});
  m.na_sq = expectation(state, na_op * na_op).real();
  m.adag_b = moment(state, 1, 0, 0, 1);
  m.a2_bdag2 = moment(state, 0, 2, 2, 0);
  return m;
}

VarianceWitnesses variance_witnesses(const SubspaceState& state, double lambda) {
  if (lambda == 0.0 || !std::isfinite(lambda)) {
    throw DomainError("Duan scale lambda must be finite and nonzero");
  }
  using P = NormalPolynomial;
  const cplx inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const cplx minus_i_over_sqrt2 = cplx{0.0, -1.0} * inv_sqrt2;

  auto u_of = [&](double l) {
    return inv_sqrt2 * (std::abs(l) * (P::a() + P::a_dag()) + (1.0 / l) * (P::b() + P::b_dag()));
  };
  auto v_of = [&](double l) {
    return minus_i_over_sqrt2 *
           (std::abs(l) * (P::a() - P::a_dag()) - (1.0 / l) * (P::b() - P::b_dag()));
  };

  VarianceWitnesses out;
  out.var_u = variance(state, u_of(lambda));
  out.var_v = variance(state, v_of(lambda));
  const double l2 = lambda * lambda;
  out.duan = make_witness("duan", out.var_u + out.var_v - (l2 * l2 + 1.0) / l2);

  const double var_u1 = variance(state, u_of(1.0));
  const double var_v1 = variance(state, v_of(1.0));
  out.mancini = make_witness("mancini", var_u1 * var_v1 - 1.0);
  return out;
}

DeterminantWitnesses determinant_witnesses(const SubspaceState& state) {
  Eigen::Matrix3cd d3;
  d3 << 1.0, moment(state, 1, 0, 0, 0), moment(state, 0, 0, 1, 0),
      moment(state, 0, 1, 0, 0), moment(state, 1, 1, 0, 0), moment(state, 1, 0, 1, 0),
      moment(state, 0, 0, 0, 1), moment(state, 0, 1, 0, 1), moment(state, 0, 0, 1, 1);

  // Entries (2,3) and (3,2) are both <a+ b+ b>; the matrix is kept as commonly written.
  const cplx a_dag_nb = moment(state, 1, 0, 1, 1);
  Eigen::Matrix3cd ecs;
  ecs << 1.0, moment(state, 0, 0, 0, 1), moment(state, 0, 1, 1, 0),
      moment(state, 0, 0, 1, 0), moment(state, 0, 0, 1, 1), a_dag_nb,
      moment(state, 1, 0, 0, 1), a_dag_nb, moment(state, 1, 1, 1, 1);

  return {make_witness("d3", d3.determinant().real()),
          make_witness("ecs", ecs.determinant().real())};
}

double su11_value(const NumberMoments& mom, Su11Reading reading) {
  const double bracket = 1.0 + 2.0 * mom.nab + mom.na + mom.nb - 2.0 * mom.na * mom.nb;
  const double re_pair = mom.a2_bdag2.real();
  const double re_hop = mom.adag_b.real();
  const double middle = re_pair * re_pair - re_hop * re_hop;
  double last = 0.0;
  switch (reading) {
    case Su11Reading::sum_squared:
      last = (mom.na + mom.nb) * (mom.na + mom.nb);
      break;
    case Su11Reading::abs_sum_squared:
      last = std::norm(cplx{mom.na + mom.nb, 0.0});
      break;
    case Su11Reading::difference_squared:
      last = (mom.na - mom.nb) * (mom.na - mom.nb);
      break;
  }
  return bracket * bracket - 4.0 * middle * middle - last;
}

AlgebraicWitnesses algebraic_witnesses(const SubspaceState& state) {
  const NumberMoments mom = number_moments(state);
  AlgebraicWitnesses out;

  out.su2 = make_witness(
      "su2", mom.nab * (4.0 * mom.nab + 2.0 * mom.na + 2.0 * mom.nb) + 4.0 * mom.na * mom.nb);
  out.su11 = make_witness("su11", su11_value(mom));

  const cplx hop = std::conj(mom.adag_b);  // <a b+>
  const double hop2 = std::norm(hop);
  const double simon = 0.5 * hop.real() * hop.real() + hop2 * hop2 -
                       hop2 * (mom.na + mom.nb + 2.0 * mom.na * mom.nb) +
                       (1.0 + 2.0 * mom.na) * (1.0 + 2.0 * mom.na) * (1.0 + 2.0 * mom.nb) *
                           (1.0 + 2.0 * mom.nb) / 16.0;
  out.simon = make_witness("simon", simon);
  out.hz = make_witness("hz", mom.na * mom.nb - std::norm(mom.adag_b));
  return out;
}

WitnessReport number_correlation_D(const SubspaceState& state) {
  const NumberMoments mom = number_moments(state);
  return make_witness("D", mom.nab - mom.na * mom.nb);
}

const std::vector<std::string>& witness_names() {
  static const std::vector<std::string> names{"duan", "mancini", "d3",    "ecs", "su2",
                                              "su11", "simon",   "hz",    "D"};
  return names;
}

std::vector<WitnessReport> witness_battery(const SubspaceState& state, double lambda) {
  const auto var = variance_witnesses(state, lambda);
  const auto det = determinant_witnesses(state);
  const auto alg = algebraic_witnesses(state);
  return {var.duan, var.mancini, det.d3,    det.ecs, alg.su2,
          alg.su11, alg.simon,   alg.hz,    number_correlation_D(state)};
}

namespace closed_form {

double duan_sum_literature(double na, double nb, double lambda) {
  const double l2 = lambda * lambda;
  return (l2 * l2 + 1.0) / l2 + l2 * na + nb / l2;
}

double duan_sum(double na, double nb, double lambda) {
  const double l2 = lambda * lambda;
  return l2 * (1.0 + 2.0 * na) + (1.0 + 2.0 * nb) / l2;
}

double d3(double na, double nb) { return na * nb; }

double ecs_literature(double nab, double nb) { return nab * nb; }

double ecs(double nab, double nb, cplx adag_b) { return nb * (nab - std::norm(adag_b)); }

}  // namespace closed_form

}  // namespace lmode
