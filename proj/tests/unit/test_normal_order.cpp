#include "doctest.h"

#include <cmath>

#include "lmode/normal_order.hpp"
#include "oracle/oracle.hpp"

using namespace lmode;
using P = NormalPolynomial;

namespace {

cplx coeff(const P& poly, NormalMonomial mono) {
  const auto it = poly.terms().find(mono);
  return it == poly.terms().end() ? cplx{} : it->second;
}

}  // namespace

TEST_SUITE("normal_order") {

TEST_CASE("canonical commutators") {
  const P comm_a = P::a() * P::a_dag() - P::a_dag() * P::a();
  CHECK(comm_a.terms().size() == 1);
  CHECK(coeff(comm_a, {}) == cplx{1.0});

  const P comm_ab = P::a() * P::b_dag() - P::b_dag() * P::a();
  CHECK(comm_ab.terms().empty());
}

TEST_CASE("reordering a^2 a+^2") {
  // a^2 a+^2 = a+^2 a^2 + 4 a+ a + 2
  const P prod = multiply({0, 2, 0, 0}, {2, 0, 0, 0});
  CHECK(coeff(prod, {2, 2, 0, 0}) == cplx{1.0});
  CHECK(coeff(prod, {1, 1, 0, 0}) == cplx{4.0});
  CHECK(coeff(prod, {0, 0, 0, 0}) == cplx{2.0});
  CHECK(prod.terms().size() == 3);
}

TEST_CASE("adjoint conjugates coefficients") {
  const P x = cplx{0.0, 2.0} * P::a_dag() * P::b();
  const P y = x.adjoint();
  CHECK(coeff(y, {0, 1, 1, 0}) == cplx{0.0, -2.0});
}

TEST_CASE("vacuum quadrature variance") {
  const P q = (1.0 / std::sqrt(2.0)) * (P::a() + P::a_dag());
  const SubspaceState vac(0, {1.0});
  CHECK(variance(vac, q) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("property: polynomial expectations match dense operators") {
  oracle::StateGen gen(99);
  for (int trial = 0; trial < 100; ++trial) {
    const auto state = gen.state(0, 4);
    const cplx c1{gen.uniform(-1, 1), gen.uniform(-1, 1)};
    const cplx c2{gen.uniform(-1, 1), gen.uniform(-1, 1)};
    // X = (c1 a + c2 b+)(a+ b) + h.c. and its square
    const P left = c1 * P::a() + c2 * P::b_dag();
    const P right = P::a_dag() * P::b();
    const P x = left * right + (left * right).adjoint();

    const oracle::DenseModes m(state.total() + 6);
    const Eigen::MatrixXcd dl = c1 * m.a + c2 * m.b_dag();
    const Eigen::MatrixXcd dr = m.a_dag() * m.b;
    const Eigen::MatrixXcd dx = dl * dr + (dl * dr).adjoint();
    const Eigen::VectorXcd psi = m.lift(state);

    const cplx fast = expectation(state, x * x);
    const cplx dense = oracle::dense_expect(dx * dx, psi);
    CHECK(std::abs(fast - dense) <= 1e-11 * std::max(1.0, std::abs(dense)));
    CHECK(variance(state, x) ==
          doctest::Approx(oracle::dense_variance(dx, psi)).epsilon(1e-10));
  }
}

}  // TEST_SUITE
