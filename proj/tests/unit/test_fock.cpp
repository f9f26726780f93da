#include "doctest.h"

#include <cmath>
#include <limits>

#include "lmode/errors.hpp"
#include "lmode/fock.hpp"
#include "lmode/ladder.hpp"
#include "oracle/oracle.hpp"

using namespace lmode;

namespace {

SubspaceState bell_real() { return {1, {1.0, 1.0}}; }

}  // namespace

TEST_SUITE("fock") {

TEST_CASE("ladder factors are running square-root products") {
  CHECK(lowering_factor(5, 0) == 1.0);
  CHECK(lowering_factor(5, 2) == doctest::Approx(std::sqrt(20.0)).epsilon(1e-15));
  CHECK(lowering_factor(2, 3) == 0.0);
  CHECK(raising_factor(3, 2) == doctest::Approx(std::sqrt(20.0)).epsilon(1e-15));
  // 200!/100! overflows a double; the ratio of square roots should not
  CHECK(std::isfinite(lowering_factor(200, 50)));
}

TEST_CASE("model parameters") {
  const ModelParams p = ModelParams::representative();
  CHECK(p.omega == 3050.0);
  CHECK(p.gamma == 125.0);
  CHECK(p.epsilon == 30.0);
  CHECK_NOTHROW(p.validate());
  CHECK_THROWS_AS((ModelParams{0.0, 125.0, 30.0}.validate()), DomainError);
  CHECK_THROWS_AS((ModelParams{3050.0, -1.0, 30.0}.validate()), DomainError);
  CHECK_THROWS_AS((ModelParams{3050.0, 125.0, -1.0}.validate()), DomainError);
  CHECK_THROWS_AS((ModelParams{3050.0, std::nan(""), 30.0}.validate()), DomainError);
  CHECK_NOTHROW((ModelParams{3050.0, 0.0, 0.0}.validate()));
}

TEST_CASE("subspace state construction") {
  SUBCASE("basis indexing counts quanta in mode b") {
    const auto s = SubspaceState::basis({2, 1});
    CHECK(s.total() == 3);
    CHECK(s.dim() == 4);
    CHECK(s.amp(1) == cplx{1.0});
    CHECK(s.amp(0) == cplx{});
  }
  SUBCASE("renormalizes and records the correction") {
    const SubspaceState s(1, {3.0, 4.0});
    CHECK(std::abs(s.amp(0)) == doctest::Approx(0.6));
    CHECK(std::abs(s.amp(1)) == doctest::Approx(0.8));
    CHECK(s.norm_correction() == doctest::Approx(4.0));
    CHECK(SubspaceState::basis({1, 0}).norm_correction() == 0.0);
  }
  SUBCASE("rejects malformed input") {
    CHECK_THROWS_AS(SubspaceState(2, {1.0, 0.0}), DimensionError);
    CHECK_THROWS_AS(SubspaceState(-1, {}), DomainError);
    CHECK_THROWS_AS(SubspaceState(1, {0.0, 0.0}), DomainError);
    CHECK_THROWS_AS(SubspaceState(1, {std::numeric_limits<double>::infinity(), 0.0}),
                    DomainError);
    CHECK_THROWS_AS(SubspaceState::basis({-1, 2}), DomainError);
  }
  SUBCASE("inner products need a common subspace") {
    CHECK_THROWS_AS(inner_product(SubspaceState::basis({1, 0}), SubspaceState::basis({1, 1})),
                    DimensionError);
    CHECK(std::abs(inner_product(bell_real(), SubspaceState::basis({1, 0}))) ==
          doctest::Approx(1.0 / std::sqrt(2.0)));
  }
}

TEST_CASE("moments of simple states") {
  const auto s = SubspaceState::basis({2, 1});
  CHECK(expectation_monomial(s, {1, 1, 0, 0}).real() == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(expectation_monomial(s, {0, 0, 1, 1}) == cplx{1.0});
  CHECK(expectation_monomial(s, {2, 2, 0, 0}).real() == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(expectation_monomial(s, {1, 0, 0, 1}) == cplx{});

  // (|1,0> + |0,1>)/sqrt2: <a+ b> = 1/2
  const cplx hop = expectation_monomial(bell_real(), {1, 0, 0, 1});
  CHECK(hop.real() == doctest::Approx(0.5));
  CHECK(hop.imag() == doctest::Approx(0.0));

  const SubspaceState vac(0, {1.0});
  CHECK(expectation_monomial(vac, {}) == cplx{1.0});
  CHECK(expectation_monomial(vac, {1, 1, 0, 0}) == cplx{});
}

TEST_CASE("is_product") {
  CHECK(is_product(SubspaceState::basis({2, 2})));
  CHECK_FALSE(is_product(bell_real()));
  CHECK(is_product(SubspaceState(1, {std::sqrt(1.0 - 1e-14), 1e-7})));
  CHECK_FALSE(is_product(SubspaceState(1, {std::sqrt(1.0 - 1e-10), 1e-5})));
}

TEST_CASE("property: selection rule gives exact zeros") {
  oracle::StateGen gen(0x5e1ec7);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const auto state = gen.state(0, 6);
    const auto mono = gen.monomial(3);
    if (mono.quanta_change() == 0) continue;
    CHECK(expectation_monomial(state, mono) == cplx{});
    ++checked;
  }
  CHECK(checked > 200);
}

TEST_CASE("property: moments are Hermitian") {
  oracle::StateGen gen(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto state = gen.state(0, 6);
    const auto mono = gen.monomial(3);
    const cplx x = expectation_monomial(state, mono);
    const cplx y = expectation_monomial(state, mono.adjoint());
    CHECK(std::abs(x - std::conj(y)) <= 1e-12 * std::max(1.0, std::abs(x)));
  }
}

TEST_CASE("property: moments agree with dense Kronecker operators") {
  oracle::StateGen gen(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const auto state = gen.state(0, 4);
    auto mono = gen.monomial(3);
    // keep most draws on the number-conserving shell so the values are nonzero
    if (trial % 4 != 0) mono.s = std::max(0, mono.p + mono.r - mono.q);
    const cplx fast = expectation_monomial(state, mono);
    const cplx dense = oracle::dense_moment(state, mono);
    INFO("N=" << state.total() << " mono=" << mono.p << mono.q << mono.r << mono.s);
    CHECK(std::abs(fast - dense) <= 1e-12 * std::max(1.0, std::abs(dense)));
  }
}

TEST_CASE("property: total number is conserved inside S_N") {
  oracle::StateGen gen(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto state = gen.state(0, 12);
    const double na = expectation_monomial(state, {1, 1, 0, 0}).real();
    const double nb = expectation_monomial(state, {0, 0, 1, 1}).real();
    CHECK(na + nb == doctest::Approx(state.total()).epsilon(1e-14));
  }
}

}  // TEST_SUITE
