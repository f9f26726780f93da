#include <benchmark/benchmark.h>

#include <numbers>

#include "lmode/lmode.hpp"

using namespace lmode;

namespace {

SubspaceState spread_state(int total) {
  std::vector<cplx> amps;
  for (int j = 0; j <= total; ++j) amps.emplace_back(1.0 + j, 0.5 * j);
  return {total, std::move(amps)};
}

}  // namespace

static void BM_BuildSubspace(benchmark::State& state) {
  const int total = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(SubspaceHamiltonian(total, {}));
}
BENCHMARK(BM_BuildSubspace)->Arg(1)->Arg(4)->Arg(16)->Arg(64);

static void BM_Evolve(benchmark::State& state) {
  const int total = static_cast<int>(state.range(0));
  const SubspaceHamiltonian h(total, {});
  const auto psi = spread_state(total);
  double t = 0.0;
  for (auto _ : state) {
    t += 1e-3;
    benchmark::DoNotOptimize(evolve(h, psi, {t}));
  }
}
BENCHMARK(BM_Evolve)->Arg(1)->Arg(4)->Arg(16);

static void BM_Trajectory(benchmark::State& state) {
  const SubspaceHamiltonian h(4, {});
  const auto psi = SubspaceState::basis({2, 2});
  const auto grid = TimeSpec::uniform(TimeUnit::phase, 20.0 * std::numbers::pi,
                                      static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sample_trajectory(h, psi, grid));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Trajectory)->Arg(2001)->Arg(20001);

static void BM_WitnessBattery(benchmark::State& state) {
  const auto psi = spread_state(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(witness_battery(psi));
}
BENCHMARK(BM_WitnessBattery)->Arg(1)->Arg(4);

static void BM_Quadratures(benchmark::State& state) {
  const auto psi = spread_state(4);
  for (auto _ : state) benchmark::DoNotOptimize(quadrature_report(psi));
}
BENCHMARK(BM_Quadratures);

static void BM_Entropy(benchmark::State& state) {
  const auto psi = spread_state(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(von_neumann_entropy(psi));
}
BENCHMARK(BM_Entropy)->Arg(4)->Arg(64);

static void BM_FullSpaceOracle(benchmark::State& state) {
  const int cutoff = static_cast<int>(state.range(0));
  const Eigen::MatrixXd full_h = build_full_hamiltonian(cutoff, {});
  const Eigen::VectorXcd psi = embed_full(spread_state(4), cutoff).to_dense();
  for (auto _ : state) benchmark::DoNotOptimize(evolve_full(full_h, psi, {0.5}));
}
BENCHMARK(BM_FullSpaceOracle)->Arg(4)->Arg(6);

BENCHMARK_MAIN();
