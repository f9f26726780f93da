#include "lmode/full_space.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "lmode/errors.hpp"

namespace lmode {

namespace {

constexpr double kPruneBelow = 1e-300;

enum class Ladder { lower_a, raise_a, lower_b, raise_b };

FockAmplitudes apply_ladder(const FockAmplitudes& ket, Ladder op) {
  FockAmplitudes out;
  for (const auto& [pair, c] : ket) {
    FockPair to = pair;
    double factor = 0.0;
    switch (op) {
      case Ladder::lower_a:
        if (pair.n == 0) continue;
        factor = std::sqrt(static_cast<double>(pair.n));
        to.n -= 1;
        break;
      case Ladder::raise_a:
        factor = std::sqrt(static_cast<double>(pair.n + 1));
        to.n += 1;
        break;
      case Ladder::lower_b:
        if (pair.m == 0) continue;
        factor = std::sqrt(static_cast<double>(pair.m));
        to.m -= 1;
        break;
      case Ladder::raise_b:
        factor = std::sqrt(static_cast<double>(pair.m + 1));
        to.m += 1;
        break;
    }
    out[to] += factor * c;
  }
  return out;
}

}  // namespace

FullTwoModeState::FullTwoModeState(int cutoff, FockAmplitudes amps) : cutoff_(cutoff) {
  if (cutoff_ < 0) throw DomainError("cutoff must be non-negative");
  double norm2 = 0.0;
  for (const auto& [pair, c] : amps) {
    if (pair.n < 0 || pair.m < 0 || pair.n > cutoff_ || pair.m > cutoff_) {
      throw CapacityError("Fock pair (" + std::to_string(pair.n) + "," + std::to_string(pair.m) +
                          ") exceeds cutoff " + std::to_string(cutoff_));
    }
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw DomainError("amplitudes must be finite");
    }
    if (std::abs(c) < kPruneBelow) continue;
    amps_.emplace(pair, c);
    norm2 += std::norm(c);
  }
  if (norm2 == 0.0) throw DomainError("zero vector cannot be normalized");
  const double norm = std::sqrt(norm2);
  norm_correction_ = std::abs(norm - 1.0);
  if (norm != 1.0) {
    for (auto& [pair, c] : amps_) c /= norm;
  }
}

FullTwoModeState FullTwoModeState::from_dense(int cutoff, const Eigen::VectorXcd& dense) {
  const Eigen::Index side = cutoff + 1;
  if (dense.size() != side * side) {
    throw DimensionError("dense vector has " + std::to_string(dense.size()) +
                         " entries, expected " + std::to_string(side * side));
  }
  FockAmplitudes amps;
  for (int n = 0; n <= cutoff; ++n) {
    for (int m = 0; m <= cutoff; ++m) {
      const cplx c = dense(full_index({n, m}, cutoff));
      if (c != cplx{0.0, 0.0}) amps.emplace(FockPair{n, m}, c);
    }
  }
  return {cutoff, std::move(amps)};
}

cplx FullTwoModeState::amp(FockPair pair) const {
  const auto it = amps_.find(pair);
  return it == amps_.end() ? cplx{0.0, 0.0} : it->second;
}

Eigen::VectorXcd FullTwoModeState::to_dense() const {
  const Eigen::Index side = cutoff_ + 1;
  Eigen::VectorXcd dense = Eigen::VectorXcd::Zero(side * side);
  for (const auto& [pair, c] : amps_) dense(full_index(pair, cutoff_)) = c;
  return dense;
}

Eigen::Index full_index(FockPair pair, int cutoff) {
  return static_cast<Eigen::Index>(pair.n) * (cutoff + 1) + pair.m;
}

FullTwoModeState embed_full(const SubspaceState& state, int cutoff) {
  if (cutoff < state.total()) {
    throw CapacityError("cutoff " + std::to_string(cutoff) + " cannot hold S_" +
                        std::to_string(state.total()));
  }
  FockAmplitudes amps;
  const int total = state.total();
  for (int j = 0; j <= total; ++j) {
    const cplx c = state.amp(j);
    if (c != cplx{0.0, 0.0}) amps.emplace(FockPair{total - j, j}, c);
  }
  return {cutoff, std::move(amps)};
}

FockAmplitudes apply_monomial(const FockAmplitudes& ket, const NormalMonomial& mono) {
  // Rightmost operator acts first: b^s, then b+^r, then a^q, then a+^p.
  FockAmplitudes out = ket;
  for (int i = 0; i < mono.s; ++i) out = apply_ladder(out, Ladder::lower_b);
  for (int i = 0; i < mono.r; ++i) out = apply_ladder(out, Ladder::raise_b);
  for (int i = 0; i < mono.q; ++i) out = apply_ladder(out, Ladder::lower_a);
  for (int i = 0; i < mono.p; ++i) out = apply_ladder(out, Ladder::raise_a);
  return out;
}

cplx expectation_full(const FullTwoModeState& state, const NormalMonomial& mono) {
  const FockAmplitudes image = apply_monomial(state.amps(), mono);
  cplx acc{0.0, 0.0};
  for (const auto& [pair, c] : image) {
    const auto it = state.amps().find(pair);
    if (it != state.amps().end()) acc += std::conj(it->second) * c;
  }
  return acc;
}

double weight_outside(const FullTwoModeState& state, int total) {
  double outside = 0.0;
  for (const auto& [pair, c] : state.amps()) {
    if (pair.total() != total) outside += std::norm(c);
  }
  return std::sqrt(outside);
}

SubspaceState restrict_to_subspace(const FullTwoModeState& state, int total) {
  if (total > state.cutoff()) {
    throw CapacityError("S_" + std::to_string(total) + " exceeds cutoff");
  }
  std::vector<cplx> amps(static_cast<std::size_t>(total) + 1, cplx{0.0, 0.0});
  for (int j = 0; j <= total; ++j) amps[static_cast<std::size_t>(j)] = state.amp({total - j, j});
  return {total, std::move(amps)};
}

}  // namespace lmode
