#include "lmode/fock.hpp"

#include <cmath>
#include <string>

#include "lmode/errors.hpp"
#include "lmode/ladder.hpp"

namespace lmode {

void ModelParams::validate() const {
  if (!std::isfinite(omega) || !std::isfinite(gamma) || !std::isfinite(epsilon)) {
    throw DomainError("model parameters must be finite");
  }
  if (omega <= 0.0) throw DomainError("omega must be positive");
  if (gamma < 0.0) throw DomainError("gamma must be non-negative");
  if (epsilon < 0.0) throw DomainError("epsilon must be non-negative");
}

SubspaceState::SubspaceState(int total, std::vector<cplx> amps)
    : total_(total), amps_(std::move(amps)) {
  if (total_ < 0) throw DomainError("total quantum number must be non-negative");
  if (amps_.size() != static_cast<std::size_t>(total_) + 1) {
    throw DimensionError("S_" + std::to_string(total_) + " state needs " +
                         std::to_string(total_ + 1) + " amplitudes, got " +
                         std::to_string(amps_.size()));
  }
  double norm2 = 0.0;
  for (const auto& c : amps_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw DomainError("amplitudes must be finite");
    }
    norm2 += std::norm(c);
  }
  if (norm2 == 0.0) throw DomainError("zero vector cannot be normalized");
  const double norm = std::sqrt(norm2);
  norm_correction_ = std::abs(norm - 1.0);
  if (norm != 1.0) {
    for (auto& c : amps_) c /= norm;
  }
}

SubspaceState SubspaceState::basis(FockPair pair) {
  if (pair.n < 0 || pair.m < 0) throw DomainError("Fock labels must be non-negative");
  std::vector<cplx> amps(static_cast<std::size_t>(pair.total()) + 1, cplx{0.0, 0.0});
  amps[static_cast<std::size_t>(pair.m)] = 1.0;
  return {pair.total(), std::move(amps)};
}

cplx inner_product(const SubspaceState& x, const SubspaceState& y) {
  if (x.total() != y.total()) {
    throw DimensionError("inner product between S_" + std::to_string(x.total()) +
                         " and S_" + std::to_string(y.total()));
  }
  cplx acc{0.0, 0.0};
  for (std::size_t j = 0; j < x.dim(); ++j) acc += std::conj(x.amps()[j]) * y.amps()[j];
  return acc;
}

cplx expectation_monomial(const SubspaceState& state, const NormalMonomial& mono) {
  if (mono.p < 0 || mono.q < 0 || mono.r < 0 || mono.s < 0) {
    throw DomainError("monomial exponents must be non-negative");
  }
  if (mono.quanta_change() != 0) return {0.0, 0.0};

  const int total = state.total();
  const auto amps = state.amps();
  cplx acc{0.0, 0.0};
  // ket: a^q b^s |N-j, j>, bra: a^p b^r |N-k, k> with k = j - s + r.
  for (int j = mono.s; j <= total - mono.q; ++j) {
    const int k = j - mono.s + mono.r;
    if (k < mono.r || k > total - mono.p) continue;
    const double ket = lowering_factor(total - j, mono.q) * lowering_factor(j, mono.s);
    const double bra = lowering_factor(total - k, mono.p) * lowering_factor(k, mono.r);
    acc += std::conj(amps[static_cast<std::size_t>(k)]) * amps[static_cast<std::size_t>(j)] *
           (ket * bra);
  }
  return acc;
}

bool is_product(const SubspaceState& state, double tol) {
  double peak = 0.0;
  for (const auto& c : state.amps()) peak = std::max(peak, std::norm(c));
  return peak >= 1.0 - tol;
}

}  // namespace lmode
