#include "lmode/normal_order.hpp"

#include <utility>
#include <vector>

namespace lmode {

namespace {

double binomial(int n, int k) {
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// a+^c1 a^a1 a+^c2 a^a2 -> list of (creation power, annihilation power, coefficient).
std::vector<std::pair<std::pair<int, int>, double>> reorder_mode(int c1, int a1, int c2, int a2) {
  std::vector<std::pair<std::pair<int, int>, double>> out;
  const int kmax = std::min(a1, c2);
  for (int k = 0; k <= kmax; ++k) {
    out.push_back({{c1 + c2 - k, a1 + a2 - k}, binomial(a1, k) * binomial(c2, k) * factorial(k)});
  }
  return out;
}

}  // namespace

NormalPolynomial::NormalPolynomial(cplx scalar) { add_term({}, scalar); }

NormalPolynomial::NormalPolynomial(const NormalMonomial& mono, cplx coeff) {
  add_term(mono, coeff);
}

NormalPolynomial NormalPolynomial::a() { return NormalPolynomial({0, 1, 0, 0}); }
NormalPolynomial NormalPolynomial::a_dag() { return NormalPolynomial({1, 0, 0, 0}); }
NormalPolynomial NormalPolynomial::b() { return NormalPolynomial({0, 0, 0, 1}); }
NormalPolynomial NormalPolynomial::b_dag() { return NormalPolynomial({0, 0, 1, 0}); }

void NormalPolynomial::add_term(const NormalMonomial& mono, cplx coeff) {
  if (coeff == cplx{0.0, 0.0}) return;
  auto [it, inserted] = terms_.try_emplace(mono, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == cplx{0.0, 0.0}) terms_.erase(it);
  }
}

NormalPolynomial NormalPolynomial::adjoint() const {
  NormalPolynomial out;
  for (const auto& [mono, coeff] : terms_) out.add_term(mono.adjoint(), std::conj(coeff));
  return out;
}

NormalPolynomial& NormalPolynomial::operator+=(const NormalPolynomial& rhs) {
  for (const auto& [mono, coeff] : rhs.terms_) add_term(mono, coeff);
  return *this;
}

NormalPolynomial& NormalPolynomial::operator-=(const NormalPolynomial& rhs) {
  for (const auto& [mono, coeff] : rhs.terms_) add_term(mono, -coeff);
  return *this;
}

NormalPolynomial& NormalPolynomial::operator*=(cplx scalar) {
  if (scalar == cplx{0.0, 0.0}) {
    terms_.clear();
    return *this;
  }
  for (auto& [mono, coeff] : terms_) coeff *= scalar;
  return *this;
}

NormalPolynomial multiply(const NormalMonomial& lhs, const NormalMonomial& rhs) {
  // Mode a and mode b operators commute, so each mode is reordered on its own.
  const auto a_part = reorder_mode(lhs.p, lhs.q, rhs.p, rhs.q);
  const auto b_part = reorder_mode(lhs.r, lhs.s, rhs.r, rhs.s);
  NormalPolynomial out;
  for (const auto& [apow, acoeff] : a_part) {
    for (const auto& [bpow, bcoeff] : b_part) {
      out += NormalPolynomial({apow.first, apow.second, bpow.first, bpow.second}, acoeff * bcoeff);
    }
  }
  return out;
}

NormalPolynomial operator*(const NormalPolynomial& lhs, const NormalPolynomial& rhs) {
  NormalPolynomial out;
  for (const auto& [lm, lc] : lhs.terms()) {
    for (const auto& [rm, rc] : rhs.terms()) out += multiply(lm, rm) * (lc * rc);
  }
  return out;
}

cplx expectation(const SubspaceState& state, const NormalPolynomial& op) {
  cplx acc{0.0, 0.0};
  for (const auto& [mono, coeff] : op.terms()) acc += coeff * expectation_monomial(state, mono);
  return acc;
}

double variance(const SubspaceState& state, const NormalPolynomial& hermitian_op) {
  const double mean = expectation(state, hermitian_op).real();
  const double second = expectation(state, hermitian_op * hermitian_op).real();
  return second - mean * mean;
}

}  // namespace lmode
