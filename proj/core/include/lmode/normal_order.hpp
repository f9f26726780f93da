#pragma once

#include <map>

#include "lmode/fock.hpp"

namespace lmode {

/// Polynomial in the two-mode ladder operators, kept in normal order.
///
/// Products are reordered with the single-mode identity
///   a^q a+^p = sum_k C(q,k) C(p,k) k! a+^(p-k) a^(q-k)
/// applied to each mode independently, so any polynomial can be reduced to
/// monomials that expectation_monomial evaluates directly.
class NormalPolynomial {
 public:
  using Terms = std::map<NormalMonomial, cplx>;

  NormalPolynomial() = default;
  NormalPolynomial(cplx scalar);  // NOLINT(google-explicit-constructor)
  NormalPolynomial(const NormalMonomial& mono, cplx coeff = 1.0);

  static NormalPolynomial a();
  static NormalPolynomial a_dag();
  static NormalPolynomial b();
  static NormalPolynomial b_dag();

  const Terms& terms() const { return terms_; }
  NormalPolynomial adjoint() const;

  NormalPolynomial& operator+=(const NormalPolynomial& rhs);
  NormalPolynomial& operator-=(const NormalPolynomial& rhs);
  NormalPolynomial& operator*=(cplx scalar);

  friend NormalPolynomial operator+(NormalPolynomial lhs, const NormalPolynomial& rhs) {
    return lhs += rhs;
  }
  friend NormalPolynomial operator-(NormalPolynomial lhs, const NormalPolynomial& rhs) {
    return lhs -= rhs;
  }
  friend NormalPolynomial operator*(NormalPolynomial lhs, cplx scalar) { return lhs *= scalar; }
  friend NormalPolynomial operator*(cplx scalar, NormalPolynomial rhs) { return rhs *= scalar; }
  friend NormalPolynomial operator*(const NormalPolynomial& lhs, const NormalPolynomial& rhs);

 private:
  void add_term(const NormalMonomial& mono, cplx coeff);
  Terms terms_;
};

/// Normal-ordered expansion of the operator product lhs * rhs.
NormalPolynomial multiply(const NormalMonomial& lhs, const NormalMonomial& rhs);

cplx expectation(const SubspaceState& state, const NormalPolynomial& op);

/// <X^2> - <X>^2 for a Hermitian X (imaginary round-off discarded).
double variance(const SubspaceState& state, const NormalPolynomial& hermitian_op);

}  // namespace lmode
