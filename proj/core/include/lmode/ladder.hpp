#pragma once

#include <cmath>

namespace lmode {

/// sqrt(n! / (n-k)!): the factor picked up by a^k |n>. Zero when k > n.
inline double lowering_factor(int n, int k) {
  if (k > n) return 0.0;
  double f = 1.0;
  for (int i = 0; i < k; ++i) f *= std::sqrt(static_cast<double>(n - i));
  return f;
}

/// sqrt((n+k)! / n!): the factor picked up by a+^k |n>.
inline double raising_factor(int n, int k) {
  double f = 1.0;
  for (int i = 1; i <= k; ++i) f *= std::sqrt(static_cast<double>(n + i));
  return f;
}

}  // namespace lmode
