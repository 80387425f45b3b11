#pragma once

#include <vector>

#include "zetacoef/exact.hpp"

namespace zetacoef::detail {

// Multiplying z e^{az} = (lambda e^z - 1) sum_n beta_n z^n/n! out and matching
// z^n/n! gives
//   (lambda - 1) beta_n + lambda sum_{j<n} C(n,j) beta_j = n a^{n-1},
// with a zero right side at n = 0. Works over any field T constructible from
// BigInt; the caller guarantees lambda != 1.
template <typename T>
std::vector<T> apostol_bernoulli_recurrence(unsigned n_max, const T& a, const T& lambda) {
  std::vector<T> beta;
  beta.reserve(n_max + 1);
  const T denom = lambda - T(BigInt(1));
  T a_power = T(BigInt(1));  // a^{n-1}
  for (unsigned n = 0; n <= n_max; ++n) {
    T rhs = T(BigInt(0));
    if (n >= 1) {
      rhs = T(BigInt(n)) * a_power;
      a_power = a_power * a;
    }
    T acc = T(BigInt(0));
    for (unsigned j = 0; j < n; ++j) acc = acc + T(binomial(n, j)) * beta[j];
    beta.push_back((rhs - lambda * acc) / denom);
  }
  return beta;
}

}  // namespace zetacoef::detail
