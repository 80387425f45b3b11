#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "zetacoef/bigfloat.hpp"
#include "zetacoef/errors.hpp"
#include "zetacoef/exact.hpp"
#include "zetacoef/series.hpp"

using namespace zetacoef;

namespace {

ExactRational power(const ExactRational& x, unsigned e) {
  ExactRational r(1);
  while (e-- > 0) r *= x;
  return r;
}

// Brute-force [k n]: count permutations of k elements with exactly n cycles.
long count_permutations_by_cycles(unsigned k, unsigned n) {
  std::vector<unsigned> perm(k);
  std::iota(perm.begin(), perm.end(), 0u);
  long count = 0;
  do {
    std::vector<bool> seen(k, false);
    unsigned cycles = 0;
    for (unsigned i = 0; i < k; ++i) {
      if (seen[i]) continue;
      ++cycles;
      for (unsigned j = i; !seen[j]; j = perm[j]) seen[j] = true;
    }
    if (cycles == n) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

// Brute-force {n k}: count restricted growth strings of length n with k blocks.
long count_set_partitions(unsigned n, unsigned k) {
  if (n == 0) return k == 0 ? 1 : 0;
  long count = 0;
  std::vector<unsigned> rgs(n, 0);
  while (true) {
    const unsigned blocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
    if (blocks == k) ++count;
    // next restricted growth string
    int i = static_cast<int>(n) - 1;
    for (; i > 0; --i) {
      const unsigned prefix_max = *std::max_element(rgs.begin(), rgs.begin() + i);
      if (rgs[i] <= prefix_max) {
        ++rgs[i];
        std::fill(rgs.begin() + i + 1, rgs.end(), 0u);
        break;
      }
    }
    if (i == 0) break;
  }
  return count;
}

// Akiyama-Tanigawa: yields B_n with B_1 = +1/2, independent of the
// binomial recurrence used by the library.
ExactRational akiyama_tanigawa(unsigned n) {
  std::vector<ExactRational> a(n + 1);
  for (unsigned m = 0; m <= n; ++m) {
    a[m] = ExactRational(1, m + 1);
    for (unsigned j = m; j >= 1; --j) a[j - 1] = ExactRational(j) * (a[j - 1] - a[j]);
  }
  return a[0];
}

}  // namespace

TEST_CASE("stirling1 examples") {
  CHECK(stirling1(5, 1) == 24);
  CHECK(stirling1(3, 2) == 3);
  CHECK(stirling1(3, 1) == 2);
  CHECK(stirling1(7, 7) == 1);
  CHECK(stirling1(0, 0) == 1);
  CHECK(stirling1(4, 0) == 0);
  CHECK(stirling1(2, 5) == 0);
}

TEST_CASE("stirling2 examples") {
  CHECK(stirling2(3, 2) == 3);
  CHECK(stirling2(2, 1) == 1);
  CHECK(stirling2(2, 2) == 1);
  CHECK(stirling2(6, 6) == 1);
  CHECK(stirling2(3, 5) == 0);
  CHECK(stirling2(5, 0) == 0);
}

TEST_CASE("stirling numbers match combinatorial enumeration") {
  for (unsigned k = 0; k <= 7; ++k) {
    for (unsigned n = 0; n <= k; ++n) {
      CAPTURE(k);
      CAPTURE(n);
      CHECK(stirling1(k, n) == count_permutations_by_cycles(k, n));
      CHECK(stirling2(k, n) == count_set_partitions(k, n));
    }
  }
}

TEST_CASE("stirling table invariants") {
  for (unsigned k = 1; k <= 40; ++k) {
    CHECK(stirling1(k, 0) == 0);
    CHECK(stirling1(k, 1) == factorial(k - 1));
    CHECK(stirling1(k, k) == 1);
    CHECK(stirling2(k, 1) == 1);
    CHECK(stirling2(k, k) == 1);
    for (unsigned n = 0; n <= k; ++n) {
      CHECK(stirling1(k, n) >= 0);
      CHECK(stirling2(k, n) >= 0);
    }
  }
}

TEST_CASE("stirling orthogonality and column identities") {
  for (unsigned k = 0; k <= 30; ++k) {
    for (unsigned m = 0; m <= k; ++m) {
      BigInt acc(0);
      for (unsigned n = m; n <= k; ++n) {
        const BigInt t = stirling1(k, n) * stirling2(n, m);
        acc += (k - n) % 2 == 0 ? t : BigInt(-t);
      }
      CHECK(acc == (k == m ? 1 : 0));
    }
  }
  for (unsigned k = 1; k <= 25; ++k) {
    CHECK(ExactRational(stirling1(k, 2)) == ExactRational(factorial(k - 1)) * harmonic_number(k - 1));
  }
}

TEST_CASE("basis change x^n -> phi -> x^n") {
  // x^2 = -phi_1 + phi_2, x^3 = 2 phi_1 - 3 phi_2 + phi_3
  CHECK(stirling1(2, 1) == 1);
  CHECK(stirling1(3, 2) == 3);
  for (unsigned n = 0; n <= 20; ++n) {
    std::vector<BigInt> poly(n + 1, BigInt(0));
    for (unsigned k = 0; k <= n; ++k) {
      const BigInt c = (n - k) % 2 == 0 ? stirling1(n, k) : BigInt(-stirling1(n, k));
      const auto phi = exp_polynomial_coeffs(k);
      for (unsigned j = 0; j <= k; ++j) poly[j] += c * phi[j];
    }
    for (unsigned j = 0; j <= n; ++j) CHECK(poly[j] == (j == n ? 1 : 0));
  }
}

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli_number(0) == 1);
  CHECK(bernoulli_number(1) == ExactRational(-1, 2));
  CHECK(bernoulli_number(2) == ExactRational(1, 6));
  CHECK(bernoulli_number(3) == 0);
  for (unsigned k = 1; k <= 20; ++k) CHECK(bernoulli_number(2 * k + 1) == 0);
  for (unsigned n = 2; n <= 40; ++n) {
    CAPTURE(n);
    CHECK(bernoulli_number(n) == akiyama_tanigawa(n));
  }
  CHECK(akiyama_tanigawa(1) == -bernoulli_number(1));
  // defining recurrence sum_{j<=n} C(n+1, j) B_j = 0
  for (unsigned n = 1; n <= 30; ++n) {
    ExactRational acc(0);
    for (unsigned j = 0; j <= n; ++j) acc += ExactRational(binomial(n + 1, j)) * bernoulli_number(j);
    CHECK(acc == 0);
  }
}

TEST_CASE("bernoulli polynomials") {
  const ExactRational a(7, 5);
  CHECK(bernoulli_polynomial(1, a - 1) == a - ExactRational(3, 2));
  CHECK(bernoulli_polynomial(0, ExactRational(7, 3)) == 1);
  CHECK(bernoulli_polynomial(2, ExactRational(0)) == ExactRational(1, 6));
  for (unsigned n = 0; n <= 40; ++n) CHECK(bernoulli_polynomial(n, ExactRational(0)) == bernoulli_number(n));

  // B_n(x+1) - B_n(x) = n x^{n-1} on random rationals
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const ExactRational x(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 9) + 1);
    const unsigned n = 1 + rng() % 15;
    const ExactRational lhs = bernoulli_polynomial(n, x + 1) - bernoulli_polynomial(n, x);
    CHECK(lhs == ExactRational(n) * power(x, n - 1));
  }
}

TEST_CASE("apostol-bernoulli closed forms and errors") {
  CHECK(apostol_bernoulli(0, ExactRational(5), ExactRational(2)) == 0);
  CHECK(apostol_bernoulli(1, ExactRational(-3, 7), ExactRational(2)) == 1);
  CHECK(apostol_bernoulli(2, ExactRational(1), ExactRational(2)) == -2);
  CHECK_THROWS_AS(apostol_bernoulli(3, ExactRational(1), ExactRational(1)), DomainError);

  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const ExactRational a(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 9) + 1);
    ExactRational lambda(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 9) + 1);
    if (lambda == 1) lambda = -1;
    const ExactRational d = lambda - 1;
    CHECK(apostol_bernoulli(0, a, lambda) == 0);
    CHECK(apostol_bernoulli(1, a, lambda) == 1 / d);
    CHECK(apostol_bernoulli(2, a, lambda) == (2 * a * d - 2 * lambda) / (d * d));
  }
}

TEST_CASE("apostol-bernoulli is an Appell sequence in a") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const ExactRational a(static_cast<long>(rng() % 21) - 10, static_cast<long>(rng() % 5) + 1);
    const ExactRational lambda(static_cast<long>(rng() % 19) - 9, 10);
    if (lambda == 1) continue;
    const auto at_zero = apostol_bernoulli_sequence(12, ExactRational(0), lambda);
    const auto at_a = apostol_bernoulli_sequence(12, a, lambda);
    for (unsigned n = 0; n <= 12; ++n) {
      ExactRational expanded(0);
      for (unsigned j = 0; j <= n; ++j) {
        expanded += ExactRational(binomial(n, j)) * at_zero[j] * power(a, n - j);
      }
      CHECK(expanded == at_a[n]);
    }
  }
}

TEST_CASE("apostol-bernoulli generating function at z = 1/10") {
  PrecisionScope scope(50);
  const ExactRational lambda(2);
  const ExactRational a(1);
  const unsigned order = 12;
  const auto beta = apostol_bernoulli_sequence(order + 1, a, lambda);
  const ExactRational z(1, 10);
  ExactRational truncated(0);
  for (unsigned n = 0; n <= order; ++n) {
    truncated += beta[n] * power(z, n) / ExactRational(factorial(n));
  }
  const BigFloat zf(z);
  const BigFloat closed = zf * exp(zf) / (BigFloat(2L) * exp(zf) - BigFloat(1L));
  // Radius of convergence is log 2, so the remainder is dominated by its
  // first term with ratio about z / log 2 < 1/6.
  const BigFloat first_omitted(ExactRational(abs(beta[order + 1]) * power(z, order + 1) /
                                             ExactRational(factorial(order + 1))));
  const BigFloat remainder = abs(closed - BigFloat(truncated));
  CHECK(remainder <= BigFloat(2L) * first_omitted);
  CHECK(remainder >= first_omitted / BigFloat(2L));
}

TEST_CASE("harmonic numbers, binomials, factorials") {
  CHECK(harmonic_number(0) == 0);
  CHECK(harmonic_number(3) == ExactRational(11, 6));
  CHECK(stirling1(4, 2) == 11);
  CHECK(ExactRational(stirling1(4, 2)) == ExactRational(factorial(3)) * harmonic_number(3));
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(3, 10) == 0);
  CHECK(factorial(0) == 1);
  CHECK(factorial(20) == BigInt("2432902008176640000"));
}

TEST_CASE("exponential polynomial coefficients") {
  CHECK(exp_polynomial_coeffs(0) == std::vector<BigInt>{1});
  CHECK(exp_polynomial_coeffs(2) == std::vector<BigInt>{0, 1, 1});
  CHECK(exp_polynomial_coeffs(3) == std::vector<BigInt>{0, 1, 3, 1});
}

TEST_CASE("exact rational invariants") {
  const ExactRational q(BigInt(6), BigInt(-4));
  CHECK(numerator(q) == -3);
  CHECK(denominator(q) == 2);
  CHECK_THROWS(ExactRational(1) / ExactRational(0));
}
