#pragma once

// Exact combinatorics over arbitrary-precision integers and rationals.
//
// All functions are pure; the Stirling tables and the Bernoulli memo behind
// them are shared process-wide and guarded by a mutex.

#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace zetacoef {

using BigInt = boost::multiprecision::mpz_int;
/// Canonical rational: positive denominator, coprime parts.
using ExactRational = boost::multiprecision::mpq_rational;

/// Unsigned Stirling number of the first kind [k n].
BigInt stirling1(unsigned k, unsigned n);

/// Stirling number of the second kind {n k}.
BigInt stirling2(unsigned n, unsigned k);

/// Bernoulli number B_n with B_1 = -1/2.
ExactRational bernoulli_number(unsigned n);

/// Coefficients of B_n(x) in ascending powers of x.
std::vector<ExactRational> bernoulli_polynomial_coeffs(unsigned n);

/// B_n(x).
ExactRational bernoulli_polynomial(unsigned n, const ExactRational& x);

/// Apostol-Bernoulli function beta_n(a, lambda), generated by
/// z e^{az} / (lambda e^z - 1). Throws DomainError for lambda = 1.
ExactRational apostol_bernoulli(unsigned n, const ExactRational& a, const ExactRational& lambda);

/// beta_0(a, lambda), ..., beta_n(a, lambda) from one pass of the recurrence.
std::vector<ExactRational> apostol_bernoulli_sequence(unsigned n, const ExactRational& a,
                                                      const ExactRational& lambda);

/// H_k = 1 + 1/2 + ... + 1/k, H_0 = 0.
ExactRational harmonic_number(unsigned k);

BigInt binomial(unsigned n, unsigned k);
BigInt factorial(unsigned n);

/// Coefficients of the exponential polynomial phi_n: ({n 0}, {n 1}, ..., {n n}).
std::vector<BigInt> exp_polynomial_coeffs(unsigned n);

/// Evaluates sum_j coeffs[j] x^j exactly.
ExactRational eval_exact_polynomial(const std::vector<ExactRational>& coeffs, const ExactRational& x);

}  // namespace zetacoef
