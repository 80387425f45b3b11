#pragma once

// Independent numerical reference values: Euler-Maclaurin Hurwitz zeta, direct
// Lerch summation, Taylor coefficients by trapezoidal contour integration, and
// a Stirling-series logGamma at large argument. Shares only the exact
// Bernoulli numbers with the series code.

#include <vector>

#include "zetacoef/bigfloat.hpp"
#include "zetacoef/coefficients.hpp"

namespace zetacoef {

struct ComplexBigFloat {
  BigFloat re;
  BigFloat im;

  ComplexBigFloat() = default;
  ComplexBigFloat(BigFloat real, BigFloat imag = BigFloat(0L)) : re(std::move(real)), im(std::move(imag)) {}  // NOLINT

  friend ComplexBigFloat operator+(const ComplexBigFloat& x, const ComplexBigFloat& y);
  friend ComplexBigFloat operator-(const ComplexBigFloat& x, const ComplexBigFloat& y);
  friend ComplexBigFloat operator*(const ComplexBigFloat& x, const ComplexBigFloat& y);
  friend ComplexBigFloat operator/(const ComplexBigFloat& x, const ComplexBigFloat& y);
  ComplexBigFloat operator-() const { return {-re, -im}; }
  ComplexBigFloat& operator+=(const ComplexBigFloat& y) { return *this = *this + y; }
  ComplexBigFloat& operator*=(const ComplexBigFloat& y) { return *this = *this * y; }
};

BigFloat abs(const ComplexBigFloat& z);
ComplexBigFloat exp(const ComplexBigFloat& z);

struct OracleConfig {
  int digits = kDefaultDigits;
  /// Euler-Maclaurin: terms summed directly before the tail corrections.
  int em_cutoff = 50;
  /// Euler-Maclaurin: maximum number of Bernoulli corrections.
  int em_order = 30;
  /// Radius of the coefficient-extraction circle, in (0, 1).
  BigFloat contour_radius{0.5};
  /// Trapezoidal nodes of the primary estimate (power of two, >= 32); the
  /// error estimate compares it with 2 * contour_points nodes.
  int contour_points = 256;

  /// Defaults sized for `digits`: N = max(10, digits), J = digits/2 + 5, and
  /// enough contour nodes that r^M stays below 10^-(digits+5).
  static OracleConfig for_digits(int digits);
  /// Throws std::invalid_argument when an invariant is violated.
  void validate() const;
};

/// zeta(s, a) by Euler-Maclaurin summation. Throws DomainError for s = 1 or a <= 0.
ComplexBigFloat hurwitz_zeta(const ComplexBigFloat& s, const BigFloat& a, const OracleConfig& cfg);

/// Phi(lambda, s, a) = sum lambda^n (n+a)^{-s} by direct summation, |lambda| < 1.
/// Throws UnsupportedError for |lambda| >= 1, DomainError for a <= 0.
ComplexBigFloat lerch_phi(const BigFloat& lambda, const ComplexBigFloat& s, const BigFloat& a,
                          const OracleConfig& cfg);

struct OracleCoefficient {
  BigFloat value;
  BigFloat error_estimate;
};

/// Taylor coefficients 0..n_max of zeta(s, a) (family hurwitz/riemann) or
/// Phi(lambda, s, a) (family lerch) about s = 0 from one set of samples on
/// |s| = r: c_n = (1/M) sum_j F(r w^j) w^{-jn} / r^n. The estimate is the
/// change between M and 2M nodes.
std::vector<OracleCoefficient> taylor_coefficients_contour(Family family, long n_max, const BigFloat& a,
                                                           const BigFloat* lambda,
                                                           const OracleConfig& cfg);

OracleCoefficient taylor_coefficient_contour(Family family, long n, const BigFloat& a,
                                             const BigFloat* lambda, const OracleConfig& cfg);

/// log Gamma(a): raise the argument past ~digits, then the Stirling series
/// summed until its terms fall below 10^-(digits+5). Throws DomainError for a <= 0.
BigFloat log_gamma_ref(const BigFloat& a, int digits = kDefaultDigits);

}  // namespace zetacoef
