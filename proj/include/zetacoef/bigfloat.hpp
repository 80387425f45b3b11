#pragma once

// Configurable-precision real numbers on top of MPFR.
//
// Every BigFloat carries its own precision. Newly created values, and the
// results of arithmetic, take the calling thread's working precision, which is
// set for a dynamic extent with PrecisionScope. Copies keep the precision of
// their source.

#include <compare>
#include <string>
#include <string_view>

#include <mpfr.h>

#include "zetacoef/exact.hpp"

namespace zetacoef {

inline constexpr int kDefaultDigits = 50;
inline constexpr int kMinDigits = 15;

/// Decimal digits of the calling thread's working precision.
int working_digits() noexcept;

/// Sets the working precision of the calling thread until destruction.
class PrecisionScope {
 public:
  explicit PrecisionScope(int digits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  int saved_;
};

class BigFloat {
 public:
  BigFloat();
  BigFloat(long value);  // NOLINT(google-explicit-constructor)
  BigFloat(int value) : BigFloat(static_cast<long>(value)) {}  // NOLINT
  explicit BigFloat(double value);
  explicit BigFloat(const ExactRational& value);
  explicit BigFloat(const BigInt& value);

  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  /// Parses a decimal literal ("-1.25", "3e-7"). Throws std::invalid_argument.
  static BigFloat parse(std::string_view text);
  static BigFloat pi();
  /// 10^exponent at working precision.
  static BigFloat pow10(long exponent);

  BigFloat& operator+=(const BigFloat& rhs);
  BigFloat& operator-=(const BigFloat& rhs);
  BigFloat& operator*=(const BigFloat& rhs);
  BigFloat& operator/=(const BigFloat& rhs);

  friend BigFloat operator+(const BigFloat& lhs, const BigFloat& rhs);
  friend BigFloat operator-(const BigFloat& lhs, const BigFloat& rhs);
  friend BigFloat operator*(const BigFloat& lhs, const BigFloat& rhs);
  friend BigFloat operator/(const BigFloat& lhs, const BigFloat& rhs);
  BigFloat operator-() const;

  friend bool operator==(const BigFloat& lhs, const BigFloat& rhs);
  friend std::partial_ordering operator<=>(const BigFloat& lhs, const BigFloat& rhs);

  friend BigFloat abs(const BigFloat& x);
  friend BigFloat exp(const BigFloat& x);
  friend BigFloat log(const BigFloat& x);
  friend BigFloat sin(const BigFloat& x);
  friend BigFloat cos(const BigFloat& x);
  friend BigFloat sqrt(const BigFloat& x);
  friend BigFloat pow(const BigFloat& base, long exponent);

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Base-2 exponent e with 2^(e-1) <= |x| < 2^e; meaningless for zero.
  long exponent2() const { return mpfr_get_exp(value_); }
  mpfr_prec_t precision_bits() const { return mpfr_get_prec(value_); }

  /// Shortest general-format decimal with `digits` significant digits
  /// (trailing zeros dropped). Defaults to the value's own precision.
  std::string str(int digits = 0) const;

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

 private:
  mpfr_t value_;
};

/// Bits needed for `digits` decimal digits.
mpfr_prec_t digits_to_bits(int digits) noexcept;

/// Significant decimal digits that round-trip any value of `bits` precision.
int roundtrip_digits(mpfr_prec_t bits) noexcept;

/// |x - y| <= tol, with tol absolute.
bool within(const BigFloat& x, const BigFloat& y, const BigFloat& tol);

}  // namespace zetacoef
