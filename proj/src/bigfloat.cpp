#include "zetacoef/bigfloat.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace zetacoef {

namespace {

thread_local int tls_digits = kDefaultDigits;

mpfr_prec_t current_bits() { return digits_to_bits(tls_digits); }

constexpr mpfr_rnd_t kRound = MPFR_RNDN;

}  // namespace

mpfr_prec_t digits_to_bits(int digits) noexcept {
  // ceil(digits * log2(10)) plus one guard bit.
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.321928094887362)) + 1;
}

int working_digits() noexcept { return tls_digits; }

PrecisionScope::PrecisionScope(int digits) : saved_(tls_digits) {
  if (digits < kMinDigits) {
    throw std::invalid_argument("precision must be at least " + std::to_string(kMinDigits) +
                                " digits");
  }
  tls_digits = digits;
}

PrecisionScope::~PrecisionScope() { tls_digits = saved_; }

BigFloat::BigFloat() {
  mpfr_init2(value_, current_bits());
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(long value) {
  mpfr_init2(value_, current_bits());
  mpfr_set_si(value_, value, kRound);
}

BigFloat::BigFloat(double value) {
  mpfr_init2(value_, current_bits());
  mpfr_set_d(value_, value, kRound);
}

BigFloat::BigFloat(const ExactRational& value) {
  mpfr_init2(value_, current_bits());
  mpfr_set_q(value_, value.backend().data(), kRound);
}

BigFloat::BigFloat(const BigInt& value) {
  mpfr_init2(value_, current_bits());
  mpfr_set_z(value_, value.backend().data(), kRound);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, kRound);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  // Leave `other` as a valid minimal-precision zero.
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, kRound);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat BigFloat::parse(std::string_view text) {
  const std::string buf(text);
  BigFloat out;
  char* end = nullptr;
  if (!buf.empty()) mpfr_strtofr(out.value_, buf.c_str(), &end, 10, kRound);
  if (buf.empty() || end != buf.c_str() + buf.size() || !out.is_finite()) {
    throw std::invalid_argument("not a decimal number: '" + buf + "'");
  }
  return out;
}

BigFloat BigFloat::pi() {
  BigFloat out;
  mpfr_const_pi(out.value_, kRound);
  return out;
}

BigFloat BigFloat::pow10(long exponent) {
  BigFloat out(10L);
  mpfr_pow_si(out.value_, out.value_, exponent, kRound);
  return out;
}

namespace {

template <typename Op>
BigFloat binary(const BigFloat& lhs, const BigFloat& rhs, Op op) {
  BigFloat out;
  op(out.get(), lhs.get(), rhs.get(), kRound);
  return out;
}

template <typename Op>
BigFloat unary(const BigFloat& x, Op op) {
  BigFloat out;
  op(out.get(), x.get(), kRound);
  return out;
}

}  // namespace

BigFloat operator+(const BigFloat& lhs, const BigFloat& rhs) { return binary(lhs, rhs, mpfr_add); }
BigFloat operator-(const BigFloat& lhs, const BigFloat& rhs) { return binary(lhs, rhs, mpfr_sub); }
BigFloat operator*(const BigFloat& lhs, const BigFloat& rhs) { return binary(lhs, rhs, mpfr_mul); }
BigFloat operator/(const BigFloat& lhs, const BigFloat& rhs) { return binary(lhs, rhs, mpfr_div); }

BigFloat& BigFloat::operator+=(const BigFloat& rhs) { return *this = *this + rhs; }
BigFloat& BigFloat::operator-=(const BigFloat& rhs) { return *this = *this - rhs; }
BigFloat& BigFloat::operator*=(const BigFloat& rhs) { return *this = *this * rhs; }
BigFloat& BigFloat::operator/=(const BigFloat& rhs) { return *this = *this / rhs; }

BigFloat BigFloat::operator-() const { return unary(*this, mpfr_neg); }

bool operator==(const BigFloat& lhs, const BigFloat& rhs) {
  return mpfr_equal_p(lhs.value_, rhs.value_) != 0;
}

std::partial_ordering operator<=>(const BigFloat& lhs, const BigFloat& rhs) {
  if (mpfr_unordered_p(lhs.value_, rhs.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(lhs.value_, rhs.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

BigFloat abs(const BigFloat& x) { return unary(x, mpfr_abs); }
BigFloat exp(const BigFloat& x) { return unary(x, mpfr_exp); }
BigFloat log(const BigFloat& x) { return unary(x, mpfr_log); }
BigFloat sin(const BigFloat& x) { return unary(x, mpfr_sin); }
BigFloat cos(const BigFloat& x) { return unary(x, mpfr_cos); }
BigFloat sqrt(const BigFloat& x) { return unary(x, mpfr_sqrt); }

BigFloat pow(const BigFloat& base, long exponent) {
  BigFloat out;
  mpfr_pow_si(out.value_, base.value_, exponent, kRound);
  return out;
}

std::string BigFloat::str(int digits) const {
  if (digits <= 0) {
    digits = static_cast<int>(std::floor(static_cast<double>(mpfr_get_prec(value_) - 1) *
                                         0.30102999566398120));
  }
  char* raw = nullptr;
  if (mpfr_asprintf(&raw, "%.*RNg", digits, value_) < 0) {
    throw std::runtime_error("mpfr_asprintf failed");
  }
  std::string out(raw);
  mpfr_free_str(raw);
  return out;
}

int roundtrip_digits(mpfr_prec_t bits) noexcept {
  return 1 + static_cast<int>(std::ceil(static_cast<double>(bits) * 0.30102999566398120));
}

bool within(const BigFloat& x, const BigFloat& y, const BigFloat& tol) {
  return abs(x - y) <= tol;
}

}  // namespace zetacoef
