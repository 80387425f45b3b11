#include "zetacoef/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "zetacoef/errors.hpp"

namespace zetacoef {

namespace {

constexpr int kGuardDigits = 10;

// exp(-s * log_base) for real log_base: base^{-s}.
ComplexBigFloat power_neg(const ComplexBigFloat& s, const BigFloat& log_base) {
  const BigFloat modulus = exp(-(s.re * log_base));
  const BigFloat angle = -(s.im * log_base);
  return {modulus * cos(angle), modulus * sin(angle)};
}

class HurwitzEvaluator {
 public:
  HurwitzEvaluator(const BigFloat& a, const OracleConfig& cfg)
      : em_order_(cfg.em_order), tail_base_(a + BigFloat(static_cast<long>(cfg.em_cutoff))) {
    logs_.reserve(cfg.em_cutoff);
    for (int m = 0; m < cfg.em_cutoff; ++m) logs_.push_back(log(a + BigFloat(static_cast<long>(m))));
    tail_log_ = log(tail_base_);
    for (int j = 1; j <= cfg.em_order; ++j) {
      const auto two_j = static_cast<unsigned>(2 * j);
      corrections_.emplace_back(ExactRational(bernoulli_number(two_j) / ExactRational(factorial(two_j))));
    }
    epsilon_ = BigFloat::pow10(-(cfg.digits + 5));
  }

  ComplexBigFloat operator()(const ComplexBigFloat& s) const {
    if (s.im.is_zero() && s.re == BigFloat(1L)) throw DomainError("hurwitz zeta has a pole at s=1");
    ComplexBigFloat sum;
    for (const BigFloat& l : logs_) sum += power_neg(s, l);

    const ComplexBigFloat x_neg_s = power_neg(s, tail_log_);
    const ComplexBigFloat one(BigFloat(1L));
    sum += ComplexBigFloat(tail_base_) * x_neg_s / (s - one);
    sum += ComplexBigFloat(BigFloat(ExactRational(1, 2))) * x_neg_s;

    // B_{2j}/(2j)! * (s)_{2j-1} * X^{-s-2j+1}
    const BigFloat inv_x = BigFloat(1L) / tail_base_;
    const BigFloat inv_x2 = inv_x * inv_x;
    ComplexBigFloat rising = s;
    ComplexBigFloat power = x_neg_s * ComplexBigFloat(inv_x);
    const BigFloat scale = std::max(BigFloat(1L), abs(sum));
    for (int j = 1; j <= em_order_; ++j) {
      if (j > 1) {
        const long base = 2 * j - 3;
        rising *= (s + ComplexBigFloat(BigFloat(base))) * (s + ComplexBigFloat(BigFloat(base + 1)));
        power *= ComplexBigFloat(inv_x2);
      }
      if (rising.re.is_zero() && rising.im.is_zero()) break;
      const ComplexBigFloat term = ComplexBigFloat(corrections_[j - 1]) * rising * power;
      sum += term;
      if (abs(term) < epsilon_ * scale) break;
    }
    return sum;
  }

 private:
  int em_order_;
  BigFloat tail_base_;
  BigFloat tail_log_;
  std::vector<BigFloat> logs_;
  std::vector<BigFloat> corrections_;
  BigFloat epsilon_;
};

class LerchEvaluator {
 public:
  LerchEvaluator(const BigFloat& lambda, const BigFloat& a, const OracleConfig& cfg)
      : lambda_(lambda), a_(a), digits_(cfg.digits) {
    if (!(abs(lambda) < BigFloat(1L))) throw UnsupportedError("lerch oracle needs |lambda| < 1");
    log10_ratio_ = lambda.is_zero() ? -1e300 : std::log10(std::abs(lambda.to_double()));
  }

  ComplexBigFloat operator()(const ComplexBigFloat& s) {
    ComplexBigFloat sum;
    BigFloat weight(1L);  // lambda^n
    const double sigma = s.re.to_double();
    const double log10_eps = -(digits_ + 5.0);
    const double a = a_.to_double();
    for (long n = 0;; ++n) {
      sum += ComplexBigFloat(weight) * power_neg(s, log_at(n));
      if (lambda_.is_zero()) break;
      weight *= lambda_;
      // Ratio bound q for terms beyond n, then a geometric tail bound.
      const double growth = sigma < 0 ? -sigma * std::log10((n + 2 + a) / (n + 1 + a)) : 0.0;
      const double log10_q = log10_ratio_ + growth;
      if (log10_q < 0) {
        const double log10_next = (n + 1) * log10_ratio_ - sigma * std::log10(n + 1 + a);
        const double log10_tail = log10_next - std::log10(1 - std::pow(10.0, log10_q));
        if (log10_tail < log10_eps) break;
      }
    }
    return sum;
  }

 private:
  const BigFloat& log_at(long n) {
    while (static_cast<long>(logs_.size()) <= n) {
      logs_.push_back(log(a_ + BigFloat(static_cast<long>(logs_.size()))));
    }
    return logs_[n];
  }

  BigFloat lambda_;
  BigFloat a_;
  int digits_;
  double log10_ratio_;
  std::vector<BigFloat> logs_;
};

void require_positive(const BigFloat& a) {
  if (a.sign() <= 0) throw DomainError("a must be positive, got " + a.str());
}

}  // namespace

ComplexBigFloat operator+(const ComplexBigFloat& x, const ComplexBigFloat& y) {
  return {x.re + y.re, x.im + y.im};
}

ComplexBigFloat operator-(const ComplexBigFloat& x, const ComplexBigFloat& y) {
  return {x.re - y.re, x.im - y.im};
}

ComplexBigFloat operator*(const ComplexBigFloat& x, const ComplexBigFloat& y) {
  return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}

ComplexBigFloat operator/(const ComplexBigFloat& x, const ComplexBigFloat& y) {
  const BigFloat norm = y.re * y.re + y.im * y.im;
  return {(x.re * y.re + x.im * y.im) / norm, (x.im * y.re - x.re * y.im) / norm};
}

BigFloat abs(const ComplexBigFloat& z) { return sqrt(z.re * z.re + z.im * z.im); }

ComplexBigFloat exp(const ComplexBigFloat& z) {
  const BigFloat modulus = exp(z.re);
  return {modulus * cos(z.im), modulus * sin(z.im)};
}

OracleConfig OracleConfig::for_digits(int digits) {
  OracleConfig cfg;
  cfg.digits = digits;
  cfg.em_cutoff = std::max(10, digits);
  cfg.em_order = digits / 2 + 5;
  cfg.contour_radius = BigFloat(0.5);
  // r^M < 10^-(digits+5) with r = 1/2
  const double needed = (digits + 5) * std::log2(10.0);
  int points = 32;
  while (points < needed) points *= 2;
  cfg.contour_points = points;
  return cfg;
}

void OracleConfig::validate() const {
  if (digits < kMinDigits) throw std::invalid_argument("oracle digits below minimum");
  if (em_cutoff < 4) throw std::invalid_argument("em_cutoff must be >= 4");
  if (em_order < 2) throw std::invalid_argument("em_order must be >= 2");
  if (!(contour_radius > BigFloat(0L) && contour_radius < BigFloat(1L))) {
    throw std::invalid_argument("contour_radius must lie in (0, 1)");
  }
  if (contour_points < 32 || (contour_points & (contour_points - 1)) != 0) {
    throw std::invalid_argument("contour_points must be a power of two >= 32");
  }
}

ComplexBigFloat hurwitz_zeta(const ComplexBigFloat& s, const BigFloat& a, const OracleConfig& cfg) {
  cfg.validate();
  require_positive(a);
  // For Re s < 1 the partial sum and the tail term grow like (N+a)^{1-Re s}
  // and cancel; carry that many extra digits.
  const double sigma = s.re.to_double();
  const double cancellation =
      sigma < 1 ? (1 - sigma) * std::log10(cfg.em_cutoff + a.to_double() + 1) : 0.0;
  PrecisionScope scope(cfg.digits + kGuardDigits + static_cast<int>(std::ceil(cancellation)));
  return HurwitzEvaluator(a, cfg)(s);
}

ComplexBigFloat lerch_phi(const BigFloat& lambda, const ComplexBigFloat& s, const BigFloat& a,
                          const OracleConfig& cfg) {
  cfg.validate();
  require_positive(a);
  PrecisionScope scope(cfg.digits + kGuardDigits);
  LerchEvaluator phi(lambda, a, cfg);
  return phi(s);
}

std::vector<OracleCoefficient> taylor_coefficients_contour(Family family, long n_max, const BigFloat& a,
                                                           const BigFloat* lambda,
                                                           const OracleConfig& cfg) {
  cfg.validate();
  require_positive(a);
  if (n_max < 0) throw DomainError("coefficient index must be non-negative");
  if (family == Family::lerch && lambda == nullptr) throw DomainError("the lerch family needs lambda");
  PrecisionScope scope(cfg.digits + kGuardDigits);

  const long nodes = 2L * cfg.contour_points;
  const BigFloat r = BigFloat(0L) + cfg.contour_radius;
  const BigFloat two_pi = BigFloat(2L) * BigFloat::pi();

  // Unit roots w^j, j = 0..nodes-1.
  std::vector<BigFloat> cos_table(nodes);
  std::vector<BigFloat> sin_table(nodes);
  for (long j = 0; j < nodes; ++j) {
    const BigFloat angle = two_pi * BigFloat(j) / BigFloat(nodes);
    cos_table[j] = cos(angle);
    sin_table[j] = sin(angle);
  }

  // F has real Taylor coefficients, so F(conj s) = conj F(s): sample the upper
  // half of the circle and mirror.
  std::vector<ComplexBigFloat> samples(nodes);
  std::optional<HurwitzEvaluator> hurwitz;
  std::optional<LerchEvaluator> lerch;
  if (family == Family::lerch) {
    lerch.emplace(*lambda, a, cfg);
  } else {
    hurwitz.emplace(a, cfg);
  }
  for (long j = 0; j <= nodes / 2; ++j) {
    const ComplexBigFloat s(r * cos_table[j], r * sin_table[j]);
    samples[j] = lerch ? (*lerch)(s) : (*hurwitz)(s);
    if (j > 0 && j < nodes / 2) samples[nodes - j] = ComplexBigFloat(samples[j].re, -samples[j].im);
  }

  BigFloat max_sample(0L);
  for (const auto& f : samples) max_sample = std::max(max_sample, abs(f));
  const BigFloat rounding = BigFloat::pow10(-cfg.digits) * max_sample;

  std::vector<OracleCoefficient> out;
  BigFloat r_power(1L);  // r^n
  for (long n = 0; n <= n_max; ++n) {
    if (n > 0) r_power *= r;
    // Re(F_j w^{-jn}) = Re F_j cos + Im F_j sin
    BigFloat fine(0L);
    BigFloat coarse(0L);
    for (long j = 0; j < nodes; ++j) {
      const long idx = (j * n) % nodes;
      const BigFloat contribution = samples[j].re * cos_table[idx] + samples[j].im * sin_table[idx];
      fine += contribution;
      if (j % 2 == 0) coarse += contribution;
    }
    fine /= BigFloat(nodes) * r_power;
    coarse /= BigFloat(static_cast<long>(cfg.contour_points)) * r_power;
    out.push_back({fine, abs(fine - coarse) + rounding / r_power});
  }
  return out;
}

OracleCoefficient taylor_coefficient_contour(Family family, long n, const BigFloat& a,
                                             const BigFloat* lambda, const OracleConfig& cfg) {
  return taylor_coefficients_contour(family, n, a, lambda, cfg).back();
}

BigFloat log_gamma_ref(const BigFloat& a, int digits) {
  require_positive(a);
  PrecisionScope scope(digits + kGuardDigits);
  const BigFloat epsilon = BigFloat::pow10(-(digits + 5));

  // Raise the argument to z = a + m >= digits + 10.
  const double target = digits + 10.0;
  const double a_approx = a.to_double();
  const long shift = a_approx >= target ? 0 : static_cast<long>(std::ceil(target - a_approx));
  BigFloat product(1L);
  for (long i = 0; i < shift; ++i) product *= a + BigFloat(i);
  const BigFloat z = a + BigFloat(shift);

  const BigFloat half(ExactRational(1, 2));
  BigFloat result = (z - half) * log(z) - z + half * log(BigFloat(2L) * BigFloat::pi());
  const BigFloat z2 = z * z;
  BigFloat z_power = z;  // z^{2j-1}
  BigFloat previous;
  for (unsigned j = 1;; ++j) {
    if (j > 1) z_power *= z2;
    const ExactRational coeff =
        bernoulli_number(2 * j) / ExactRational(BigInt(2 * j) * BigInt(2 * j - 1));
    const BigFloat term = BigFloat(coeff) / z_power;
    if (j > 1 && abs(term) > previous) {
      throw std::runtime_error("log_gamma_ref: Stirling series diverged before reaching precision");
    }
    result += term;
    if (abs(term) < epsilon) break;
    previous = abs(term);
  }
  return result - log(product);
}

}  // namespace zetacoef
