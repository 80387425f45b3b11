#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>

#include "cli.hpp"
#include "zetacoef/coefficients.hpp"
#include "zetacoef/oracle.hpp"

namespace zetacoef::cli {

namespace {

using Suite = std::vector<CheckOutcome>;

std::string fmt(const BigFloat& x) { return x.str(3); }

// Relative-to-one tolerance at the working precision.
BigFloat full_precision_tol(const BigFloat& reference, int digits) {
  return BigFloat::pow10(-digits) * std::max(BigFloat(1L), abs(reference));
}

void add(Suite& out, std::string_view suite, std::string name, bool pass, std::string detail) {
  out.push_back({std::string(suite), std::move(name), pass, std::move(detail)});
}

// ---------------------------------------------------------------------------

void identities(Suite& out, int digits) {
  constexpr std::string_view kSuite = "identities";

  {
    long failures = 0;
    for (unsigned k = 0; k <= 30; ++k) {
      for (unsigned m = 0; m <= k; ++m) {
        BigInt acc(0);
        for (unsigned n = m; n <= k; ++n) {
          const BigInt term = stirling1(k, n) * stirling2(n, m);
          acc += (k - n) % 2 == 0 ? term : BigInt(-term);
        }
        if (acc != (k == m ? 1 : 0)) ++failures;
      }
    }
    add(out, kSuite, "stirling_orthogonality_k<=30", failures == 0,
        "mismatches=" + std::to_string(failures));
  }

  {
    // x^n = sum_k (-1)^{n-k} [n k] phi_k(x), phi_k(x) = sum_j {k j} x^j
    long failures = 0;
    for (unsigned n = 0; n <= 20; ++n) {
      std::vector<BigInt> poly(n + 1, BigInt(0));
      for (unsigned k = 0; k <= n; ++k) {
        const BigInt c = (n - k) % 2 == 0 ? stirling1(n, k) : BigInt(-stirling1(n, k));
        const auto phi = exp_polynomial_coeffs(k);
        for (unsigned j = 0; j <= k; ++j) poly[j] += c * phi[j];
      }
      for (unsigned j = 0; j <= n; ++j) {
        if (poly[j] != (j == n ? 1 : 0)) ++failures;
      }
    }
    add(out, kSuite, "basis_change_round_trip_n<=20", failures == 0, "mismatches=" + std::to_string(failures));
  }

  {
    long failures = 0;
    for (unsigned k = 1; k <= 25; ++k) {
      if (stirling1(k, 1) != factorial(k - 1)) ++failures;
      if (ExactRational(stirling1(k, 2)) != ExactRational(factorial(k - 1)) * harmonic_number(k - 1)) ++failures;
    }
    add(out, kSuite, "stirling1_columns_k<=25", failures == 0, "mismatches=" + std::to_string(failures));
  }

  {
    long failures = 0;
    for (unsigned n = 0; n <= 40; ++n) {
      if (bernoulli_polynomial(n, ExactRational(0)) != bernoulli_number(n)) ++failures;
    }
    add(out, kSuite, "bernoulli_polynomial_at_zero_n<=40", failures == 0, "mismatches=" + std::to_string(failures));
  }

  {
    std::mt19937 rng(20240601u);
    auto draw = [&rng](int span) {
      const long num = static_cast<long>(rng() % (2 * span + 1)) - span;
      const long den = static_cast<long>(rng() % 9) + 1;
      return ExactRational(num, den);
    };
    long failures = 0;
    for (int i = 0; i < 20; ++i) {
      const ExactRational a = draw(20);
      ExactRational lambda = draw(20);
      if (lambda == 1) lambda = ExactRational(3, 2);
      const ExactRational lm1 = lambda - 1;
      if (apostol_bernoulli(0, a, lambda) != 0) ++failures;
      if (apostol_bernoulli(1, a, lambda) != 1 / lm1) ++failures;
      if (apostol_bernoulli(2, a, lambda) != (2 * a * lm1 - 2 * lambda) / (lm1 * lm1)) ++failures;
    }
    add(out, kSuite, "apostol_bernoulli_closed_forms_20_random", failures == 0,
        "mismatches=" + std::to_string(failures));
  }

  {
    PrecisionScope scope(digits);
    const BigFloat tol = BigFloat::pow10(-(digits / 2));
    BigFloat worst(0L);
    std::mt19937 rng(7u);
    const std::vector<ExactRational> xs{ExactRational(1, 4), ExactRational(1, 2), ExactRational(1),
                                        ExactRational(2)};
    for (unsigned degree = 0; degree <= 6; ++degree) {
      std::vector<ExactRational> poly(degree + 1);
      for (auto& c : poly) c = ExactRational(static_cast<long>(rng() % 7) - 3);
      poly[degree] = ExactRational(degree % 2 == 0 ? 1 : -2);
      for (const auto& x : xs) {
        const auto sides = etf_check(poly, BigFloat(x), 120);
        worst = std::max(worst, abs(sides.lhs - sides.rhs));
      }
    }
    add(out, kSuite, "etf_identity_degree<=6_K=120", worst <= tol, "max_abs_delta=" + fmt(worst));
  }
}

// ---------------------------------------------------------------------------

void coefficients(Suite& out, int digits) {
  constexpr std::string_view kSuite = "coefficients";
  PrecisionScope scope(digits);

  {
    BigFloat worst(0L);
    bool pass = true;
    for (const char* text : {"1/4", "1/2", "1", "3/2", "2", "10"}) {
      const RealValue a = RealValue::parse(text);
      CoefficientQuery q;
      q.a = a;
      q.digits = digits;
      const auto r = hurwitz_coefficient(q);
      const BigFloat expected(ExactRational(ExactRational(1, 2) - a.exact()));
      const BigFloat delta = abs(r.value - expected);
      worst = std::max(worst, delta);
      pass = pass && delta <= full_precision_tol(expected, digits);
    }
    add(out, kSuite, "zeta0_closed_form", pass, "max_abs_delta=" + fmt(worst));
  }

  {
    const BigFloat half_log_2pi = log(BigFloat(2L) * BigFloat::pi()) / BigFloat(2L);
    BigFloat worst_ratio(0L);
    BigFloat worst_estimate(0L);
    bool pass = true;
    for (const char* text : {"1/2", "1", "3/2", "2"}) {
      const RealValue a = RealValue::parse(text);
      CoefficientQuery q;
      q.n = 1;
      q.a = a;
      q.digits = digits;
      const auto r = hurwitz_coefficient(q);
      const BigFloat reference = log_gamma_ref(a.to_bigfloat(), digits) - half_log_2pi;
      const BigFloat ratio = abs(r.value - reference) / r.result.error_estimate;
      worst_ratio = std::max(worst_ratio, ratio);
      worst_estimate = std::max(worst_estimate, r.result.error_estimate);
      pass = pass && ratio <= BigFloat(2L) && r.result.error_estimate <= BigFloat::pow10(-2);
    }
    add(out, kSuite, "zeta1_matches_log_gamma", pass,
        "max_delta/estimate=" + fmt(worst_ratio) + " max_estimate=" + fmt(worst_estimate));
  }

  {
    bool pass = true;
    BigFloat worst(0L);
    for (long n : {1L, 2L}) {
      for (const char* text : {"1/2", "1", "3/2", "2"}) {
        const RealValue a = RealValue::parse(text);
        const auto special = hurwitz_coefficient_special(n, a, digits);
        CoefficientQuery q;
        q.n = n;
        q.a = a;
        q.digits = digits;
        const auto general = hurwitz_coefficient(q);
        const BigFloat delta = abs(special.value - general.value);
        worst = std::max(worst, delta);
        pass = pass && delta <= special.result.error_estimate + general.result.error_estimate;
      }
    }
    add(out, kSuite, "special_vs_general_path", pass, "max_abs_delta=" + fmt(worst));
  }

  {
    bool pass = true;
    BigFloat worst(0L);
    for (long a : {0L, 1L}) {
      const auto r = log_gamma_series(RealValue(a), digits);
      worst = std::max(worst, abs(r.value));
      pass = pass && abs(r.value) <= BigFloat(2L) * r.error_estimate;
    }
    add(out, kSuite, "log_gamma_series_at_0_and_1", pass, "max_abs_delta=" + fmt(worst));
  }

  {
    bool pass = true;
    BigFloat worst(0L);
    for (const char* lam : {"-1", "-1/2", "1/10", "1/2", "9/10"}) {
      for (const char* text : {"1/2", "1", "2"}) {
        CoefficientQuery q;
        q.family = Family::lerch;
        q.a = RealValue::parse(text);
        q.lambda = RealValue::parse(lam);
        q.digits = digits;
        const auto r = lerch_coefficient(q);
        const BigFloat expected(ExactRational(1 / (1 - q.lambda->exact())));
        const BigFloat delta = abs(r.value - expected);
        worst = std::max(worst, delta);
        pass = pass && delta <= full_precision_tol(expected, digits);
      }
    }
    add(out, kSuite, "lerch_c0_closed_form", pass, "max_abs_delta=" + fmt(worst));
  }
}

// ---------------------------------------------------------------------------

void oracle(Suite& out, int digits) {
  constexpr std::string_view kSuite = "oracle";
  PrecisionScope scope(digits + 10);
  const auto cfg = OracleConfig::for_digits(digits);
  const BigFloat tol = BigFloat::pow10(-(digits - 10));

  {
    BigFloat worst(0L);
    for (const char* text : {"1/2", "1", "2"}) {
      const ExactRational a = RealValue::parse(text).exact();
      for (long k = 0; k <= 8; ++k) {
        const auto z = hurwitz_zeta(ComplexBigFloat(BigFloat(-k)), BigFloat(a), cfg);
        const BigFloat expected(ExactRational(-bernoulli_polynomial(k + 1, a) / (k + 1)));
        worst = std::max(worst, std::max(abs(z.re - expected), abs(z.im)));
      }
    }
    add(out, kSuite, "hurwitz_at_negative_integers", worst <= tol, "max_abs_delta=" + fmt(worst));
  }

  {
    BigFloat worst(0L);
    for (const char* lam : {"1/3", "1/2"}) {
      const ExactRational lambda = RealValue::parse(lam).exact();
      for (const char* text : {"1/2", "1"}) {
        const ExactRational a = RealValue::parse(text).exact();
        const auto beta = apostol_bernoulli_sequence(7, a, lambda);
        for (long m = 0; m <= 6; ++m) {
          const auto phi = lerch_phi(BigFloat(lambda), ComplexBigFloat(BigFloat(-m)), BigFloat(a), cfg);
          const BigFloat expected(ExactRational(-beta[m + 1] / (m + 1)));
          worst = std::max(worst, std::max(abs(phi.re - expected), abs(phi.im)));
        }
      }
    }
    add(out, kSuite, "lerch_at_negative_integers", worst <= tol, "max_abs_delta=" + fmt(worst));
  }

  {
    const BigFloat half(ExactRational(1, 2));
    const BigFloat expected = half * log(BigFloat::pi());
    const BigFloat delta = abs(log_gamma_ref(half, digits) - expected);
    add(out, kSuite, "log_gamma_ref_at_half", delta <= tol, "abs_delta=" + fmt(delta));
  }

  {
    bool pass = true;
    BigFloat worst_ratio(0L);
    for (const char* text : {"1/2", "1", "2"}) {
      const RealValue a = RealValue::parse(text);
      const auto reference = taylor_coefficients_contour(Family::hurwitz, 4, a.to_bigfloat(), nullptr, cfg);
      for (long n = 0; n <= 4; ++n) {
        CoefficientQuery q;
        q.n = n;
        q.a = a;
        q.digits = digits;
        const auto r = hurwitz_coefficient(q);
        const BigFloat allowed = r.result.error_estimate + reference[n].error_estimate;
        const BigFloat delta = abs(r.value - reference[n].value);
        pass = pass && delta <= allowed;
        if (!allowed.is_zero()) worst_ratio = std::max(worst_ratio, delta / allowed);
      }
    }
    add(out, kSuite, "series_vs_contour_n<=4", pass, "max_delta/allowed=" + fmt(worst_ratio));
  }
}

}  // namespace

std::vector<CheckOutcome> run_suite(std::string_view suite, int digits) {
  const bool all = suite == "all";
  if (!all && suite != "identities" && suite != "coefficients" && suite != "oracle") {
    throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
  }
  std::vector<CheckOutcome> out;
  if (all || suite == "identities") identities(out, digits);
  if (all || suite == "coefficients") coefficients(out, digits);
  if (all || suite == "oracle") oracle(out, digits);
  return out;
}

}  // namespace zetacoef::cli
