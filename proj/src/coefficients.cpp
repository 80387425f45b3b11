#include "zetacoef/coefficients.hpp"

#include <functional>
#include <memory>
#include <regex>
#include <stdexcept>

#include "zetacoef/detail/apostol.hpp"
#include "zetacoef/errors.hpp"

namespace zetacoef {

std::string_view to_string(Family family) {
  switch (family) {
    case Family::hurwitz:
      return "hurwitz";
    case Family::riemann:
      return "riemann";
    case Family::lerch:
      return "lerch";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  if (name == "hurwitz") return Family::hurwitz;
  if (name == "riemann") return Family::riemann;
  if (name == "lerch") return Family::lerch;
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// RealValue

RealValue RealValue::parse(std::string_view text) {
  const std::string s(text);
  static const std::regex fraction(R"(^\s*([+-]?\d+)\s*/\s*(\d+)\s*$)");
  static const std::regex decimal(R"(^\s*([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?\s*$)");
  std::smatch m;
  if (std::regex_match(s, m, fraction)) {
    const BigInt den(m[2].str());
    if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    return RealValue(ExactRational(BigInt(m[1].str()), den));
  }
  if (std::regex_match(s, m, decimal) && (m[2].length() + m[3].length()) > 0) {
    const std::string digits = m[2].str() + m[3].str();
    long exponent = m[4].matched ? std::stol(m[4].str()) : 0;
    exponent -= static_cast<long>(m[3].length());
    if (exponent > 100000 || exponent < -100000) {
      throw std::invalid_argument("exponent out of range in '" + s + "'");
    }
    ExactRational value{BigInt(digits)};
    const BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(std::abs(exponent)));
    value = exponent >= 0 ? value * ExactRational(scale) : value / ExactRational(scale);
    if (m[1].str() == "-") value = -value;
    return RealValue(value);
  }
  throw std::invalid_argument("expected a decimal or p/q rational, got '" + s + "'");
}

BigFloat RealValue::to_bigfloat() const {
  if (is_exact()) return BigFloat(exact());
  return BigFloat(0L) + std::get<BigFloat>(value_);
}

int RealValue::sign() const {
  if (is_exact()) return exact().sign();
  return std::get<BigFloat>(value_).sign();
}

std::string RealValue::str() const {
  if (!is_exact()) return std::get<BigFloat>(value_).str();
  const ExactRational& q = exact();
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

bool operator==(const RealValue& lhs, const RealValue& rhs) {
  if (lhs.is_exact() && rhs.is_exact()) return lhs.exact() == rhs.exact();
  return lhs.to_bigfloat() == rhs.to_bigfloat();
}

namespace {

// ---------------------------------------------------------------------------
// Shifted Bernoulli / Apostol-Bernoulli values: weight * P_m(x) with the
// weight exact. Stays in exact arithmetic while x (and lambda) are rational.

using ScaledSequence = std::function<BigFloat(const ExactRational& weight, unsigned m)>;

ScaledSequence shifted_bernoulli(const RealValue& x) {
  if (x.is_exact()) {
    return [x = x.exact()](const ExactRational& weight, unsigned m) {
      return BigFloat(weight * bernoulli_polynomial(m, x));
    };
  }
  return [x = x.to_bigfloat()](const ExactRational& weight, unsigned m) {
    return BigFloat(weight) * eval_polynomial(bernoulli_polynomial_coeffs(m), x);
  };
}

ScaledSequence shifted_apostol(const RealValue& x, const RealValue& lambda, unsigned max_order) {
  if (x.is_exact() && lambda.is_exact()) {
    auto beta = std::make_shared<std::vector<ExactRational>>(
        apostol_bernoulli_sequence(max_order, x.exact(), lambda.exact()));
    return [beta](const ExactRational& weight, unsigned m) {
      return BigFloat(weight * beta->at(m));
    };
  }
  if (lambda.is_exact()) {
    // beta_m(x) = sum_j C(m, j) beta_j(0) x^{m-j}
    auto at_zero = std::make_shared<std::vector<ExactRational>>(
        apostol_bernoulli_sequence(max_order, ExactRational(0), lambda.exact()));
    return [at_zero, x = x.to_bigfloat()](const ExactRational& weight, unsigned m) {
      std::vector<ExactRational> coeffs(m + 1);
      for (unsigned j = 0; j <= m; ++j) coeffs[m - j] = ExactRational(binomial(m, j)) * at_zero->at(j);
      return BigFloat(weight) * eval_polynomial(coeffs, x);
    };
  }
  auto beta = std::make_shared<std::vector<BigFloat>>(
      detail::apostol_bernoulli_recurrence(max_order, x.to_bigfloat(), lambda.to_bigfloat()));
  return [beta](const ExactRational& weight, unsigned m) { return BigFloat(weight) * beta->at(m); };
}

RealValue minus_one(const RealValue& a) {
  if (a.is_exact()) return RealValue(ExactRational(a.exact() - 1));
  return RealValue(a.to_bigfloat() - BigFloat(1L));
}

void require_positive_a(const RealValue& a) {
  if (a.sign() <= 0) throw DomainError("a must be positive, got " + a.str());
}

void require_order(long n) {
  if (n < 0) throw DomainError("coefficient index n must be non-negative, got " + std::to_string(n));
}

void require_lerch_lambda(const std::optional<RealValue>& lambda) {
  if (!lambda) throw DomainError("the lerch family needs lambda");
  if (*lambda == RealValue(1L)) {
    throw DomainError("lerch coefficient undefined at λ=1; use hurwitz family");
  }
  const bool in_disk = lambda->is_exact() ? abs(lambda->exact()) <= 1
                                          : abs(lambda->to_bigfloat()) <= BigFloat(1L);
  if (!in_disk) throw DomainError("lambda must satisfy |lambda| <= 1, got " + lambda->str());
}

ExactRational signed_weight(const BigInt& stirling, unsigned k, bool negative) {
  ExactRational w = ExactRational(stirling) / ExactRational(factorial(k + 1));
  return negative ? ExactRational(-w) : w;
}

SeriesOptions series_options(long first, const CoefficientQuery& query) {
  SeriesOptions opts;
  opts.first_index = first;
  opts.max_terms = query.max_terms;
  opts.trace = query.trace;
  return opts;
}

CoefficientResult finish(const CoefficientQuery& query, SemiConvergentResult series, BigFloat value) {
  BigFloat derivative = value * BigFloat(factorial(static_cast<unsigned>(query.n)));
  return CoefficientResult{query, std::move(series), std::move(value), std::move(derivative)};
}

}  // namespace

// ---------------------------------------------------------------------------
// Term generators

TermGenerator hurwitz_series_terms(long n, const RealValue& a, long /*max_index*/) {
  require_order(n);
  auto bernoulli = shifted_bernoulli(minus_one(a));
  return [n, bernoulli](long k) -> BigFloat {
    if (k < n) return BigFloat(0L);
    const BigInt s = stirling1(static_cast<unsigned>(k), static_cast<unsigned>(n));
    if (s == 0) return BigFloat(0L);
    // (-1)^{k+1}
    const auto uk = static_cast<unsigned>(k);
    return bernoulli(signed_weight(s, uk, k % 2 == 0), uk + 1);
  };
}

TermGenerator lerch_series_terms(long n, const RealValue& a, const RealValue& lambda,
                                 long max_index) {
  require_order(n);
  require_lerch_lambda(lambda);
  auto beta = shifted_apostol(minus_one(a), lambda, static_cast<unsigned>(std::max(max_index, n) + 1));
  return [n, beta](long k) -> BigFloat {
    if (k < n) return BigFloat(0L);
    const BigInt s = stirling1(static_cast<unsigned>(k), static_cast<unsigned>(n));
    if (s == 0) return BigFloat(0L);
    // (-1)^{k-n+1}
    const auto uk = static_cast<unsigned>(k);
    return beta(signed_weight(s, uk, (k - n) % 2 == 0), uk + 1);
  };
}

// ---------------------------------------------------------------------------
// Coefficients

CoefficientResult hurwitz_coefficient(const CoefficientQuery& query) {
  if (query.family == Family::lerch) throw std::invalid_argument("hurwitz_coefficient: lerch query");
  require_order(query.n);
  require_positive_a(query.a);
  if (query.family == Family::riemann && !(query.a == RealValue(1L))) {
    throw DomainError("the riemann family fixes a = 1");
  }
  PrecisionScope scope(query.digits);
  const long last = query.n + query.max_terms - 1;
  auto series = sum_semiconvergent(hurwitz_series_terms(query.n, query.a, last),
                                   series_options(query.n, query));
  BigFloat value = series.value - BigFloat(1L);
  return finish(query, std::move(series), std::move(value));
}

CoefficientResult riemann_coefficient(long n, int digits, int max_terms, bool trace) {
  CoefficientQuery query;
  query.family = Family::riemann;
  query.n = n;
  query.digits = digits;
  query.max_terms = max_terms;
  query.trace = trace;
  return hurwitz_coefficient(query);
}

CoefficientResult lerch_coefficient(const CoefficientQuery& query) {
  if (query.family != Family::lerch) throw std::invalid_argument("lerch_coefficient: not a lerch query");
  require_order(query.n);
  require_positive_a(query.a);
  require_lerch_lambda(query.lambda);
  PrecisionScope scope(query.digits);
  const long last = query.n + query.max_terms - 1;
  auto series = sum_semiconvergent(lerch_series_terms(query.n, query.a, *query.lambda, last),
                                   series_options(query.n, query));
  BigFloat value = query.n % 2 == 0 ? series.value : -series.value;
  return finish(query, std::move(series), std::move(value));
}

CoefficientResult compute_coefficient(const CoefficientQuery& query) {
  if (query.family == Family::lerch) return lerch_coefficient(query);
  return hurwitz_coefficient(query);
}

CoefficientResult hurwitz_coefficient_special(long n, const RealValue& a, int digits, int max_terms) {
  require_positive_a(a);
  if (n < 0 || n > 2) {
    throw UnsupportedError("special form exists only for n in {0, 1, 2}, got " + std::to_string(n));
  }
  CoefficientQuery query;
  query.n = n;
  query.a = a;
  query.digits = digits;
  query.max_terms = max_terms;
  PrecisionScope scope(digits);

  if (n == 0) {
    // 1/2 - a; the printed series holds the single term -B_1(a-1) = 3/2 - a.
    SemiConvergentResult series;
    series.value = a.is_exact() ? BigFloat(ExactRational(ExactRational(3, 2) - a.exact()))
                                : BigFloat(ExactRational(3, 2)) - a.to_bigfloat();
    series.error_estimate = BigFloat(0L);
    series.truncation_index = 0;
    series.terminated_by = Termination::converged;
    BigFloat value = a.is_exact() ? BigFloat(ExactRational(ExactRational(1, 2) - a.exact()))
                                  : BigFloat(ExactRational(1, 2)) - a.to_bigfloat();
    return finish(query, std::move(series), std::move(value));
  }

  auto bernoulli = shifted_bernoulli(minus_one(a));
  TermGenerator terms = [n, bernoulli](long k) -> BigFloat {
    const auto uk = static_cast<unsigned>(k);
    // (-1)^{k+1} / (k(k+1)), times H_{k-1} for n = 2
    ExactRational w(1, static_cast<unsigned long>(k) * (k + 1));
    if (n == 2) w *= harmonic_number(uk - 1);
    if (k % 2 == 0) w = -w;
    return bernoulli(w, uk + 1);
  };
  auto series = sum_semiconvergent(terms, series_options(n, query));
  BigFloat value = series.value - BigFloat(1L);
  return finish(query, std::move(series), std::move(value));
}

SemiConvergentResult log_gamma_series(const RealValue& a, int digits, int max_terms) {
  if (a.sign() < 0) throw DomainError("log_gamma_series needs a >= 0, got " + a.str());
  PrecisionScope scope(digits);
  auto bernoulli = shifted_bernoulli(a);
  TermGenerator terms = [bernoulli](long k) -> BigFloat {
    ExactRational w(1, static_cast<unsigned long>(k) * (k + 1));
    if (k % 2 == 0) w = -w;
    return bernoulli(w, static_cast<unsigned>(k) + 1);
  };
  SeriesOptions opts;
  opts.first_index = 1;
  opts.max_terms = max_terms;
  opts.offset = log(BigFloat(2L) * BigFloat::pi()) / BigFloat(2L) - BigFloat(1L);
  return sum_semiconvergent(terms, opts);
}

// ---------------------------------------------------------------------------
// Diagnostics

EtfSides etf_check(const std::vector<ExactRational>& poly_coeffs, const BigFloat& x, unsigned K) {
  BigFloat lhs(0L);
  BigFloat power(1L);  // x^k / k!
  for (unsigned k = 0; k <= K; ++k) {
    if (k > 0) power = power * x / BigFloat(static_cast<long>(k));
    const ExactRational fk = eval_exact_polynomial(poly_coeffs, ExactRational(k));
    if (fk != 0) lhs += BigFloat(fk) * power;
  }
  BigFloat weighted(0L);
  for (unsigned n = 0; n < poly_coeffs.size(); ++n) {
    if (poly_coeffs[n] == 0) continue;
    std::vector<ExactRational> phi;
    for (const BigInt& c : exp_polynomial_coeffs(n)) phi.emplace_back(c);
    weighted += BigFloat(poly_coeffs[n]) * eval_polynomial(phi, x);
  }
  return EtfSides{std::move(lhs), exp(x) * weighted};
}

SystemResidual system_residual(Family family, const RealValue& a,
                               const std::optional<RealValue>& lambda, long k,
                               std::optional<long> upper_index, int digits, int max_terms) {
  require_order(k);
  require_positive_a(a);
  const bool lerch = family == Family::lerch;
  if (lerch) require_lerch_lambda(lambda);
  PrecisionScope scope(digits);

  CoefficientQuery query;
  query.family = lerch ? Family::lerch : Family::hurwitz;
  query.a = a;
  query.lambda = lerch ? lambda : std::nullopt;
  query.digits = digits;
  query.max_terms = max_terms;

  // a_n: the series as printed, with (-1)^n restored for Hurwitz.
  auto row_coefficient = [&](long n) {
    query.n = n;
    const CoefficientResult r = compute_coefficient(query);
    BigFloat value = (!lerch && n % 2 != 0) ? -r.result.value : r.result.value;
    return std::pair{std::move(value), r.result};
  };

  auto [first_value, first_series] = row_coefficient(k);
  const long upper = upper_index.value_or(first_series.truncation_index);
  if (upper < k) throw std::invalid_argument("system_residual needs N >= k");

  BigFloat lhs = first_value;
  BigFloat bound = first_series.error_estimate;
  for (long n = k + 1; n <= upper; ++n) {
    const BigInt s2 = stirling2(static_cast<unsigned>(n), static_cast<unsigned>(k));
    auto [value, series] = row_coefficient(n);
    lhs += BigFloat(s2) * value;
    bound += BigFloat(s2) * series.error_estimate;
  }

  const auto uk = static_cast<unsigned>(k);
  const ExactRational weight = -ExactRational(1) / ExactRational(factorial(uk + 1));
  const BigFloat rhs = lerch ? shifted_apostol(minus_one(a), *lambda, uk + 1)(weight, uk + 1)
                             : shifted_bernoulli(minus_one(a))(weight, uk + 1);
  return SystemResidual{lhs - rhs, std::move(bound), upper};
}

}  // namespace zetacoef
