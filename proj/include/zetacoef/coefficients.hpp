#pragma once

// Maclaurin coefficients (in s, about s = 0) of the Hurwitz, Riemann and Lerch
// zeta functions from their Stirling/Bernoulli series, plus the logGamma
// series, the exponential transformation identity and the triangular-system
// residual used as diagnostics.

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "zetacoef/bigfloat.hpp"
#include "zetacoef/exact.hpp"
#include "zetacoef/series.hpp"

namespace zetacoef {

enum class Family { hurwitz, riemann, lerch };

std::string_view to_string(Family family);
/// Throws std::invalid_argument for an unknown name.
Family parse_family(std::string_view name);

inline constexpr int kDefaultMaxTerms = 64;

/// A real parameter held exactly when possible.
class RealValue {
 public:
  RealValue(ExactRational value) : value_(std::move(value)) {}  // NOLINT
  RealValue(long value) : value_(ExactRational(value)) {}       // NOLINT
  explicit RealValue(BigFloat value) : value_(std::move(value)) {}

  /// Accepts "p/q" and decimal literals ("0.5", "-1.25e-3"), both parsed
  /// exactly. Throws std::invalid_argument.
  static RealValue parse(std::string_view text);

  bool is_exact() const { return std::holds_alternative<ExactRational>(value_); }
  /// Precondition: is_exact().
  const ExactRational& exact() const { return std::get<ExactRational>(value_); }
  /// Value at the working precision.
  BigFloat to_bigfloat() const;
  int sign() const;
  /// "p/q" (or "p") when exact, a decimal otherwise.
  std::string str() const;

  friend bool operator==(const RealValue& lhs, const RealValue& rhs);

 private:
  std::variant<ExactRational, BigFloat> value_;
};

struct CoefficientQuery {
  Family family = Family::hurwitz;
  long n = 0;
  RealValue a{1L};
  /// Present iff family == lerch.
  std::optional<RealValue> lambda;
  int digits = kDefaultDigits;
  int max_terms = kDefaultMaxTerms;
  bool trace = false;
};

struct CoefficientResult {
  CoefficientQuery query;
  /// The series as printed: without the -1 offset (Hurwitz) or the (-1)^n
  /// sign (Lerch).
  SemiConvergentResult result;
  /// The Taylor coefficient.
  BigFloat value;
  /// n! * value, the n-th s-derivative at s = 0.
  BigFloat derivative_value;
};

/// zeta_n(a) = -1 + sum_{k>=n} (-1)^{k+1} [k n] B_{k+1}(a-1) / (k+1)!.
/// Accepts family hurwitz or riemann (the latter requires a = 1).
/// Throws DomainError for a <= 0 or n < 0.
CoefficientResult hurwitz_coefficient(const CoefficientQuery& query);

/// Hurwitz coefficient at a = 1.
CoefficientResult riemann_coefficient(long n, int digits = kDefaultDigits,
                                      int max_terms = kDefaultMaxTerms, bool trace = false);

/// Lerch coefficient c_n(a, lambda) for real lambda with |lambda| <= 1,
/// lambda != 1. The series sums (-1)^{k-n+1} [k n] beta_{k+1}(a-1, lambda)/(k+1)!;
/// that sum is (-1)^n times the Taylor coefficient, and `value` carries the
/// corrected sign. Throws DomainError for lambda = 1 (use the Hurwitz family),
/// |lambda| > 1, a <= 0 or n < 0.
CoefficientResult lerch_coefficient(const CoefficientQuery& query);

/// Dispatches on query.family.
CoefficientResult compute_coefficient(const CoefficientQuery& query);

/// n = 0: the closed form 1/2 - a (exact series of one term). n = 1, 2: the
/// series with [k 1] = (k-1)! and [k 2] = (k-1)! H_{k-1} folded into
/// 1/(k(k+1)). Throws UnsupportedError for other n.
CoefficientResult hurwitz_coefficient_special(long n, const RealValue& a,
                                              int digits = kDefaultDigits,
                                              int max_terms = kDefaultMaxTerms);

/// log Gamma(1+a) = (1/2) log 2pi - 1 + sum_{k>=1} (-1)^{k+1} B_{k+1}(a)/(k(k+1)),
/// summed semi-convergently; the constant is the summation offset, so the
/// result value is the whole right side. Throws DomainError for a < 0.
SemiConvergentResult log_gamma_series(const RealValue& a, int digits = kDefaultDigits,
                                      int max_terms = kDefaultMaxTerms);

/// Term generators of the two series as printed (for tracing and tests).
/// Must be called inside a PrecisionScope; max_index bounds the k requested.
TermGenerator hurwitz_series_terms(long n, const RealValue& a, long max_index);
TermGenerator lerch_series_terms(long n, const RealValue& a, const RealValue& lambda,
                                 long max_index);

struct EtfSides {
  BigFloat lhs;
  BigFloat rhs;
};

/// Both sides of sum_{k<=K} f(k) x^k/k! = e^x sum_n a_n phi_n(x) for the
/// polynomial f = sum_n a_n x^n given by `poly_coeffs` (ascending).
EtfSides etf_check(const std::vector<ExactRational>& poly_coeffs, const BigFloat& x, unsigned K);

struct SystemResidual {
  /// sum_{n=k}^{N} {n k} a_n - rhs_k.
  BigFloat residual;
  /// sum_{n=k}^{N} {n k} * (error estimate of a_n).
  BigFloat error_bound;
  long upper_index = 0;
};

/// Plugs the series-computed a_n back into row k of the triangular system
///   sum_{n>=k} {n k} a_n = -B_{k+1}(a-1)/(k+1)!        (hurwitz)
///   sum_{n>=k} {n k} a_n = -beta_{k+1}(a-1,lambda)/(k+1)!  (lerch)
/// where a_n = (-1)^n (zeta_n(a) + 1), resp. the printed Lerch series. N
/// defaults to the truncation index of the row-k coefficient computation.
/// Requires N >= k. Diagnostic only.
SystemResidual system_residual(Family family, const RealValue& a,
                               const std::optional<RealValue>& lambda, long k,
                               std::optional<long> upper_index = std::nullopt,
                               int digits = kDefaultDigits, int max_terms = kDefaultMaxTerms);

}  // namespace zetacoef
