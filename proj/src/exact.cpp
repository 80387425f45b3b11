#include "zetacoef/exact.hpp"

#include <mutex>

#include "zetacoef/detail/apostol.hpp"
#include "zetacoef/errors.hpp"

namespace zetacoef {

namespace {

// Lower-triangular table grown row by row from a three-term recurrence
// row[k+1][n] = weight(k, n) * row[k][n] + row[k][n-1].
class StirlingTable {
 public:
  enum class Kind { first, second };

  explicit StirlingTable(Kind kind) : kind_(kind) { rows_.push_back({BigInt(1)}); }

  BigInt at(unsigned row, unsigned col) {
    if (col > row) return BigInt(0);
    std::lock_guard lock(mutex_);
    while (rows_.size() <= row) grow();
    return rows_[row][col];
  }

 private:
  void grow() {
    const auto& prev = rows_.back();
    const unsigned k = static_cast<unsigned>(rows_.size()) - 1;
    std::vector<BigInt> next(k + 2);
    for (unsigned n = 0; n <= k + 1; ++n) {
      BigInt value(0);
      if (n <= k) value = (kind_ == Kind::first ? BigInt(k) : BigInt(n)) * prev[n];
      if (n >= 1) value += prev[n - 1];
      next[n] = std::move(value);
    }
    rows_.push_back(std::move(next));
  }

  Kind kind_;
  std::mutex mutex_;
  std::vector<std::vector<BigInt>> rows_;
};

StirlingTable& first_kind() {
  static StirlingTable table(StirlingTable::Kind::first);
  return table;
}

StirlingTable& second_kind() {
  static StirlingTable table(StirlingTable::Kind::second);
  return table;
}

class BernoulliCache {
 public:
  ExactRational at(unsigned n) {
    std::lock_guard lock(mutex_);
    while (values_.size() <= n) extend();
    return values_[n];
  }

 private:
  // B_m = -1/(m+1) sum_{j<m} C(m+1, j) B_j
  void extend() {
    const unsigned m = static_cast<unsigned>(values_.size());
    if (m == 0) {
      values_.emplace_back(1);
      return;
    }
    if (m >= 3 && m % 2 == 1) {
      values_.emplace_back(0);
      return;
    }
    ExactRational acc(0);
    for (unsigned j = 0; j < m; ++j) {
      if (values_[j] != 0) acc += ExactRational(binomial(m + 1, j)) * values_[j];
    }
    values_.push_back(-acc / ExactRational(m + 1));
  }

  std::mutex mutex_;
  std::vector<ExactRational> values_;
};

BernoulliCache& bernoulli_cache() {
  static BernoulliCache cache;
  return cache;
}

}  // namespace

BigInt stirling1(unsigned k, unsigned n) { return first_kind().at(k, n); }

BigInt stirling2(unsigned n, unsigned k) { return second_kind().at(n, k); }

ExactRational bernoulli_number(unsigned n) { return bernoulli_cache().at(n); }

std::vector<ExactRational> bernoulli_polynomial_coeffs(unsigned n) {
  // B_n(x) = sum_j C(n, j) B_j x^{n-j}
  std::vector<ExactRational> coeffs(n + 1);
  for (unsigned j = 0; j <= n; ++j) {
    coeffs[n - j] = ExactRational(binomial(n, j)) * bernoulli_number(j);
  }
  return coeffs;
}

ExactRational bernoulli_polynomial(unsigned n, const ExactRational& x) {
  return eval_exact_polynomial(bernoulli_polynomial_coeffs(n), x);
}

std::vector<ExactRational> apostol_bernoulli_sequence(unsigned n, const ExactRational& a,
                                                      const ExactRational& lambda) {
  if (lambda == 1) {
    throw DomainError("apostol-bernoulli undefined at λ=1; use bernoulli_polynomial");
  }
  return detail::apostol_bernoulli_recurrence(n, a, lambda);
}

ExactRational apostol_bernoulli(unsigned n, const ExactRational& a, const ExactRational& lambda) {
  return apostol_bernoulli_sequence(n, a, lambda).back();
}

ExactRational harmonic_number(unsigned k) {
  ExactRational sum(0);
  for (unsigned j = 1; j <= k; ++j) sum += ExactRational(1, j);
  return sum;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return BigInt(0);
  k = std::min(k, n - k);
  BigInt result(1);
  for (unsigned i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt factorial(unsigned n) {
  BigInt result(1);
  for (unsigned i = 2; i <= n; ++i) result *= i;
  return result;
}

std::vector<BigInt> exp_polynomial_coeffs(unsigned n) {
  std::vector<BigInt> coeffs(n + 1);
  for (unsigned k = 0; k <= n; ++k) coeffs[k] = stirling2(n, k);
  return coeffs;
}

ExactRational eval_exact_polynomial(const std::vector<ExactRational>& coeffs,
                                    const ExactRational& x) {
  ExactRational acc(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace zetacoef
