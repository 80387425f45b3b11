#include "zetacoef/series.hpp"

#include <stdexcept>

#include "zetacoef/errors.hpp"

namespace zetacoef {

std::string_view to_string(Termination t) {
  switch (t) {
    case Termination::minimal_term:
      return "minimal_term";
    case Termination::converged:
      return "converged";
    case Termination::max_terms:
      return "max_terms";
  }
  return "unknown";
}

SemiConvergentResult sum_semiconvergent(const TermGenerator& terms, const SeriesOptions& options) {
  if (options.max_terms < 2) throw std::invalid_argument("max_terms must be at least 2");
  const BigFloat threshold =
      options.convergence_threshold ? *options.convergence_threshold : BigFloat::pow10(-working_digits());
  if (threshold.sign() <= 0) throw std::invalid_argument("convergence threshold must be positive");

  // A candidate truncation point is a nonzero term whose next nonzero term is
  // at least as large; its error estimate is that next magnitude.
  struct Candidate {
    long k;
    BigFloat estimate;
    BigFloat partial_sum;
  };
  std::vector<Candidate> candidates;
  std::size_t best = 0;
  std::optional<Candidate> last_nonzero;  // estimate field holds |term|
  std::vector<TraceRecord> trace;

  SemiConvergentResult result;
  BigFloat sum = options.offset ? *options.offset : BigFloat(0L);
  bool previous_small = false;

  const long last = options.first_index + options.max_terms - 1;
  for (long k = options.first_index; k <= last; ++k) {
    BigFloat term = terms(k);
    if (!term.is_finite()) throw NonFiniteTermError(k);
    sum += term;
    BigFloat magnitude = abs(term);
    if (options.trace) trace.push_back({k, term, sum});

    const bool small = magnitude < threshold;
    if (small && previous_small) {
      result.value = sum;
      result.error_estimate = threshold;
      result.truncation_index = k;
      result.terminated_by = Termination::converged;
      break;
    }
    previous_small = small;

    if (!term.is_zero()) {
      if (last_nonzero && magnitude >= last_nonzero->estimate) {
        candidates.push_back({last_nonzero->k, magnitude, last_nonzero->partial_sum});
        const std::size_t n = candidates.size();
        if (candidates[n - 1].estimate < candidates[best].estimate) best = n - 1;
        // The minimum has passed once the three latest candidates, all at or
        // after the best one, grow strictly.
        if (n >= 3 && best <= n - 3 && candidates[n - 3].estimate < candidates[n - 2].estimate &&
            candidates[n - 2].estimate < candidates[n - 1].estimate) {
          const Candidate& chosen = candidates[best];
          result.value = chosen.partial_sum;
          result.error_estimate = chosen.estimate;
          result.truncation_index = chosen.k;
          result.terminated_by = Termination::minimal_term;
          break;
        }
      }
      last_nonzero = Candidate{k, std::move(magnitude), sum};
    }

    if (k == last) {
      result.value = sum;
      result.error_estimate = last_nonzero ? last_nonzero->estimate : BigFloat(0L);
      result.truncation_index = k;
      result.terminated_by = Termination::max_terms;
    }
  }

  if (options.trace) result.trace = std::move(trace);
  return result;
}

BigFloat eval_polynomial(const std::vector<ExactRational>& coeffs, const BigFloat& x) {
  BigFloat acc(0L);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + BigFloat(*it);
  return acc;
}

}  // namespace zetacoef
