#pragma once

// Minimal-term summation of semi-convergent (asymptotic) series.

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "zetacoef/bigfloat.hpp"
#include "zetacoef/exact.hpp"

namespace zetacoef {

struct TraceRecord {
  long k = 0;
  BigFloat term;
  BigFloat partial_sum;
};

enum class Termination { minimal_term, converged, max_terms };

std::string_view to_string(Termination t);

struct SemiConvergentResult {
  BigFloat value;
  BigFloat error_estimate;
  long truncation_index = 0;
  Termination terminated_by = Termination::max_terms;
  /// Every generated term, including the look-ahead past the truncation point.
  std::optional<std::vector<TraceRecord>> trace;
};

/// Produces term k. Called with strictly increasing k from a single thread.
using TermGenerator = std::function<BigFloat(long k)>;

struct SeriesOptions {
  long first_index = 0;
  int max_terms = 64;
  /// Absolute threshold; defaults to 10^-digits at the working precision.
  std::optional<BigFloat> convergence_threshold;
  /// Added to every partial sum (the sum starts from this value).
  std::optional<BigFloat> offset;
  bool trace = false;
};

/// Sums terms k = first_index, first_index+1, ... and stops at whichever comes
/// first:
///  - converged: two consecutive terms below the threshold; the estimate is
///    the threshold itself.
///  - minimal_term: every nonzero term followed by a nonzero term at least as
///    large is a candidate truncation point, with that next magnitude as its
///    error estimate. Once the three latest candidates (none earlier than the
///    best so far) show strictly growing estimates, the sum is taken through
///    the candidate with the smallest estimate, earliest on ties.
///    Exact zero terms are summed but skipped by this test.
///  - max_terms: the estimate is the magnitude of the last nonzero term.
/// Throws NonFiniteTermError for a NaN/infinite term and std::invalid_argument
/// for max_terms < 2 or a non-positive threshold.
SemiConvergentResult sum_semiconvergent(const TermGenerator& terms, const SeriesOptions& options = {});

/// Horner evaluation of sum_j coeffs[j] x^j at the working precision.
BigFloat eval_polynomial(const std::vector<ExactRational>& coeffs, const BigFloat& x);

}  // namespace zetacoef
