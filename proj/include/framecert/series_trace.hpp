#pragma once

#include <optional>
#include <vector>

namespace framecert {

// Finite-truncation reading of an infinite non-negative series. The verdict
// is a hint, never an assertion about the limit: exceeds_target when the
// partial sums already pass the target, increasing_unbounded_trend when the
// tail increments decay no faster than a harmonic comparison, and
// bounded_below_target otherwise.
enum class TrendVerdict {
  bounded_below_target,
  exceeds_target,
  increasing_unbounded_trend,
};

const char* to_string(TrendVerdict v);

struct SeriesTrace {
  std::vector<double> partial_sums;
  TrendVerdict verdict = TrendVerdict::bounded_below_target;

  double total() const { return partial_sums.empty() ? 0.0 : partial_sums.back(); }
};

// Classifies the partial sums of a series with non-negative terms against an
// optional finite target. The divergence hint compares n * increment_n over
// the last three entries: a 1/n-like tail keeps that product from decaying.
SeriesTrace make_trace(std::vector<double> partial_sums, std::optional<double> target);

}  // namespace framecert
