#include "framecert/series_trace.hpp"

#include <cstddef>
#include <utility>

namespace framecert {

const char* to_string(TrendVerdict v) {
  switch (v) {
    case TrendVerdict::bounded_below_target: return "bounded_below_target";
    case TrendVerdict::exceeds_target: return "exceeds_target";
    case TrendVerdict::increasing_unbounded_trend: return "increasing_unbounded_trend";
  }
  return "?";
}

SeriesTrace make_trace(std::vector<double> partial_sums, std::optional<double> target) {
  SeriesTrace trace;
  trace.partial_sums = std::move(partial_sums);
  const auto& s = trace.partial_sums;
  if (s.empty()) return trace;

  if (target && s.back() >= *target - 1e-12) {
    trace.verdict = TrendVerdict::exceeds_target;
    return trace;
  }

  const std::size_t n = s.size();
  if (n >= 3) {
    bool harmonic_tail = true;
    double prev = 0.0;
    for (std::size_t k = n - 3; k < n; ++k) {
      const double inc = s[k] - (k == 0 ? 0.0 : s[k - 1]);
      const double weighted = inc * static_cast<double>(k + 1);
      if (inc <= 0.0 || weighted + 1e-12 < prev) {
        harmonic_tail = false;
        break;
      }
      prev = weighted;
    }
    if (harmonic_tail) {
      trace.verdict = TrendVerdict::increasing_unbounded_trend;
      return trace;
    }
  }

  trace.verdict = TrendVerdict::bounded_below_target;
  return trace;
}

}  // namespace framecert
