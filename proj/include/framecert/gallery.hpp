#pragma once

#include <cstddef>
#include <vector>

#include "framecert/certificates.hpp"
#include "framecert/hilbert.hpp"
#include "framecert/schauder.hpp"
#include "framecert/series_trace.hpp"

// Parameterized generators for the worked perturbation instances, truncated
// at a chosen depth. Traces are per block; divergence is always reported as
// a trend over the computed partial sums, never asserted as a limit.

namespace framecert::gallery {

// Tight unit-bound frame built from c_n = (n+n0)^2 repetitions of (1/c_n)e_n,
// with the leading copy of each block rescaled to t_n/c_n in the perturbed
// family. n0 is the smallest integer whose quadratic tail falls below 1.
// Depth capped at 6: the member count grows like (n+n0)^4.
struct Example21 {
  VectorFamily f;
  VectorFamily h;
  VectorFamily g;  // canonical dual; equals f since the frame is tight
  SeriesTrace lambda_trace;
  SeriesTrace mu_trace;
  std::size_t n_offset = 0;
  std::vector<std::size_t> block_ends;  // member index after each block
};

Example21 example21(std::size_t depth);

// Same construction with c_n = n+1, t_1 = 3, t_n = 2: the quadratic
// closeness sum passes A = 1 at the first block while the dual-weighted sum
// stays below 1. Depth capped at 20.
struct Remark22 {
  VectorFamily f;
  VectorFamily h;
  VectorFamily g;
  SeriesTrace lambda_trace;
  SeriesTrace mu_trace;
  std::vector<std::size_t> block_ends;
};

Remark22 example_remark22(std::size_t depth);

// Riesz sequence 0, e2, 0, e4, ... against e1, e2, (1/3)e3, e4, ... in
// R^(2*depth): quadratically close, yet the perturbed family's lower frame
// ratio r_n = 1/(2n-1)^2 decays to zero.
struct Example22 {
  VectorFamily f;
  VectorFamily g;
  SeriesTrace diff_sq_trace;
  std::vector<double> ratios;
  bool nonzero_part_riesz = false;
  FrameBounds nonzero_part_bounds;
};

Example22 example22(std::size_t depth);

// Schauder pair with block n holding n copies of e_n/n against n copies of
// e_n, perturbed by y_k = x_k + a_k e_1 with a_k = (k+n0)^{-3/2}: the
// dual-weighted sum stays below 1 while the relative sum diverges.
// Depth capped at 40; the member count is depth(depth+1)/2.
struct Example31 {
  SchauderFramePair pair;
  Matrix y_rows;
  SeriesTrace mu_trace;
  SeriesTrace lambda_trace;
  std::size_t n_offset = 0;
  std::vector<std::size_t> block_ends;
};

Example31 example31(std::size_t depth);

// Dichotomy witness: f = {e1} inside R^(2*depth+1) leaves a 2*depth
// dimensional complement, enough for depth interleaved witness pairs.
struct Dichotomy {
  VectorFamily f;
  DichotomyReport report;
};

Dichotomy dichotomy_demo(std::size_t depth);

inline constexpr std::size_t kExample21MaxDepth = 6;
inline constexpr std::size_t kRemark22MaxDepth = 20;
inline constexpr std::size_t kExample22MaxDepth = 500;
inline constexpr std::size_t kExample31MaxDepth = 40;
inline constexpr std::size_t kDichotomyMaxDepth = 100;

}  // namespace framecert::gallery
