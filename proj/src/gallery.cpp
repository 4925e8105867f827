#include "framecert/gallery.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "framecert/errors.hpp"

namespace framecert::gallery {

namespace {

void check_depth(std::size_t depth, std::size_t cap, const char* name) {
  if (depth == 0) raise(ErrorKind::InvalidArgument, "depth must be at least 1");
  if (depth > cap) {
    raise(ErrorKind::DepthTooLarge,
          std::string(name) + " depth cap is " + std::to_string(cap));
  }
}

// Smallest integer n0 >= 0 with sum_{n > n0} 1/n^2 < 1.
std::size_t quadratic_tail_offset() {
  const double zeta2 = std::numbers::pi * std::numbers::pi / 6.0;
  double head = 0.0;
  for (std::size_t n0 = 0;; ++n0) {
    if (zeta2 - head < 1.0) return n0;
    const double n = static_cast<double>(n0 + 1);
    head += 1.0 / (n * n);
  }
}

// Smallest integer n0 >= 0 with sum_{n > n0} n^{-3/2} < 1, by direct tail
// summation with an integral correction for the truncated remainder.
std::size_t power_tail_offset() {
  constexpr std::size_t cutoff = 1000000;
  double partial = 0.0;
  for (std::size_t n = cutoff; n >= 1; --n) {
    const double x = static_cast<double>(n);
    partial += 1.0 / (x * std::sqrt(x));
  }
  const double c = static_cast<double>(cutoff);
  const double remainder = 2.0 / std::sqrt(c) - 0.5 / (c * std::sqrt(c));
  double tail = partial + remainder;
  for (std::size_t n0 = 0;; ++n0) {
    if (tail < 1.0) return n0;
    const double n = static_cast<double>(n0 + 1);
    tail -= 1.0 / (n * std::sqrt(n));
  }
}

// Block-repeated family: k_n copies of (scale_n) e_n per block, with the
// first copy replaced by (lead_n) e_n in the perturbed variant.
struct BlockSpec {
  std::vector<std::size_t> copies;
  std::vector<double> scale;
  std::vector<double> lead;
};

struct BlockFamilies {
  VectorFamily f;
  VectorFamily h;
  std::vector<std::size_t> block_ends;
};

BlockFamilies build_block_families(const BlockSpec& spec) {
  const std::size_t depth = spec.copies.size();
  std::size_t total = 0;
  for (std::size_t c : spec.copies) total += c;

  std::vector<double> f_rows(total * depth, 0.0);
  std::vector<double> h_rows(total * depth, 0.0);
  std::vector<std::size_t> ends;
  std::size_t row = 0;
  for (std::size_t n = 0; n < depth; ++n) {
    for (std::size_t c = 0; c < spec.copies[n]; ++c, ++row) {
      f_rows[row * depth + n] = spec.scale[n];
      h_rows[row * depth + n] = c == 0 ? spec.lead[n] : spec.scale[n];
    }
    ends.push_back(row);
  }
  return BlockFamilies{VectorFamily(depth, std::move(f_rows)),
                       VectorFamily(depth, std::move(h_rows)), std::move(ends)};
}

std::vector<double> at_block_ends(const std::vector<double>& partials,
                                  const std::vector<std::size_t>& ends) {
  std::vector<double> out;
  out.reserve(ends.size());
  for (std::size_t e : ends) out.push_back(partials[e - 1]);
  return out;
}

}  // namespace

Example21 example21(std::size_t depth) {
  check_depth(depth, kExample21MaxDepth, "ex21");
  const std::size_t n0 = quadratic_tail_offset();

  BlockSpec spec;
  for (std::size_t n = 1; n <= depth; ++n) {
    const double c = static_cast<double>((n + n0) * (n + n0));
    const double t = std::pow(static_cast<double>(n), 1.5) + 1.0;
    spec.copies.push_back(static_cast<std::size_t>(c * c));
    spec.scale.push_back(1.0 / c);
    spec.lead.push_back(t / c);
  }
  BlockFamilies fams = build_block_families(spec);

  VectorFamily g = fams.f;  // tight frame: the canonical dual is the family itself
  const PerturbationSeries series = perturbation_series(fams.f, fams.h, member_norms(g));

  return Example21{std::move(fams.f),
                   std::move(fams.h),
                   std::move(g),
                   make_trace(at_block_ends(series.lambda_partials, fams.block_ends),
                              std::nullopt),
                   make_trace(at_block_ends(series.mu_partials, fams.block_ends), 1.0),
                   n0,
                   std::move(fams.block_ends)};
}

Remark22 example_remark22(std::size_t depth) {
  check_depth(depth, kRemark22MaxDepth, "remark22");

  BlockSpec spec;
  for (std::size_t n = 1; n <= depth; ++n) {
    const double c = static_cast<double>(n + 1);
    const double t = n == 1 ? 3.0 : 2.0;
    spec.copies.push_back(static_cast<std::size_t>(c * c));
    spec.scale.push_back(1.0 / c);
    spec.lead.push_back(t / c);
  }
  BlockFamilies fams = build_block_families(spec);

  VectorFamily g = fams.f;
  const PerturbationSeries series = perturbation_series(fams.f, fams.h, member_norms(g));

  // The quadratic sum is measured against the lower frame bound A = 1.
  return Remark22{std::move(fams.f),
                  std::move(fams.h),
                  std::move(g),
                  make_trace(at_block_ends(series.lambda_partials, fams.block_ends), 1.0),
                  make_trace(at_block_ends(series.mu_partials, fams.block_ends), 1.0),
                  std::move(fams.block_ends)};
}

Example22 example22(std::size_t depth) {
  check_depth(depth, kExample22MaxDepth, "ex22");
  const std::size_t d = 2 * depth;

  std::vector<double> f_rows(2 * depth * d, 0.0);
  std::vector<double> g_rows(2 * depth * d, 0.0);
  std::vector<double> nz_rows(depth * d, 0.0);
  for (std::size_t n = 1; n <= depth; ++n) {
    const std::size_t odd = 2 * n - 2;   // row of the zero / scaled-odd slot
    const std::size_t even = 2 * n - 1;  // row of the shared e_{2n} slot
    g_rows[odd * d + (2 * n - 2)] = 1.0 / static_cast<double>(2 * n - 1);
    f_rows[even * d + (2 * n - 1)] = 1.0;
    g_rows[even * d + (2 * n - 1)] = 1.0;
    nz_rows[(n - 1) * d + (2 * n - 1)] = 1.0;
  }
  VectorFamily f(d, std::move(f_rows));
  VectorFamily g(d, std::move(g_rows));
  const VectorFamily nonzero_part(d, std::move(nz_rows));

  std::vector<double> ones(f.size(), 1.0);
  const PerturbationSeries series = perturbation_series(f, g, ones);
  std::vector<std::size_t> ends;
  for (std::size_t n = 1; n <= depth; ++n) ends.push_back(2 * n);

  // Lower-bound failure ratios r_n for the probes u_n = e_{2n-1}/(2n-1).
  std::vector<double> ratios;
  for (std::size_t n = 1; n <= depth; ++n) {
    const double scale = 1.0 / static_cast<double>(2 * n - 1);
    std::vector<double> u(d, 0.0);
    u[2 * n - 2] = scale;
    double acc = 0.0;
    for (std::size_t k = 0; k < g.size(); ++k) {
      double ip = 0.0;
      const auto row = g.vec(k);
      for (std::size_t i = 0; i < d; ++i) ip += u[i] * row[i];
      acc += ip * ip;
    }
    ratios.push_back(acc / (scale * scale));
  }

  const RieszInfo nz = riesz_bounds(nonzero_part);
  return Example22{std::move(f),
                   std::move(g),
                   make_trace(at_block_ends(series.lambda_partials, ends), std::nullopt),
                   std::move(ratios),
                   nz.is_riesz,
                   nz.bounds};
}

Example31 example31(std::size_t depth) {
  check_depth(depth, kExample31MaxDepth, "ex31");
  const std::size_t n0 = power_tail_offset();
  const std::size_t d = depth;
  const std::size_t total = depth * (depth + 1) / 2;

  Matrix x_rows(total, d);
  Matrix f_rows(total, d);
  Matrix y_rows(total, d);
  std::vector<std::size_t> ends;
  std::size_t row = 0;
  for (std::size_t n = 1; n <= depth; ++n) {
    for (std::size_t c = 0; c < n; ++c, ++row) {
      x_rows(row, n - 1) = 1.0 / static_cast<double>(n);
      f_rows(row, n - 1) = 1.0;
      const double k = static_cast<double>(row + 1 + n0);
      const double a = 1.0 / (k * std::sqrt(k));
      y_rows(row, n - 1) = x_rows(row, n - 1);
      y_rows(row, 0) += a;  // perturbation along the fixed unit vector e_1
    }
    ends.push_back(row);
  }

  SchauderFramePair pair(PNormSpace{d, PNorm::two}, std::move(x_rows), std::move(f_rows));

  // Accumulate the certificate sums member-by-member, then snapshot blocks.
  std::vector<double> mu_partials;
  std::vector<double> lambda_partials;
  double mu = 0.0;
  double lambda = 0.0;
  std::vector<double> diff(d);
  for (std::size_t k = 0; k < total; ++k) {
    std::copy(pair.x(k).begin(), pair.x(k).end(), diff.begin());
    for (std::size_t i = 0; i < d; ++i) diff[i] -= y_rows(k, i);
    const double dist = vec_pnorm(diff, PNorm::two);
    mu += dist * vec_pnorm(pair.f(k), PNorm::two);
    lambda += dist / vec_pnorm(pair.x(k), PNorm::two);
    mu_partials.push_back(mu);
    lambda_partials.push_back(lambda);
  }

  return Example31{std::move(pair),
                   std::move(y_rows),
                   make_trace(at_block_ends(mu_partials, ends), 1.0),
                   make_trace(at_block_ends(lambda_partials, ends), std::nullopt),
                   n0,
                   std::move(ends)};
}

Dichotomy dichotomy_demo(std::size_t depth) {
  check_depth(depth, kDichotomyMaxDepth, "dichotomy");
  const std::size_t d = 2 * depth + 1;
  std::vector<double> row(d, 0.0);
  row[0] = 1.0;
  VectorFamily f(d, std::move(row));
  DichotomyReport report = frame_extension_dichotomy(f, d);
  return Dichotomy{std::move(f), std::move(report)};
}

}  // namespace framecert::gallery
