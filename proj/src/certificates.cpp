#include "framecert/certificates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "framecert/errors.hpp"
#include "framecert/kernels.hpp"

namespace framecert {

namespace {

void require_same_shape(const VectorFamily& a, const VectorFamily& b) {
  if (a.size() != b.size()) raise(ErrorKind::LengthMismatch, "families differ in length");
  if (a.dimension() != b.dimension()) {
    raise(ErrorKind::DimensionMismatch, "families differ in dimension");
  }
}

FrameInfo require_frame(const VectorFamily& f) {
  FrameInfo info = frame_bounds(f);
  if (!info.is_frame) raise(ErrorKind::NotAFrame, "base family does not span the space");
  return info;
}

// L = sum_k h_k g_k^T, the approximate identity of the perturbation proof.
Matrix mixed_operator(const VectorFamily& h, const VectorFamily& g) {
  Matrix l(h.dimension(), h.dimension());
  for (std::size_t k = 0; k < h.size(); ++k) add_outer(l, h.vec(k), g.vec(k));
  return l;
}

bool encloses(const FrameBounds& predicted, const FrameBounds& actual) {
  return predicted.lower <= actual.lower + kEnclosureSlack &&
         actual.upper <= predicted.upper + kEnclosureSlack;
}

void push(NamedValues& values, const std::string& name, double v) {
  values.emplace_back(name, v);
}

}  // namespace

std::vector<double> member_norms(const VectorFamily& fam) {
  std::vector<double> out(fam.size());
  for (std::size_t k = 0; k < fam.size(); ++k) out[k] = vec_norm2(fam.vec(k));
  return out;
}

PerturbationSeries perturbation_series(const VectorFamily& f, const VectorFamily& h,
                                       const std::vector<double>& weights) {
  if (weights.size() != f.size()) {
    raise(ErrorKind::LengthMismatch, "weight list must match the family length");
  }
  PerturbationSeries sums;
  sums.lambda_partials.reserve(f.size());
  sums.mu_partials.reserve(f.size());
  std::vector<double> diff(f.dimension());
  for (std::size_t k = 0; k < f.size(); ++k) {
    std::copy(f.vec(k).begin(), f.vec(k).end(), diff.begin());
    kernels::axpy(-1.0, h.vec(k).data(), diff.data(), diff.size());
    const double dist = vec_norm2(diff);
    sums.lambda += dist * dist;
    sums.mu += dist * weights[k];
    sums.lambda_partials.push_back(sums.lambda);
    sums.mu_partials.push_back(sums.mu);
  }
  return sums;
}

PaleyWienerResult paley_wiener_lambda(const VectorFamily& x, const VectorFamily& y) {
  require_same_shape(x, y);
  const std::size_t d = x.dimension();
  if (x.size() != d) raise(ErrorKind::NotABasis, "base family must have exactly d members");
  const Matrix xs = synthesis(x);
  if (rank(xs) != d) raise(ErrorKind::NotABasis, "base family is rank-deficient");

  const Matrix diff = subtract(xs, synthesis(y));
  const Matrix xinv = solve(xs, Matrix::identity(d));
  PaleyWienerResult result;
  result.lambda_star = op_norm(multiply(diff, xinv), PNorm::two);
  result.basis_predicted = result.lambda_star < 1.0;
  result.rank_y = rank(synthesis(y));
  return result;
}

CertificateReport paley_wiener_report(const VectorFamily& x, const VectorFamily& y) {
  const PaleyWienerResult pw = paley_wiener_lambda(x, y);
  CertificateReport report;
  report.theorem = "pw";
  push(report.hypothesis_values, "lambda_star", pw.lambda_star);
  report.hypothesis_ok = pw.basis_predicted;
  const RieszInfo ry = riesz_bounds(y);
  report.actual = ry.bounds;
  push(report.extras, "rank_y", static_cast<double>(pw.rank_y));
  push(report.extras, "dimension", static_cast<double>(x.dimension()));
  if (report.hypothesis_ok) {
    // lambda_star < 1 forces the perturbed family to stay a basis.
    report.checks_ok = pw.rank_y == x.dimension() && ry.is_riesz;
  }
  return report;
}

double christensen_mu_star(const VectorFamily& f, const VectorFamily& g) {
  require_same_shape(f, g);
  return op_norm(synthesis(difference(f, g)), PNorm::two);
}

CertificateReport christensen_certificate(const VectorFamily& f, const VectorFamily& g,
                                          double lambda, double mu, std::uint64_t seed) {
  require_same_shape(f, g);
  if (lambda < 0.0 || mu < 0.0) {
    raise(ErrorKind::InvalidArgument, "lambda and mu must be non-negative");
  }
  const FrameInfo base = require_frame(f);
  const double a = base.bounds.lower;
  const double b = base.bounds.upper;

  CertificateReport report;
  report.theorem = "christensen";
  push(report.hypothesis_values, "lambda", lambda);
  push(report.hypothesis_values, "mu", mu);
  push(report.hypothesis_values, "A", a);
  push(report.hypothesis_values, "B", b);
  const double deficit = lambda + mu / std::sqrt(a);
  push(report.hypothesis_values, "lambda_plus_mu_over_sqrtA", deficit);

  // Sampled validation of ||sum c(f - g)|| <= lambda ||sum c f|| + mu ||c||.
  const Matrix fs = synthesis(f);
  const Matrix ds = synthesis(difference(f, g));
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  double worst_slack = std::numeric_limits<double>::infinity();
  bool violated = false;
  std::vector<double> c(f.size());
  for (int trial = 0; trial < 1000; ++trial) {
    for (auto& v : c) v = gauss(rng);
    const double lhs = vec_norm2(matvec(ds, c));
    const double rhs = lambda * vec_norm2(matvec(fs, c)) + mu * vec_norm2(c);
    const double slack = rhs - lhs;
    worst_slack = std::min(worst_slack, slack);
    if (lhs > rhs + 1e-9 * (1.0 + rhs)) violated = true;
  }
  push(report.extras, "worst_sampled_slack", worst_slack);

  report.hypothesis_ok = deficit < 1.0 && !violated;
  report.actual = frame_bounds(g).bounds;
  report.notes.push_back("upper bound evaluated as B*(1+lambda+mu/sqrt(B))^2");
  if (report.hypothesis_ok) {
    FrameBounds predicted;
    predicted.lower = a * (1.0 - deficit) * (1.0 - deficit);
    const double up = 1.0 + lambda + mu / std::sqrt(b);
    predicted.upper = b * up * up;
    report.predicted = predicted;
    report.enclosed = encloses(predicted, *report.actual);
  }
  return report;
}

CertificateReport thm21_certificate(const VectorFamily& f, const VectorFamily& h,
                                    const VectorFamily* dual) {
  require_same_shape(f, h);
  const FrameInfo base = require_frame(f);

  VectorFamily g = dual ? *dual : canonical_dual(f);
  require_same_shape(f, g);
  if (verify_dual_pair(f, g) > 1e-8) {
    raise(ErrorKind::BadDual, "supplied dual fails the reconstruction identity");
  }
  const FrameInfo dual_info = frame_bounds(g);
  const double b = base.bounds.upper;
  const double d_upper = dual_info.bounds.upper;

  const PerturbationSeries sums = perturbation_series(f, h, member_norms(g));

  CertificateReport report;
  report.theorem = "thm21";
  push(report.hypothesis_values, "lambda", sums.lambda);
  push(report.hypothesis_values, "mu", sums.mu);
  push(report.hypothesis_values, "A", base.bounds.lower);
  push(report.hypothesis_values, "B", b);
  push(report.hypothesis_values, "C", dual_info.bounds.lower);
  push(report.hypothesis_values, "D", d_upper);
  report.series_traces.emplace_back("lambda", make_trace(sums.lambda_partials, std::nullopt));
  report.series_traces.emplace_back("mu", make_trace(sums.mu_partials, 1.0));
  report.notes.push_back("dual lower bound C recorded; the predicted bounds use only D");

  report.hypothesis_ok = sums.mu < 1.0;
  report.actual = frame_bounds(h).bounds;
  if (report.hypothesis_ok) {
    FrameBounds predicted;
    predicted.lower = (1.0 - sums.mu) * (1.0 - sums.mu) / d_upper;
    const double up = 1.0 + std::sqrt(sums.lambda) / std::sqrt(b);
    predicted.upper = b * up * up;
    report.predicted = predicted;
    report.enclosed = encloses(predicted, *report.actual);

    // Proof-internal check: ||I - sum h_k g_k^T|| <= mu.
    const Matrix l = mixed_operator(h, g);
    const double defect =
        op_norm(subtract(Matrix::identity(f.dimension()), l), PNorm::two);
    push(report.extras, "isomorphism_defect", defect);
    report.checks_ok = defect <= sums.mu + 1e-9;
  }
  return report;
}

CertificateReport favier_zalik_certificate(const VectorFamily& f, const VectorFamily& h) {
  require_same_shape(f, h);
  const FrameInfo base = require_frame(f);
  const double a = base.bounds.lower;
  const double b = base.bounds.upper;
  const double m = bessel_bound(difference(f, h));

  CertificateReport report;
  report.theorem = "fz";
  push(report.hypothesis_values, "M", m);
  push(report.hypothesis_values, "A", a);
  push(report.hypothesis_values, "B", b);
  report.hypothesis_ok = m < a;
  report.actual = frame_bounds(h).bounds;
  if (report.hypothesis_ok) {
    FrameBounds predicted;
    const double lo = 1.0 - std::sqrt(m / a);
    const double up = 1.0 + std::sqrt(m / b);
    predicted.lower = lo * lo * a;
    predicted.upper = up * up * b;
    report.predicted = predicted;
    report.enclosed = encloses(predicted, *report.actual);
  }
  return report;
}

CertificateReport quadratic_closeness_check(const VectorFamily& f, const VectorFamily& g) {
  require_same_shape(f, g);
  const FrameInfo base = require_frame(f);

  std::vector<double> ones(f.size(), 1.0);
  PerturbationSeries sums = perturbation_series(f, g, ones);

  CertificateReport report;
  report.theorem = "qc";
  push(report.hypothesis_values, "lambda", sums.lambda);
  push(report.hypothesis_values, "A", base.bounds.lower);
  report.hypothesis_ok = sums.lambda < base.bounds.lower;
  report.actual = frame_bounds(g).bounds;
  report.series_traces.emplace_back("lambda",
                                    make_trace(sums.lambda_partials, base.bounds.lower));
  return report;
}

CertificateReport near_riesz_excess_certificate(const VectorFamily& f, const VectorFamily& h) {
  require_same_shape(f, h);
  const FrameInfo base = require_frame(f);
  const VectorFamily dual = canonical_dual(f);
  const PerturbationSeries sums = perturbation_series(f, h, member_norms(dual));

  CertificateReport report;
  report.theorem = "nearriesz";
  push(report.hypothesis_values, "mu", sums.mu);
  push(report.hypothesis_values, "A", base.bounds.lower);
  push(report.hypothesis_values, "B", base.bounds.upper);
  report.series_traces.emplace_back("mu", make_trace(sums.mu_partials, 1.0));
  report.hypothesis_ok = sums.mu < 1.0;
  report.actual = frame_bounds(h).bounds;

  const std::size_t excess_f = excess(f);
  push(report.extras, "excess_f", static_cast<double>(excess_f));
  if (report.hypothesis_ok) {
    const std::size_t rank_h = rank(synthesis(h));
    const std::size_t excess_h = excess(h);
    push(report.extras, "rank_h", static_cast<double>(rank_h));
    push(report.extras, "excess_h", static_cast<double>(excess_h));
    report.checks_ok = rank_h == f.dimension() && excess_h == excess_f;
  }
  return report;
}

CertificateReport gap_certificate(const VectorFamily& f, const VectorFamily& h,
                                  const VectorFamily* dual) {
  require_same_shape(f, h);
  const FrameBounds base = frame_sequence_bounds(f);  // throws ZeroFamily
  const double b = base.upper;

  VectorFamily g = dual ? *dual : canonical_dual(f);
  require_same_shape(f, g);
  if (verify_dual_pair(f, g) > 1e-8) {
    raise(ErrorKind::BadDual, "supplied dual fails the reconstruction identity");
  }
  const FrameBounds dual_bounds = frame_sequence_bounds(g);

  const PerturbationSeries sums = perturbation_series(f, h, member_norms(g));
  const double delta = gap(h, f).delta;

  CertificateReport report;
  report.theorem = "gap";
  push(report.hypothesis_values, "lambda", sums.lambda);
  push(report.hypothesis_values, "mu", sums.mu);
  push(report.hypothesis_values, "delta", delta);
  push(report.hypothesis_values, "A", base.lower);
  push(report.hypothesis_values, "B", b);
  push(report.hypothesis_values, "D", dual_bounds.upper);
  report.series_traces.emplace_back("lambda", make_trace(sums.lambda_partials, std::nullopt));
  report.series_traces.emplace_back("mu", make_trace(sums.mu_partials, 1.0));

  report.hypothesis_ok = delta < 1.0 && sums.mu < 1.0;
  report.actual = frame_sequence_bounds(h);
  if (report.hypothesis_ok) {
    FrameBounds predicted;
    predicted.lower = (1.0 - sums.mu) * (1.0 - sums.mu) / dual_bounds.upper;
    const double up = 1.0 + std::sqrt(sums.lambda) / std::sqrt(b);
    predicted.upper = b * up * up / ((1.0 - delta) * (1.0 - delta));
    report.predicted = predicted;
    report.enclosed = encloses(predicted, *report.actual);

    // The projection restricted to span(h) must be an isomorphism onto
    // span(f): full rank and smallest singular value >= 1 - delta.
    const Matrix uk = orthonormal_span(synthesis(h));
    const Matrix ul = orthonormal_span(synthesis(f));
    const Matrix projected = multiply(multiply(ul, transpose(ul)), uk);
    const std::vector<double> sv = singular_values(projected);
    const double sigma_min = sv.empty() ? 0.0 : sv.back();
    const std::size_t rank_proj = rank(projected);
    push(report.extras, "sigma_min_projection", sigma_min);
    push(report.extras, "rank_projection", static_cast<double>(rank_proj));
    push(report.extras, "dim_L", static_cast<double>(ul.cols()));
    report.checks_ok =
        sigma_min >= (1.0 - delta) - 1e-9 && sigma_min > 0.0 && rank_proj == ul.cols();
  }
  return report;
}

CertificateReport riesz_sequence_certificate(const VectorFamily& f, const VectorFamily& g) {
  require_same_shape(f, g);
  const RieszInfo base = riesz_bounds(f);
  if (!base.is_riesz) raise(ErrorKind::NotRiesz, "base family is not a Riesz sequence");

  const VectorFamily dual = canonical_dual(f);
  const PerturbationSeries sums = perturbation_series(f, g, member_norms(dual));

  CertificateReport report;
  report.theorem = "riesz";
  push(report.hypothesis_values, "lambda", sums.lambda);
  push(report.hypothesis_values, "mu", sums.mu);
  push(report.hypothesis_values, "A", base.bounds.lower);
  push(report.hypothesis_values, "B", base.bounds.upper);
  report.series_traces.emplace_back("lambda", make_trace(sums.lambda_partials, std::nullopt));
  report.series_traces.emplace_back("mu", make_trace(sums.mu_partials, 1.0));

  report.hypothesis_ok = sums.mu < 1.0;
  report.actual = riesz_bounds(g).bounds;
  if (report.hypothesis_ok) {
    FrameBounds predicted;
    predicted.lower = base.bounds.lower * (1.0 - sums.mu) * (1.0 - sums.mu);
    const double up = 1.0 + std::sqrt(sums.lambda) / std::sqrt(base.bounds.upper);
    predicted.upper = base.bounds.upper * up * up;
    report.predicted = predicted;
    report.enclosed = encloses(predicted, *report.actual);
  }
  return report;
}

DichotomyReport frame_extension_dichotomy(const VectorFamily& f, std::size_t ambient_d) {
  if (f.dimension() != ambient_d) {
    raise(ErrorKind::DimensionMismatch, "family must live in the ambient space");
  }
  const std::size_t d = ambient_d;
  const Spectrum spec = sym_eig(frame_operator(f));
  const double lam_max = std::max(spec.eigenvalues.back(), 0.0);
  const double cut = std::max(kRankRelTol * kRankRelTol, kSpectralZeroRel) * lam_max;
  std::vector<std::size_t> complement;
  for (std::size_t k = 0; k < d; ++k) {
    if (spec.eigenvalues[k] <= cut) complement.push_back(k);
  }

  DichotomyReport report;
  report.ambient = d;
  report.codim = complement.size();
  if (report.codim == 0) {
    report.note = "complement is zero-dimensional; no lower-bound failure witness exists";
    return report;
  }
  if (report.codim < 2) {
    raise(ErrorKind::InsufficientComplement,
          "witness construction needs at least 2 complement directions");
  }

  // Interleave zero / complement slots with the original members:
  //   extension: 0,      f_1, 0,          f_2, ...
  //   witness:   e_1,    f_1, (1/3) e_3,  f_2, ...
  const std::size_t pairs_from_complement = (report.codim + 1) / 2;
  const std::size_t pair_count = std::max(pairs_from_complement, f.size());
  std::vector<double> ext_rows;
  std::vector<double> wit_rows;
  std::vector<double> diff_partials;
  double diff_sum = 0.0;
  for (std::size_t n = 1; n <= pair_count; ++n) {
    if (n <= pairs_from_complement) {
      const std::size_t idx = complement[2 * n - 2];
      const double scale = 1.0 / static_cast<double>(2 * n - 1);
      std::vector<double> e(d, 0.0);
      for (std::size_t i = 0; i < d; ++i) e[i] = scale * spec.eigenvectors(i, idx);
      ext_rows.insert(ext_rows.end(), d, 0.0);
      wit_rows.insert(wit_rows.end(), e.begin(), e.end());
      diff_sum += scale * scale;
      diff_partials.push_back(diff_sum);
      report.witness_ratios.push_back(scale * scale);
    }
    if (n <= f.size()) {
      const auto v = f.vec(n - 1);
      ext_rows.insert(ext_rows.end(), v.begin(), v.end());
      wit_rows.insert(wit_rows.end(), v.begin(), v.end());
    }
  }
  report.extension = VectorFamily(d, std::move(ext_rows));
  report.witness = VectorFamily(d, std::move(wit_rows));
  report.diff_sq_trace = make_trace(std::move(diff_partials), std::nullopt);

  // Audit the ratios against the constructed witness family directly.
  const VectorFamily& witness = *report.witness;
  for (std::size_t n = 1; n <= pairs_from_complement; ++n) {
    const std::size_t idx = complement[2 * n - 2];
    const double scale = 1.0 / static_cast<double>(2 * n - 1);
    std::vector<double> u(d);
    for (std::size_t i = 0; i < d; ++i) u[i] = scale * spec.eigenvectors(i, idx);
    double acc = 0.0;
    for (std::size_t k = 0; k < witness.size(); ++k) {
      const double ip = kernels::dot(u.data(), witness.vec(k).data(), d);
      acc += ip * ip;
    }
    report.witness_ratios[n - 1] = acc / kernels::sum_sq(u.data(), d);
  }
  report.note = "witness ratios decay as 1/(2n-1)^2: no uniform lower frame bound";
  return report;
}

}  // namespace framecert
