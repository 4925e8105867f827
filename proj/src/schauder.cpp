#include "framecert/schauder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <utility>

#include "framecert/errors.hpp"
#include "framecert/kernels.hpp"

namespace framecert {

namespace {

Matrix reconstruction_matrix(const Matrix& x_rows, const Matrix& f_rows) {
  Matrix op(x_rows.cols(), x_rows.cols());
  for (std::size_t k = 0; k < x_rows.rows(); ++k) {
    add_outer(op, x_rows.row(k), f_rows.row(k));
  }
  return op;
}

void push(NamedValues& values, const std::string& name, double v) {
  values.emplace_back(name, v);
}

struct SampledBounds {
  double u_worst_slack = std::numeric_limits<double>::infinity();
  double v_lower_worst_slack = std::numeric_limits<double>::infinity();
  double v_upper_worst_slack = std::numeric_limits<double>::infinity();
  bool ok = true;
};

// Checks || sum c_i y_i || <= u_factor * ||c||_Min and
// ||x|| / u_factor <= || V x ||_Min <= v_factor * ||x|| on sampled data.
SampledBounds sample_operator_bounds(const SchauderFramePair& fr, const Matrix& y_rows,
                                     const Matrix& g_rows, double u_factor, double v_factor,
                                     std::uint64_t seed) {
  const PNorm p = fr.space().p;
  const std::size_t n = fr.size();
  const std::size_t d = fr.space().dimension;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  SampledBounds out;

  std::vector<double> c(n);
  std::vector<double> yc(d);
  for (int trial = 0; trial < 1000; ++trial) {
    for (auto& v : c) v = gauss(rng);
    std::fill(yc.begin(), yc.end(), 0.0);
    for (std::size_t k = 0; k < n; ++k) {
      kernels::axpy(c[k], y_rows.row(k).data(), yc.data(), d);
    }
    const double slack = u_factor * min_norm(c, fr) + 1e-9 - vec_pnorm(yc, p);
    out.u_worst_slack = std::min(out.u_worst_slack, slack);
    if (slack < 0.0) out.ok = false;
  }

  std::vector<double> x(d);
  std::vector<double> coeffs(n);
  for (int trial = 0; trial < 1000; ++trial) {
    for (auto& v : x) v = gauss(rng);
    for (std::size_t k = 0; k < n; ++k) {
      coeffs[k] = kernels::dot(g_rows.row(k).data(), x.data(), d);
    }
    const double vx = min_norm(coeffs, fr);
    const double nx = vec_pnorm(x, p);
    const double low_slack = vx - (nx / u_factor - 1e-9);
    const double high_slack = v_factor * nx + 1e-9 - vx;
    out.v_lower_worst_slack = std::min(out.v_lower_worst_slack, low_slack);
    out.v_upper_worst_slack = std::min(out.v_upper_worst_slack, high_slack);
    if (low_slack < 0.0 || high_slack < 0.0) out.ok = false;
  }
  return out;
}

// Shared tail of the two vector-side certificates. contraction_bound is mu
// for the dual-weighted condition and lambda*K for the projection-constant
// one; the minimal-norm factors are 1+lambda and K/(1-contraction).
void finish_vector_side(CertificateReport& report, const SchauderFramePair& fr,
                        const Matrix& y_rows, double contraction_bound, double lambda,
                        double big_k, std::uint64_t seed) {
  const PNorm p = fr.space().p;
  const std::size_t d = fr.space().dimension;
  const Matrix identity = Matrix::identity(d);

  const Matrix l = reconstruction_matrix(y_rows, fr.f_rows());
  const double defect = op_norm(subtract(identity, l), p);
  push(report.extras, "i_minus_l_norm", defect);
  report.checks_ok = defect <= contraction_bound + 1e-9;

  if (!report.hypothesis_ok) return;
  const double u_factor = 1.0 + lambda;
  const double v_factor = big_k / (1.0 - contraction_bound);

  Matrix linv(0, 0);
  try {
    linv = solve(l, identity);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Singular) {
      raise(ErrorKind::Singular,
            "reconstruction operator not invertible despite a passing hypothesis");
    }
    throw;
  }
  const Matrix g_rows = multiply(fr.f_rows(), linv);  // g_n^T = f_n^T L^{-1}
  const double recon = op_norm(subtract(reconstruction_matrix(y_rows, g_rows), identity), p);
  push(report.extras, "new_reconstruction_residual", recon);
  report.checks_ok = report.checks_ok && recon <= kReconstructionTol;

  const SampledBounds sampled =
      sample_operator_bounds(fr, y_rows, g_rows, u_factor, v_factor, seed);
  push(report.extras, "u_worst_slack", sampled.u_worst_slack);
  push(report.extras, "v_lower_worst_slack", sampled.v_lower_worst_slack);
  push(report.extras, "v_upper_worst_slack", sampled.v_upper_worst_slack);
  report.checks_ok = report.checks_ok && sampled.ok;

  // Excess preservation between the old and the new pair.
  const std::size_t excess_x = fr.size() - rank(fr.x_rows());
  const std::size_t excess_y = fr.size() - rank(y_rows);
  push(report.extras, "excess_x", static_cast<double>(excess_x));
  push(report.extras, "excess_y", static_cast<double>(excess_y));
  report.checks_ok = report.checks_ok && excess_x == excess_y;
}

}  // namespace

SchauderFramePair::SchauderFramePair(PNormSpace space, Matrix x_rows, Matrix f_rows)
    : space_(space), x_rows_(std::move(x_rows)), f_rows_(std::move(f_rows)) {
  if (space_.dimension == 0) raise(ErrorKind::InvalidArgument, "dimension must be positive");
  if (x_rows_.rows() == 0) raise(ErrorKind::InvalidArgument, "pair must be non-empty");
  if (x_rows_.cols() != space_.dimension || f_rows_.cols() != space_.dimension) {
    raise(ErrorKind::DimensionMismatch, "pair entries must match the space dimension");
  }
  if (x_rows_.rows() != f_rows_.rows()) {
    raise(ErrorKind::LengthMismatch, "vectors and functionals differ in count");
  }
  for (std::size_t k = 0; k < x_rows_.rows(); ++k) {
    if (kernels::max_abs(x_rows_.row(k).data(), space_.dimension) == 0.0) {
      raise(ErrorKind::InvalidArgument, "zero vectors are not admitted on the x side");
    }
  }
  const double residual = op_norm(
      subtract(reconstruction_matrix(x_rows_, f_rows_), Matrix::identity(space_.dimension)),
      space_.p);
  if (residual > kReconstructionTol) {
    raise(ErrorKind::NotAFrame, "reconstruction residual " + std::to_string(residual));
  }
}

double reconstruction_residual(const SchauderFramePair& fr) {
  const std::size_t d = fr.space().dimension;
  return op_norm(subtract(reconstruction_matrix(fr.x_rows(), fr.f_rows()), Matrix::identity(d)),
                 fr.space().p);
}

double MinNormProfile::window(std::size_t m, std::size_t n) const {
  // Row m holds the windows [m, m], [m, m+1], ..., [m, count-1].
  std::size_t offset = 0;
  for (std::size_t r = 0; r < m; ++r) offset += count - r;
  return window_norms[offset + (n - m)];
}

MinNormProfile projection_constant(const SchauderFramePair& fr) {
  const std::size_t n = fr.size();
  const std::size_t d = fr.space().dimension;
  MinNormProfile profile;
  profile.count = n;
  profile.window_norms.reserve(n * (n + 1) / 2);
  Matrix acc(d, d);
  for (std::size_t m = 0; m < n; ++m) {
    acc = Matrix(d, d);
    for (std::size_t k = m; k < n; ++k) {
      add_outer(acc, fr.x(k), fr.f(k));
      const double norm = op_norm(acc, fr.space().p);
      profile.window_norms.push_back(norm);
      profile.projection_constant = std::max(profile.projection_constant, norm);
    }
  }
  return profile;
}

double min_norm(std::span<const double> coeffs, const SchauderFramePair& fr) {
  if (coeffs.size() > fr.size()) {
    raise(ErrorKind::LengthMismatch, "coefficient list longer than the pair");
  }
  const std::size_t d = fr.space().dimension;
  std::vector<double> acc(d);
  double best = 0.0;
  for (std::size_t m = 0; m < coeffs.size(); ++m) {
    std::fill(acc.begin(), acc.end(), 0.0);
    for (std::size_t k = m; k < coeffs.size(); ++k) {
      kernels::axpy(coeffs[k], fr.x(k).data(), acc.data(), d);
      best = std::max(best, vec_pnorm(acc, fr.space().p));
    }
  }
  return best;
}

CertificateReport thm31_certificate(const SchauderFramePair& fr, const Matrix& y_rows,
                                    std::uint64_t seed) {
  if (y_rows.rows() != fr.size() || y_rows.cols() != fr.space().dimension) {
    raise(ErrorKind::DimensionMismatch, "perturbed vectors must match the pair shape");
  }
  const PNorm p = fr.space().p;
  const PNorm q = dual_norm(p);
  const std::size_t n = fr.size();

  double mu = 0.0;
  double lambda = 0.0;
  std::vector<double> mu_partials;
  std::vector<double> lambda_partials;
  std::vector<double> diff(fr.space().dimension);
  for (std::size_t k = 0; k < n; ++k) {
    std::copy(fr.x(k).begin(), fr.x(k).end(), diff.begin());
    kernels::axpy(-1.0, y_rows.row(k).data(), diff.data(), diff.size());
    const double dist = vec_pnorm(diff, p);
    mu += dist * vec_pnorm(fr.f(k), q);
    lambda += dist / vec_pnorm(fr.x(k), p);
    mu_partials.push_back(mu);
    lambda_partials.push_back(lambda);
  }

  CertificateReport report;
  report.theorem = "thm31";
  const double big_k = projection_constant(fr).projection_constant;
  push(report.hypothesis_values, "mu", mu);
  push(report.hypothesis_values, "lambda", lambda);
  push(report.hypothesis_values, "K", big_k);
  report.series_traces.emplace_back("mu", make_trace(std::move(mu_partials), 1.0));
  report.series_traces.emplace_back("lambda", make_trace(std::move(lambda_partials), std::nullopt));
  report.hypothesis_ok = mu < 1.0;
  report.notes.push_back("core verdict needs only mu < 1; lambda enters the minimal-norm bounds");
  report.notes.push_back("unconditional convergence is automatic for finite sums");

  finish_vector_side(report, fr, y_rows, mu, lambda, big_k, seed);
  return report;
}

CertificateReport thm33_certificate(const SchauderFramePair& fr, const Matrix& y_rows,
                                    std::uint64_t seed) {
  if (y_rows.rows() != fr.size() || y_rows.cols() != fr.space().dimension) {
    raise(ErrorKind::DimensionMismatch, "perturbed vectors must match the pair shape");
  }
  const PNorm p = fr.space().p;
  const std::size_t n = fr.size();

  double lambda = 0.0;
  std::vector<double> lambda_partials;
  std::vector<double> diff(fr.space().dimension);
  for (std::size_t k = 0; k < n; ++k) {
    std::copy(fr.x(k).begin(), fr.x(k).end(), diff.begin());
    kernels::axpy(-1.0, y_rows.row(k).data(), diff.data(), diff.size());
    lambda += vec_pnorm(diff, p) / vec_pnorm(fr.x(k), p);
    lambda_partials.push_back(lambda);
  }

  const double big_k = projection_constant(fr).projection_constant;
  CertificateReport report;
  report.theorem = "thm33";
  push(report.hypothesis_values, "lambda", lambda);
  push(report.hypothesis_values, "K", big_k);
  push(report.hypothesis_values, "lambda_times_K", lambda * big_k);
  report.series_traces.emplace_back("lambda",
                                    make_trace(std::move(lambda_partials), 1.0 / big_k));
  report.hypothesis_ok = lambda * big_k < 1.0;

  finish_vector_side(report, fr, y_rows, lambda * big_k, lambda, big_k, seed);
  return report;
}

CertificateReport thm34_certificate(const SchauderFramePair& fr, const Matrix& g_rows,
                                    std::uint64_t seed) {
  if (g_rows.rows() != fr.size() || g_rows.cols() != fr.space().dimension) {
    raise(ErrorKind::DimensionMismatch, "perturbed functionals must match the pair shape");
  }
  (void)seed;
  const PNorm p = fr.space().p;
  const PNorm q = dual_norm(p);
  const std::size_t n = fr.size();
  const std::size_t d = fr.space().dimension;

  double mu = 0.0;
  std::vector<double> mu_partials;
  std::vector<double> diff(d);
  for (std::size_t k = 0; k < n; ++k) {
    std::copy(fr.f(k).begin(), fr.f(k).end(), diff.begin());
    kernels::axpy(-1.0, g_rows.row(k).data(), diff.data(), diff.size());
    mu += vec_pnorm(diff, q) * vec_pnorm(fr.x(k), p);
    mu_partials.push_back(mu);
  }

  CertificateReport report;
  report.theorem = "thm34";
  push(report.hypothesis_values, "mu", mu);
  report.series_traces.emplace_back("mu", make_trace(std::move(mu_partials), 1.0));
  report.hypothesis_ok = mu < 1.0;
  report.notes.push_back("reflexivity is automatic in finite dimension");

  // Dual-space operator T f = sum f(x_n) g_n, i.e. T = sum g_n x_n^T acting
  // on functional coordinates; measured in the dual norm.
  Matrix t(d, d);
  for (std::size_t k = 0; k < n; ++k) add_outer(t, g_rows.row(k), fr.x(k));
  const Matrix identity = Matrix::identity(d);
  const double defect = op_norm(subtract(identity, t), q);
  push(report.extras, "i_minus_t_norm", defect);
  report.checks_ok = defect <= mu + 1e-9;

  if (!report.hypothesis_ok) return report;

  Matrix tinv(0, 0);
  try {
    tinv = solve(t, identity);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Singular) {
      raise(ErrorKind::Singular,
            "dual-space operator not invertible despite a passing hypothesis");
    }
    throw;
  }
  // y_n = L^{-1} x_n with L^T = T, so the rows satisfy y_n^T = x_n^T T^{-1}.
  const Matrix y_rows = multiply(fr.x_rows(), tinv);
  const double recon = op_norm(subtract(reconstruction_matrix(y_rows, g_rows), identity), p);
  push(report.extras, "new_reconstruction_residual", recon);
  report.checks_ok = report.checks_ok && recon <= kReconstructionTol;
  return report;
}

std::size_t schauder_excess(const SchauderFramePair& fr) {
  return fr.size() - rank(fr.x_rows());
}

}  // namespace framecert
