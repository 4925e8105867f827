#include "framecert/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "framecert/errors.hpp"
#include "framecert/kernels.hpp"

namespace framecert {

namespace {

double off_diagonal_frobenius(const Matrix& a) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (i != j) acc += a(i, j) * a(i, j);
    }
  }
  return std::sqrt(acc);
}

void check_spectrum_residuals(const Matrix& s, const Spectrum& spec) {
  const std::size_t n = s.rows();
  const Matrix& q = spec.eigenvectors;

  Matrix qtq(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double acc = 0.0;
      for (std::size_t r = 0; r < n; ++r) acc += q(r, i) * q(r, j);
      qtq(i, j) = acc - (i == j ? 1.0 : 0.0);
    }
  }
  if (max_abs(qtq) > 1e-10) {
    raise(ErrorKind::NoConvergence, "eigenvector matrix lost orthogonality");
  }

  Matrix recon(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) acc += q(i, k) * spec.eigenvalues[k] * q(j, k);
      recon(i, j) = acc - s(i, j);
    }
  }
  if (max_abs(recon) > 1e-9 * (1.0 + max_abs(s))) {
    raise(ErrorKind::NoConvergence, "eigendecomposition residual too large");
  }
}

}  // namespace

Spectrum sym_eig(const Matrix& s) {
  if (s.rows() != s.cols() || s.rows() == 0) {
    raise(ErrorKind::NonSymmetric, "sym_eig requires a nonempty square matrix");
  }
  const std::size_t n = s.rows();
  const double scale = max_abs(s);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::fabs(s(i, j) - s(j, i)) > kSymRelTol * scale) {
        raise(ErrorKind::NonSymmetric, "matrix is not symmetric to tolerance");
      }
    }
  }

  Matrix a = s;
  // Eigenvectors accumulate transposed so plane rotations touch contiguous rows.
  Matrix vt = Matrix::identity(n);
  const double fro = frobenius(a);
  const double threshold = kJacobiOffTol * fro;

  bool converged = fro == 0.0;
  for (int sweep = 0; sweep < kJacobiMaxSweeps && !converged; ++sweep) {
    if (off_diagonal_frobenius(a) <= threshold) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::fabs(apq) <= 1e-300) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * c;

        const double app = a(p, p);
        const double aqq = a(q, q);
        // Rows p and q of J^T * A.
        kernels::plane_rot(a.row(p).data(), a.row(q).data(), n, c, sn);
        // Columns p and q of (J^T A) * J; strided access stays scalar.
        for (std::size_t r = 0; r < n; ++r) {
          const double arp = a(r, p);
          const double arq = a(r, q);
          a(r, p) = c * arp - sn * arq;
          a(r, q) = sn * arp + c * arq;
        }
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;

        kernels::plane_rot(vt.row(p).data(), vt.row(q).data(), n, c, sn);
      }
    }
  }
  if (!converged && off_diagonal_frobenius(a) > threshold) {
    raise(ErrorKind::NoConvergence,
          "Jacobi sweep cap reached at " + std::to_string(kJacobiMaxSweeps));
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&a](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });

  Spectrum spec;
  spec.eigenvalues.resize(n);
  spec.eigenvectors = Matrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    spec.eigenvalues[k] = a(order[k], order[k]);
    for (std::size_t i = 0; i < n; ++i) spec.eigenvectors(i, k) = vt(order[k], i);
  }
  check_spectrum_residuals(s, spec);
  return spec;
}

std::vector<double> singular_values(const Matrix& m) {
  if (m.empty()) return {};
  // Work with the smaller Gram matrix; both carry the same nonzero spectrum.
  const bool tall = m.rows() >= m.cols();
  const Matrix mt = transpose(m);
  const Matrix gram = tall ? multiply(mt, m) : multiply(m, mt);
  Spectrum spec = sym_eig(gram);
  const std::size_t k = std::min(m.rows(), m.cols());
  const std::size_t g = gram.rows();
  const double floor = kSpectralZeroRel * std::max(spec.eigenvalues.back(), 0.0);
  std::vector<double> sv(k, 0.0);
  for (std::size_t i = 0; i < k; ++i) {
    const double lam = spec.eigenvalues[g - 1 - i];
    sv[i] = lam > floor ? std::sqrt(lam) : 0.0;
  }
  return sv;
}

std::size_t rank(const Matrix& m, double rel_tol) {
  if (rel_tol <= 0.0) raise(ErrorKind::InvalidArgument, "rank tolerance must be positive");
  if (m.empty()) return 0;
  const std::vector<double> sv = singular_values(m);
  if (sv.empty() || sv.front() == 0.0) return 0;
  const double cut = rel_tol * sv.front();
  std::size_t r = 0;
  while (r < sv.size() && sv[r] > cut) ++r;
  return r;
}

Matrix orthonormal_span(const Matrix& columns, double rel_tol) {
  if (columns.rows() == 0) raise(ErrorKind::InvalidArgument, "span of empty space");
  const std::size_t d = columns.rows();
  if (columns.cols() == 0) return Matrix(d, 0);

  // Spectral route: eigenvectors of T T^T with sigma above the rank cut.
  Matrix s(d, d);
  for (std::size_t j = 0; j < columns.cols(); ++j) {
    std::vector<double> col(d);
    for (std::size_t i = 0; i < d; ++i) col[i] = columns(i, j);
    add_outer(s, col, col);
  }
  Spectrum spec = sym_eig(s);
  const double lam_max = spec.eigenvalues.back();
  if (lam_max <= 0.0) return Matrix(d, 0);
  const double cut = std::max(rel_tol * rel_tol, kSpectralZeroRel) * lam_max;
  std::size_t r = 0;
  while (r < d && spec.eigenvalues[d - 1 - r] > cut) ++r;

  Matrix basis(d, r);
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t i = 0; i < d; ++i) basis(i, k) = spec.eigenvectors(i, d - 1 - k);
  }
  return basis;
}

PNorm dual_norm(PNorm p) {
  switch (p) {
    case PNorm::one: return PNorm::inf;
    case PNorm::inf: return PNorm::one;
    case PNorm::two: return PNorm::two;
  }
  return PNorm::two;
}

const char* to_string(PNorm p) {
  switch (p) {
    case PNorm::one: return "1";
    case PNorm::two: return "2";
    case PNorm::inf: return "inf";
  }
  return "?";
}

double op_norm(const Matrix& m, PNorm p) {
  if (m.empty()) return 0.0;
  switch (p) {
    case PNorm::inf: {
      double best = 0.0;
      for (std::size_t i = 0; i < m.rows(); ++i) {
        best = std::max(best, kernels::sum_abs(m.row(i).data(), m.cols()));
      }
      return best;
    }
    case PNorm::one: {
      std::vector<double> colsum(m.cols(), 0.0);
      for (std::size_t i = 0; i < m.rows(); ++i) {
        const double* r = m.row(i).data();
        for (std::size_t j = 0; j < m.cols(); ++j) colsum[j] += std::fabs(r[j]);
      }
      return *std::max_element(colsum.begin(), colsum.end());
    }
    case PNorm::two: {
      const std::vector<double> sv = singular_values(m);
      return sv.empty() ? 0.0 : sv.front();
    }
  }
  raise(ErrorKind::UnsupportedNorm, "operator norm defined for p in {1,2,inf}");
}

double vec_pnorm(std::span<const double> x, PNorm p) {
  switch (p) {
    case PNorm::one: return kernels::sum_abs(x.data(), x.size());
    case PNorm::two: return std::sqrt(kernels::sum_sq(x.data(), x.size()));
    case PNorm::inf: return kernels::max_abs(x.data(), x.size());
  }
  raise(ErrorKind::UnsupportedNorm, "vector norm defined for p in {1,2,inf}");
}

double vec_norm2(std::span<const double> x) {
  return std::sqrt(kernels::sum_sq(x.data(), x.size()));
}

Matrix solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    raise(ErrorKind::InvalidArgument, "solve requires a square matrix");
  }
  if (a.rows() != b.rows()) raise(ErrorKind::DimensionMismatch, "solve: rhs row mismatch");
  const std::size_t n = a.rows();
  if (rank(a) < n) raise(ErrorKind::Singular, "coefficient matrix is rank-deficient");

  // LU with partial pivoting.
  Matrix lu = a;
  std::vector<std::size_t> piv(n);
  std::iota(piv.begin(), piv.end(), 0);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t q = k;
    double best = std::fabs(lu(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double v = std::fabs(lu(i, k));
      if (v > best) {
        best = v;
        q = i;
      }
    }
    if (best == 0.0) raise(ErrorKind::Singular, "zero pivot");
    if (q != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(q, j));
      std::swap(piv[k], piv[q]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = lu(i, k) / lu(k, k);
      lu(i, k) = f;
      if (f != 0.0) {
        kernels::axpy(-f, lu.row(k).data() + k + 1, lu.row(i).data() + k + 1, n - k - 1);
      }
    }
  }

  auto lu_solve = [&](const Matrix& rhs) {
    Matrix x(n, rhs.cols());
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < rhs.cols(); ++j) x(i, j) = rhs(piv[i], j);
    }
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = k + 1; i < n; ++i) {
        const double f = lu(i, k);
        if (f != 0.0) kernels::axpy(-f, x.row(k).data(), x.row(i).data(), rhs.cols());
      }
    }
    for (std::size_t k = n; k-- > 0;) {
      const double d = lu(k, k);
      for (std::size_t j = 0; j < rhs.cols(); ++j) x(k, j) /= d;
      for (std::size_t i = 0; i < k; ++i) {
        const double f = lu(i, k);
        if (f != 0.0) kernels::axpy(-f, x.row(k).data(), x.row(i).data(), rhs.cols());
      }
    }
    return x;
  };

  Matrix x = lu_solve(b);
  const Matrix residual = subtract(b, multiply(a, x));
  const Matrix correction = lu_solve(residual);
  return add(x, correction);
}

}  // namespace framecert
