#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "framecert/certificates.hpp"
#include "framecert/matrix.hpp"
#include "framecert/numerics.hpp"

namespace framecert {

// Finite-dimensional stand-in for a Banach space: R^d under an exactly
// computable p-norm. Functionals carry the dual exponent (1 <-> inf, 2 self).
struct PNormSpace {
  std::size_t dimension = 0;
  PNorm p = PNorm::two;
};

// Paired vectors x_j and functionals f_j with the reconstruction identity
// sum_j x_j f_j^T = I (to 1e-8 in the induced norm). Zero x_j are rejected.
class SchauderFramePair {
 public:
  SchauderFramePair(PNormSpace space, Matrix x_rows, Matrix f_rows);

  const PNormSpace& space() const { return space_; }
  std::size_t size() const { return x_rows_.rows(); }
  std::span<const double> x(std::size_t k) const { return x_rows_.row(k); }
  std::span<const double> f(std::size_t k) const { return f_rows_.row(k); }
  const Matrix& x_rows() const { return x_rows_; }
  const Matrix& f_rows() const { return f_rows_; }

 private:
  PNormSpace space_;
  Matrix x_rows_;  // N x d
  Matrix f_rows_;  // N x d
};

inline constexpr double kReconstructionTol = 1e-8;

double reconstruction_residual(const SchauderFramePair& fr);

// Exact maximum of || sum_{i=m}^{n} x_i f_i^T || over all windows, with the
// full window table retained.
struct MinNormProfile {
  double projection_constant = 0.0;
  std::size_t count = 0;
  std::vector<double> window_norms;  // packed upper triangle, m <= n

  double window(std::size_t m, std::size_t n) const;  // 0-based, inclusive
};

MinNormProfile projection_constant(const SchauderFramePair& fr);

// || c ||_Min = max over windows [m, n] of || sum_{i=m}^{n} c_i x_i ||_p.
double min_norm(std::span<const double> coeffs, const SchauderFramePair& fr);

// Vector-side perturbation with mu = sum ||x_n - y_n|| ||f_n|| < 1; builds
// the dual g_n = (L^{-1})^T f_n and verifies the new reconstruction plus the
// sampled minimal-norm operator bounds.
CertificateReport thm31_certificate(const SchauderFramePair& fr, const Matrix& y_rows,
                                    std::uint64_t seed = 0);

// Same perturbation measured against the projection constant:
// lambda = sum ||x_n - y_n|| / ||x_n|| < 1/K.
CertificateReport thm33_certificate(const SchauderFramePair& fr, const Matrix& y_rows,
                                    std::uint64_t seed = 0);

// Functional-side perturbation with mu = sum ||f_n - g_n|| ||x_n|| < 1;
// builds y_n = L^{-1} x_n through the dual-space operator T = L^T.
CertificateReport thm34_certificate(const SchauderFramePair& fr, const Matrix& g_rows,
                                    std::uint64_t seed = 0);

// Members beyond a basis of span{x_n}: N - rank(X).
std::size_t schauder_excess(const SchauderFramePair& fr);

}  // namespace framecert
