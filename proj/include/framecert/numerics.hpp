#pragma once

#include <cstddef>
#include <vector>

#include "framecert/matrix.hpp"

namespace framecert {

// Relative singular-value threshold for all rank / span / pseudoinverse
// decisions: sigma > kRankRelTol * sigma_max counts toward the rank.
inline constexpr double kRankRelTol = 1e-10;

// Symmetry acceptance for sym_eig: max|s - s^T| <= kSymRelTol * max|s|.
inline constexpr double kSymRelTol = 1e-12;

// Gram-route eigenvalues of exactly singular directions land at the Jacobi
// convergence noise (~1e-14 * ||S||_F by Weyl); anything below this relative
// floor is treated as an exact zero before the sigma threshold applies.
inline constexpr double kSpectralZeroRel = 1e-12;

// Cyclic Jacobi stops when the off-diagonal Frobenius norm falls below
// kJacobiOffTol * ||s||_F, or fails with NoConvergence after kJacobiMaxSweeps.
inline constexpr double kJacobiOffTol = 1e-14;
inline constexpr int kJacobiMaxSweeps = 100;

// Eigendecomposition of a symmetric matrix: s = Q diag(eigenvalues) Q^T with
// eigenvalues ascending and Q orthogonal (columns are eigenvectors).
struct Spectrum {
  std::vector<double> eigenvalues;
  Matrix eigenvectors;
};

Spectrum sym_eig(const Matrix& s);

// Singular values, descending; min(rows, cols) entries, all >= 0.
std::vector<double> singular_values(const Matrix& m);

std::size_t rank(const Matrix& m, double rel_tol = kRankRelTol);

// Orthonormal basis of the column span as matrix columns; column count equals
// rank(columns, rel_tol). An all-zero input yields a zero-column matrix.
Matrix orthonormal_span(const Matrix& columns, double rel_tol = kRankRelTol);

enum class PNorm { one, two, inf };

PNorm dual_norm(PNorm p);
const char* to_string(PNorm p);

// Induced operator norm: p=1 max column abs sum, p=inf max row abs sum,
// p=2 largest singular value.
double op_norm(const Matrix& m, PNorm p);

double vec_pnorm(std::span<const double> x, PNorm p);
double vec_norm2(std::span<const double> x);

// Solves a * x = b for square full-rank a (rank checked at kRankRelTol);
// throws Singular otherwise. One step of iterative refinement keeps the
// residual near roundoff for the well-conditioned systems built here.
Matrix solve(const Matrix& a, const Matrix& b);

}  // namespace framecert
