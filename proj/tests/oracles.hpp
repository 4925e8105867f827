#pragma once

// Independent oracles used only by tests: they avoid the library's spectral
// code paths so the comparisons are meaningful.

#include <cstdint>
#include <random>
#include <vector>

#include "framecert/hilbert.hpp"
#include "framecert/matrix.hpp"

namespace oracles {

using framecert::Matrix;
using framecert::VectorFamily;

// det(s - x I) via Gaussian elimination with partial pivoting.
double char_poly_det(const Matrix& s, double x);

// All real eigenvalues of a symmetric matrix as sign-change brackets of the
// characteristic polynomial refined by bisection. Requires (near-)distinct
// eigenvalues; grids are refined until all n roots are bracketed.
std::vector<double> eig_by_charpoly_bisection(const Matrix& s);

// Orthonormal basis of the column span by modified Gram-Schmidt with
// reorthogonalization; columns below drop_tol * max_norm are dropped.
Matrix gram_schmidt_span(const Matrix& columns, double drop_tol = 1e-10);

// Dominant eigenvalue of a symmetric PSD matrix by power iteration.
double power_iteration_lambda_max(const Matrix& s, int iterations = 2000,
                                  std::uint64_t seed = 7);

// Random helpers (deterministic in the seed).
Matrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng,
                     double scale = 1.0);
Matrix random_symmetric(std::size_t n, std::mt19937_64& rng, double scale = 1.0);
Matrix random_orthogonal(std::size_t n, std::mt19937_64& rng);
VectorFamily random_family(std::size_t dimension, std::size_t count, std::mt19937_64& rng,
                           double scale = 1.0);

// Spanning family: a scaled basis plus count - dimension random extras.
VectorFamily random_spanning_family(std::size_t dimension, std::size_t count,
                                    std::mt19937_64& rng);

std::vector<double> random_unit_vector(std::size_t n, std::mt19937_64& rng);

}  // namespace oracles
