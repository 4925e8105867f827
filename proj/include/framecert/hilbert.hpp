#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "framecert/matrix.hpp"
#include "framecert/numerics.hpp"

namespace framecert {

// Ordered finite list of vectors in R^d. Zero vectors are legal members;
// the family itself must be non-empty.
class VectorFamily {
 public:
  VectorFamily(std::size_t dimension, std::size_t count);
  VectorFamily(std::size_t dimension, std::vector<double> packed_rows);
  static VectorFamily from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t dimension() const { return dim_; }
  std::size_t size() const { return count_; }

  std::span<const double> vec(std::size_t k) const { return {data_.data() + k * dim_, dim_}; }
  std::span<double> vec(std::size_t k) { return {data_.data() + k * dim_, dim_}; }

  const std::vector<double>& packed() const { return data_; }

 private:
  std::size_t dim_ = 0;
  std::size_t count_ = 0;
  std::vector<double> data_;  // count x dim, row-major
};

struct FrameBounds {
  double lower = 0.0;
  double upper = 0.0;
};

struct FrameInfo {
  FrameBounds bounds;
  bool is_frame = false;
};

struct RieszInfo {
  FrameBounds bounds;
  bool is_riesz = false;
};

// Directional gap between spans, in [0, 1].
struct GapValue {
  double delta = 0.0;
};

// d x N matrix whose k-th column is the k-th family vector.
Matrix synthesis(const VectorFamily& fam);

// S = sum_k f_k f_k^T, symmetric positive semidefinite.
Matrix frame_operator(const VectorFamily& fam);

// Optimal bounds over the whole space: extreme eigenvalues of the frame
// operator. is_frame iff the family spans R^d at the rank tolerance.
FrameInfo frame_bounds(const VectorFamily& fam);

// Optimal bounds over span(fam): extremes of the nonzero spectrum.
// Throws ZeroFamily when every member is zero.
FrameBounds frame_sequence_bounds(const VectorFamily& fam);

// {S^+ f_k} with the inverse taken spectrally on span(fam).
VectorFamily canonical_dual(const VectorFamily& fam);

// || sum_k g_k f_k^T - P ||_2 where P projects onto span(f); zero for an
// exact dual pair.
double verify_dual_pair(const VectorFamily& f, const VectorFamily& g);

// Optimal Riesz bounds: extreme squared singular values of the synthesis,
// counting all N of them (lower = 0 whenever N > d).
RieszInfo riesz_bounds(const VectorFamily& fam);

// Number of members beyond a basis of the span: N - rank(synthesis).
std::size_t excess(const VectorFamily& fam);

// delta(K, L) = sup over unit x in K of dist(x, L); 0 when span(K) = {0}.
GapValue gap(const VectorFamily& k_fam, const VectorFamily& l_fam);

// Smallest M with sum_k <f, u_k>^2 <= M ||f||^2.
double bessel_bound(const VectorFamily& fam);

// Elementwise a - b; shapes must match.
VectorFamily difference(const VectorFamily& a, const VectorFamily& b);

// {A f_k} for a d x d matrix A.
VectorFamily apply(const Matrix& a, const VectorFamily& fam);

}  // namespace framecert
