#include "framecert/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "framecert/errors.hpp"
#include "framecert/kernels.hpp"

namespace framecert {

VectorFamily::VectorFamily(std::size_t dimension, std::size_t count)
    : dim_(dimension), count_(count), data_(dimension * count, 0.0) {
  if (dim_ == 0) raise(ErrorKind::InvalidArgument, "family dimension must be positive");
  if (count_ == 0) raise(ErrorKind::InvalidArgument, "family must be non-empty");
}

VectorFamily::VectorFamily(std::size_t dimension, std::vector<double> packed_rows)
    : dim_(dimension), count_(0), data_(std::move(packed_rows)) {
  if (dim_ == 0) raise(ErrorKind::InvalidArgument, "family dimension must be positive");
  if (data_.empty() || data_.size() % dim_ != 0) {
    raise(ErrorKind::InvalidArgument, "packed family size is not a multiple of the dimension");
  }
  count_ = data_.size() / dim_;
  for (double v : data_) {
    if (!std::isfinite(v)) raise(ErrorKind::InvalidArgument, "family entries must be finite");
  }
}

VectorFamily VectorFamily::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) raise(ErrorKind::InvalidArgument, "family must be non-empty");
  const std::size_t d = rows.front().size();
  std::vector<double> packed;
  packed.reserve(rows.size() * d);
  for (const auto& r : rows) {
    if (r.size() != d) {
      raise(ErrorKind::DimensionMismatch, "family rows must share one dimension");
    }
    packed.insert(packed.end(), r.begin(), r.end());
  }
  return VectorFamily(d, std::move(packed));
}

Matrix synthesis(const VectorFamily& fam) {
  Matrix t(fam.dimension(), fam.size());
  for (std::size_t k = 0; k < fam.size(); ++k) {
    const auto v = fam.vec(k);
    for (std::size_t i = 0; i < fam.dimension(); ++i) t(i, k) = v[i];
  }
  return t;
}

Matrix frame_operator(const VectorFamily& fam) {
  Matrix s(fam.dimension(), fam.dimension());
  for (std::size_t k = 0; k < fam.size(); ++k) {
    const auto v = fam.vec(k);
    add_outer(s, v, v);
  }
  return s;
}

FrameInfo frame_bounds(const VectorFamily& fam) {
  const Spectrum spec = sym_eig(frame_operator(fam));
  FrameInfo info;
  info.bounds.lower = std::max(spec.eigenvalues.front(), 0.0);
  info.bounds.upper = std::max(spec.eigenvalues.back(), 0.0);
  info.is_frame = info.bounds.lower > kRankRelTol * info.bounds.upper && info.bounds.upper > 0.0;
  return info;
}

FrameBounds frame_sequence_bounds(const VectorFamily& fam) {
  const Spectrum spec = sym_eig(frame_operator(fam));
  const std::size_t d = fam.dimension();
  const double lam_max = spec.eigenvalues.back();
  if (lam_max <= 0.0) raise(ErrorKind::ZeroFamily, "family spans only {0}");
  // Nonzero spectrum at the rank tolerance (eigenvalues are squared sigmas).
  const double cut = std::max(kRankRelTol * kRankRelTol, kSpectralZeroRel) * lam_max;
  std::size_t r = 0;
  while (r < d && spec.eigenvalues[d - 1 - r] > cut) ++r;
  FrameBounds bounds;
  bounds.upper = lam_max;
  bounds.lower = spec.eigenvalues[d - r];
  return bounds;
}

VectorFamily canonical_dual(const VectorFamily& fam) {
  const Spectrum spec = sym_eig(frame_operator(fam));
  const std::size_t d = fam.dimension();
  const double lam_max = std::max(spec.eigenvalues.back(), 0.0);
  const double cut = std::max(kRankRelTol * kRankRelTol, kSpectralZeroRel) * lam_max;
  Matrix pinv(d, d);
  for (std::size_t k = 0; k < d; ++k) {
    const double lam = spec.eigenvalues[k];
    if (lam <= cut || lam <= 0.0) continue;
    std::vector<double> col(d);
    for (std::size_t i = 0; i < d; ++i) col[i] = spec.eigenvectors(i, k);
    add_outer(pinv, col, col, 1.0 / lam);
  }
  return apply(pinv, fam);
}

double verify_dual_pair(const VectorFamily& f, const VectorFamily& g) {
  if (f.size() != g.size()) raise(ErrorKind::LengthMismatch, "dual pair lengths differ");
  if (f.dimension() != g.dimension()) {
    raise(ErrorKind::DimensionMismatch, "dual pair dimensions differ");
  }
  const std::size_t d = f.dimension();
  Matrix mix(d, d);
  for (std::size_t k = 0; k < f.size(); ++k) add_outer(mix, g.vec(k), f.vec(k));

  const Matrix basis = orthonormal_span(synthesis(f));
  Matrix projector(d, d);
  for (std::size_t k = 0; k < basis.cols(); ++k) {
    std::vector<double> col(d);
    for (std::size_t i = 0; i < d; ++i) col[i] = basis(i, k);
    add_outer(projector, col, col);
  }
  return op_norm(subtract(mix, projector), PNorm::two);
}

RieszInfo riesz_bounds(const VectorFamily& fam) {
  const std::size_t d = fam.dimension();
  const std::size_t n = fam.size();
  RieszInfo info;
  if (n > d) {
    // More members than dimensions: the smallest singular value is zero.
    const Spectrum spec = sym_eig(frame_operator(fam));
    info.bounds.lower = 0.0;
    info.bounds.upper = std::max(spec.eigenvalues.back(), 0.0);
  } else {
    const Matrix t = synthesis(fam);
    const Matrix gram = multiply(transpose(t), t);
    const Spectrum spec = sym_eig(gram);
    info.bounds.lower = std::max(spec.eigenvalues.front(), 0.0);
    info.bounds.upper = std::max(spec.eigenvalues.back(), 0.0);
  }
  info.is_riesz = info.bounds.lower > kRankRelTol * info.bounds.upper && info.bounds.upper > 0.0;
  return info;
}

std::size_t excess(const VectorFamily& fam) { return fam.size() - rank(synthesis(fam)); }

GapValue gap(const VectorFamily& k_fam, const VectorFamily& l_fam) {
  if (k_fam.dimension() != l_fam.dimension()) {
    raise(ErrorKind::DimensionMismatch, "gap requires one ambient dimension");
  }
  const Matrix uk = orthonormal_span(synthesis(k_fam));
  if (uk.cols() == 0) return GapValue{0.0};
  const Matrix ul = orthonormal_span(synthesis(l_fam));

  // residual = (I - P_L) U_K, computed as U_K - U_L (U_L^T U_K).
  Matrix residual = uk;
  if (ul.cols() > 0) {
    const Matrix mixed = multiply(transpose(ul), uk);
    const Matrix proj = multiply(ul, mixed);
    residual = subtract(uk, proj);
  }
  const double delta = std::clamp(op_norm(residual, PNorm::two), 0.0, 1.0);
  return GapValue{delta};
}

double bessel_bound(const VectorFamily& fam) {
  const Spectrum spec = sym_eig(frame_operator(fam));
  return std::max(spec.eigenvalues.back(), 0.0);
}

VectorFamily difference(const VectorFamily& a, const VectorFamily& b) {
  if (a.size() != b.size()) raise(ErrorKind::LengthMismatch, "difference: lengths differ");
  if (a.dimension() != b.dimension()) {
    raise(ErrorKind::DimensionMismatch, "difference: dimensions differ");
  }
  std::vector<double> packed = a.packed();
  kernels::axpy(-1.0, b.packed().data(), packed.data(), packed.size());
  return VectorFamily(a.dimension(), std::move(packed));
}

VectorFamily apply(const Matrix& a, const VectorFamily& fam) {
  if (a.rows() != fam.dimension() || a.cols() != fam.dimension()) {
    raise(ErrorKind::DimensionMismatch, "apply: operator shape mismatch");
  }
  VectorFamily out(fam.dimension(), fam.size());
  for (std::size_t k = 0; k < fam.size(); ++k) {
    const std::vector<double> y = matvec(a, fam.vec(k));
    std::copy(y.begin(), y.end(), out.vec(k).begin());
  }
  return out;
}

}  // namespace framecert
