#include "framecert/matrix.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "framecert/errors.hpp"
#include "framecert/kernels.hpp"

namespace framecert {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    raise(ErrorKind::InvalidArgument, "matrix entry count " + std::to_string(data_.size()) +
                                          " does not match " + std::to_string(rows_) + "x" +
                                          std::to_string(cols_));
  }
  for (double v : data_) {
    if (!std::isfinite(v)) {
      raise(ErrorKind::InvalidArgument, "matrix entries must be finite");
    }
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    raise(ErrorKind::DimensionMismatch, "multiply: " + std::to_string(a.cols()) + " vs " +
                                            std::to_string(b.rows()) + " inner dimensions");
  }
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double* ci = c.row(i).data();
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const double ail = a(i, l);
      if (ail != 0.0) kernels::axpy(ail, b.row(l).data(), ci, b.cols());
    }
  }
  return c;
}

Matrix transpose(const Matrix& m) {
  Matrix t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  }
  return t;
}

Matrix add(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    raise(ErrorKind::DimensionMismatch, "add: shape mismatch");
  }
  Matrix c = a;
  kernels::axpy(1.0, b.data(), c.data(), b.rows() * b.cols());
  return c;
}

Matrix subtract(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    raise(ErrorKind::DimensionMismatch, "subtract: shape mismatch");
  }
  Matrix c = a;
  kernels::axpy(-1.0, b.data(), c.data(), b.rows() * b.cols());
  return c;
}

void add_outer(Matrix& s, std::span<const double> u, std::span<const double> v, double scale) {
  if (s.rows() != u.size() || s.cols() != v.size()) {
    raise(ErrorKind::DimensionMismatch, "add_outer: shape mismatch");
  }
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double w = scale * u[i];
    if (w != 0.0) kernels::axpy(w, v.data(), s.row(i).data(), v.size());
  }
}

std::vector<double> matvec(const Matrix& m, std::span<const double> x) {
  if (m.cols() != x.size()) {
    raise(ErrorKind::DimensionMismatch, "matvec: shape mismatch");
  }
  std::vector<double> y(m.rows(), 0.0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    y[i] = kernels::dot(m.row(i).data(), x.data(), x.size());
  }
  return y;
}

double max_abs(const Matrix& m) { return kernels::max_abs(m.data(), m.rows() * m.cols()); }

double frobenius(const Matrix& m) {
  return std::sqrt(kernels::sum_sq(m.data(), m.rows() * m.cols()));
}

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonSymmetric: return "NonSymmetric";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::UnsupportedNorm: return "UnsupportedNorm";
    case ErrorKind::ZeroFamily: return "ZeroFamily";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotAFrame: return "NotAFrame";
    case ErrorKind::BadDual: return "BadDual";
    case ErrorKind::NotRiesz: return "NotRiesz";
    case ErrorKind::NotABasis: return "NotABasis";
    case ErrorKind::InsufficientComplement: return "InsufficientComplement";
    case ErrorKind::DepthTooLarge: return "DepthTooLarge";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownTheorem: return "UnknownTheorem";
    case ErrorKind::UnknownGallery: return "UnknownGallery";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

}  // namespace framecert
