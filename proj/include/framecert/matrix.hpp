#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace framecert {

// Dense row-major matrix of finite doubles. Zero-column matrices are legal:
// they arise as the orthonormal span of an all-zero vector family.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }

  const double* data() const { return data_.data(); }
  double* data() { return data_.data(); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix multiply(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);
Matrix add(const Matrix& a, const Matrix& b);
Matrix subtract(const Matrix& a, const Matrix& b);

// s += scale * u * v^T; s must be u.size() x v.size().
void add_outer(Matrix& s, std::span<const double> u, std::span<const double> v,
               double scale = 1.0);

std::vector<double> matvec(const Matrix& m, std::span<const double> x);

double max_abs(const Matrix& m);
double frobenius(const Matrix& m);

}  // namespace framecert
