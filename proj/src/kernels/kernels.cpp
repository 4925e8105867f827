#include "framecert/kernels.hpp"

#include <atomic>
#include <cmath>

namespace framecert::kernels {

namespace {

double scalar_dot(const double* x, const double* y, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

void scalar_axpy(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void scalar_plane_rot(double* x, double* y, std::size_t n, double c, double s) {
  for (std::size_t i = 0; i < n; ++i) {
    const double xi = x[i];
    const double yi = y[i];
    x[i] = c * xi - s * yi;
    y[i] = s * xi + c * yi;
  }
}

double scalar_sum_abs(const double* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += std::fabs(x[i]);
  return acc;
}

double scalar_sum_sq(const double* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * x[i];
  return acc;
}

double scalar_max_abs(const double* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = std::fabs(x[i]);
    if (a > acc) acc = a;
  }
  return acc;
}

}  // namespace

namespace detail {

const Ops scalar_ops = {scalar_dot,     scalar_axpy,   scalar_plane_rot,
                        scalar_sum_abs, scalar_sum_sq, scalar_max_abs};

}  // namespace detail

namespace {

bool cpu_has_avx2_fma() {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const detail::Ops* default_ops() {
  if (detail::avx2_compiled() && cpu_has_avx2_fma()) return &detail::avx2_ops;
  return &detail::scalar_ops;
}

std::atomic<const detail::Ops*> g_ops{nullptr};

const detail::Ops& ops() {
  const detail::Ops* p = g_ops.load(std::memory_order_acquire);
  if (p == nullptr) {
    p = default_ops();
    g_ops.store(p, std::memory_order_release);
  }
  return *p;
}

}  // namespace

const char* backend_name(Backend b) {
  return b == Backend::avx2 ? "avx2" : "scalar";
}

Backend active_backend() {
  return &ops() == &detail::avx2_ops ? Backend::avx2 : Backend::scalar;
}

bool avx2_available() { return detail::avx2_compiled() && cpu_has_avx2_fma(); }

void force_backend(Backend b) {
  if (b == Backend::avx2 && avx2_available()) {
    g_ops.store(&detail::avx2_ops, std::memory_order_release);
  } else {
    g_ops.store(&detail::scalar_ops, std::memory_order_release);
  }
}

void reset_backend() { g_ops.store(default_ops(), std::memory_order_release); }

double dot(const double* x, const double* y, std::size_t n) { return ops().dot(x, y, n); }

void axpy(double a, const double* x, double* y, std::size_t n) { ops().axpy(a, x, y, n); }

void plane_rot(double* x, double* y, std::size_t n, double c, double s) {
  ops().plane_rot(x, y, n, c, s);
}

double sum_abs(const double* x, std::size_t n) { return ops().sum_abs(x, n); }

double sum_sq(const double* x, std::size_t n) { return ops().sum_sq(x, n); }

double max_abs(const double* x, std::size_t n) { return ops().max_abs(x, n); }

}  // namespace framecert::kernels
