#pragma once

#include <cstddef>

// Dense inner-loop kernels. A scalar reference implementation is always
// available; an AVX2/FMA variant is compiled into its own translation unit
// and selected at runtime when the CPU supports it. The two backends are
// equivalence-tested against each other in tests/test_kernels.cpp.

namespace framecert::kernels {

enum class Backend { scalar, avx2 };

const char* backend_name(Backend b);

// Backend in effect for subsequent kernel calls.
Backend active_backend();

// True when the running CPU supports AVX2+FMA and the AVX2 TU was built.
bool avx2_available();

// Testing hook. Requesting avx2 on a machine without support keeps scalar.
void force_backend(Backend b);
void reset_backend();

double dot(const double* x, const double* y, std::size_t n);

// y += a * x
void axpy(double a, const double* x, double* y, std::size_t n);

// In-place plane rotation: x' = c*x - s*y, y' = s*x + c*y.
void plane_rot(double* x, double* y, std::size_t n, double c, double s);

double sum_abs(const double* x, std::size_t n);
double sum_sq(const double* x, std::size_t n);
double max_abs(const double* x, std::size_t n);

namespace detail {

struct Ops {
  double (*dot)(const double*, const double*, std::size_t);
  void (*axpy)(double, const double*, double*, std::size_t);
  void (*plane_rot)(double*, double*, std::size_t, double, double);
  double (*sum_abs)(const double*, std::size_t);
  double (*sum_sq)(const double*, std::size_t);
  double (*max_abs)(const double*, std::size_t);
};

extern const Ops scalar_ops;
extern const Ops avx2_ops;  // mirrors scalar_ops when the AVX2 TU is not built
bool avx2_compiled();

}  // namespace detail

}  // namespace framecert::kernels
