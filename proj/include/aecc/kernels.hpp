#pragma once

#include <cstddef>
#include <string_view>

// Vectorized inner-loop kernels with a scalar reference implementation.
// A backend is selected once at startup: the ANALOG_ECC_SIMD environment
// variable (scalar|avx2|neon|auto) wins, otherwise the widest unit the
// running CPU supports. axpy/scale perform the same IEEE operation per
// element in every backend and match the scalar kernel bit for bit; dot
// uses lane accumulators, so backends agree only up to rounding.

namespace aecc::kernels {

enum class Backend { Scalar, Avx2, Neon };

Backend active_backend();
bool backend_supported(Backend b);
void set_backend(Backend b); // throws DomainError if unsupported on this host
std::string_view backend_name(Backend b);
Backend backend_from_name(std::string_view name); // throws DomainError

// sum_i x[i] * y[i]
double dot(const double* x, const double* y, std::size_t n);
// y[i] += a * x[i]
void axpy(double a, const double* x, double* y, std::size_t n);
// x[i] *= a
void scale(double a, double* x, std::size_t n);

namespace detail {

double dot_scalar(const double* x, const double* y, std::size_t n);
void axpy_scalar(double a, const double* x, double* y, std::size_t n);
void scale_scalar(double a, double* x, std::size_t n);

#ifdef AECC_KERNELS_AVX2
double dot_avx2(const double* x, const double* y, std::size_t n);
void axpy_avx2(double a, const double* x, double* y, std::size_t n);
void scale_avx2(double a, double* x, std::size_t n);
#endif

#ifdef AECC_KERNELS_NEON
double dot_neon(const double* x, const double* y, std::size_t n);
void axpy_neon(double a, const double* x, double* y, std::size_t n);
void scale_neon(double a, double* x, std::size_t n);
#endif

} // namespace detail

} // namespace aecc::kernels
