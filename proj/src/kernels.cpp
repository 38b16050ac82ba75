#include "aecc/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

#include "aecc/errors.hpp"

namespace aecc::kernels {

namespace detail {

double dot_scalar(const double* x, const double* y, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
    return acc;
}

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void scale_scalar(double a, double* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

} // namespace detail

namespace {

struct Ops {
    Backend id;
    double (*dot)(const double*, const double*, std::size_t);
    void (*axpy)(double, const double*, double*, std::size_t);
    void (*scale)(double, double*, std::size_t);
};

constexpr Ops kScalarOps{Backend::Scalar, detail::dot_scalar, detail::axpy_scalar,
                         detail::scale_scalar};
#ifdef AECC_KERNELS_AVX2
constexpr Ops kAvx2Ops{Backend::Avx2, detail::dot_avx2, detail::axpy_avx2, detail::scale_avx2};
#endif
#ifdef AECC_KERNELS_NEON
constexpr Ops kNeonOps{Backend::Neon, detail::dot_neon, detail::axpy_neon, detail::scale_neon};
#endif

bool cpu_supports(Backend b) {
    switch (b) {
    case Backend::Scalar:
        return true;
    case Backend::Avx2:
#if defined(AECC_KERNELS_AVX2) && (defined(__x86_64__) || defined(__i386__))
        return __builtin_cpu_supports("avx2") != 0;
#else
        return false;
#endif
    case Backend::Neon:
#ifdef AECC_KERNELS_NEON
        return true; // baseline on aarch64
#else
        return false;
#endif
    }
    return false;
}

const Ops* ops_for(Backend b) {
    switch (b) {
#ifdef AECC_KERNELS_AVX2
    case Backend::Avx2:
        return &kAvx2Ops;
#endif
#ifdef AECC_KERNELS_NEON
    case Backend::Neon:
        return &kNeonOps;
#endif
    default:
        return &kScalarOps;
    }
}

Backend pick_default() {
    if (const char* env = std::getenv("ANALOG_ECC_SIMD")) {
        std::string_view v{env};
        if (!v.empty() && v != "auto") {
            Backend b = backend_from_name(v);
            if (cpu_supports(b)) return b;
            // Requested unit not available here; fall through to autodetect.
        }
    }
    if (cpu_supports(Backend::Avx2)) return Backend::Avx2;
    if (cpu_supports(Backend::Neon)) return Backend::Neon;
    return Backend::Scalar;
}

std::atomic<const Ops*>& active_ops() {
    static std::atomic<const Ops*> ops{ops_for(pick_default())};
    return ops;
}

} // namespace

Backend active_backend() { return active_ops().load(std::memory_order_relaxed)->id; }

bool backend_supported(Backend b) { return cpu_supports(b); }

void set_backend(Backend b) {
    if (!cpu_supports(b))
        throw DomainError("kernel backend not supported on this host: " +
                          std::string(backend_name(b)));
    active_ops().store(ops_for(b), std::memory_order_relaxed);
}

std::string_view backend_name(Backend b) {
    switch (b) {
    case Backend::Scalar:
        return "scalar";
    case Backend::Avx2:
        return "avx2";
    case Backend::Neon:
        return "neon";
    }
    return "?";
}

Backend backend_from_name(std::string_view name) {
    if (name == "scalar") return Backend::Scalar;
    if (name == "avx2") return Backend::Avx2;
    if (name == "neon") return Backend::Neon;
    throw DomainError("unknown kernel backend: " + std::string(name));
}

double dot(const double* x, const double* y, std::size_t n) {
    return active_ops().load(std::memory_order_relaxed)->dot(x, y, n);
}

void axpy(double a, const double* x, double* y, std::size_t n) {
    active_ops().load(std::memory_order_relaxed)->axpy(a, x, y, n);
}

void scale(double a, double* x, std::size_t n) {
    active_ops().load(std::memory_order_relaxed)->scale(a, x, n);
}

} // namespace aecc::kernels
