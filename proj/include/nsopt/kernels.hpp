#pragma once

#include <cstddef>
#include <span>
#include <string_view>

/// Dense double-precision vector kernels used by the solver's inner loops
/// (norms, dot products, probe-point updates).
///
/// Each kernel exists as a scalar reference implementation plus optional
/// SIMD variants (AVX2 on x86-64, NEON on aarch64). The fastest variant
/// supported by the running CPU is selected once at startup; tests can pin a
/// specific backend with force_backend(). SIMD variants may differ from the
/// scalar reference in the last bits (different summation order, fused
/// multiply-add); within one backend results are deterministic.
namespace nsopt::kernels {

enum class Backend { scalar, avx2, neon };

struct KernelTable {
  double (*dot)(const double*, const double*, std::size_t);
  double (*sum_squares)(const double*, std::size_t);
  // y += alpha * x
  void (*axpy)(double, const double*, double*, std::size_t);
  // out = x - s * d
  void (*scaled_sub)(const double*, double, const double*, double*, std::size_t);
  // x *= alpha
  void (*scale)(double*, double, std::size_t);
};

/// Backend currently used by the free-function kernels below.
Backend active_backend() noexcept;

/// True if the given backend is compiled in and supported by this CPU.
bool backend_available(Backend backend) noexcept;

/// Pin the active backend. Throws std::invalid_argument if unavailable.
/// Not safe to call concurrently with kernel invocations.
void force_backend(Backend backend);

/// Restore the automatically detected backend.
void reset_backend() noexcept;

std::string_view backend_name(Backend backend) noexcept;

double dot(std::span<const double> a, std::span<const double> b) noexcept;
double sum_squares(std::span<const double> a) noexcept;
double norm(std::span<const double> a) noexcept;
void axpy(double alpha, std::span<const double> x, std::span<double> y) noexcept;
void scaled_sub(std::span<const double> x, double s, std::span<const double> d,
                std::span<double> out) noexcept;
void scale(std::span<double> x, double alpha) noexcept;

}  // namespace nsopt::kernels
