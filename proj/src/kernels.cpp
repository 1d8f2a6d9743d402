#include "nsopt/kernels.hpp"

#include <atomic>
#include <cassert>
#include <cmath>
#include <stdexcept>

#include "kernels_detail.hpp"

namespace nsopt::kernels {
namespace {

// ----------------------------------------------------------------- scalar
// Reference semantics for every kernel: plain sequential loops. SIMD variants
// are tested for agreement against these.

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

double sum_squares_scalar(const double* a, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * a[i];
  return acc;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scaled_sub_scalar(const double* x, double s, const double* d, double* out,
                       std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = x[i] - s * d[i];
}

void scale_scalar(double* x, double alpha, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= alpha;
}

const KernelTable* table_for(Backend backend) noexcept {
  switch (backend) {
    case Backend::scalar:
      return &detail::kScalarTable;
    case Backend::avx2:
#if defined(NSOPT_HAVE_AVX2_KERNELS)
      return &detail::kAvx2Table;
#else
      return nullptr;
#endif
    case Backend::neon:
#if defined(NSOPT_HAVE_NEON_KERNELS)
      return &detail::kNeonTable;
#else
      return nullptr;
#endif
  }
  return nullptr;
}

bool cpu_supports(Backend backend) noexcept {
  switch (backend) {
    case Backend::scalar:
      return true;
    case Backend::avx2:
#if defined(NSOPT_HAVE_AVX2_KERNELS) && defined(__GNUC__)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Backend::neon:
#if defined(NSOPT_HAVE_NEON_KERNELS)
      return true;  // ASIMD is mandatory on aarch64
#else
      return false;
#endif
  }
  return false;
}

Backend detect_best() noexcept {
  if (cpu_supports(Backend::avx2)) return Backend::avx2;
  if (cpu_supports(Backend::neon)) return Backend::neon;
  return Backend::scalar;
}

struct Dispatch {
  std::atomic<Backend> backend;
  std::atomic<const KernelTable*> table;
  Dispatch() {
    const Backend best = detect_best();
    backend.store(best, std::memory_order_relaxed);
    table.store(table_for(best), std::memory_order_relaxed);
  }
};

Dispatch& dispatch() {
  static Dispatch d;
  return d;
}

const KernelTable& active_table() noexcept {
  return *dispatch().table.load(std::memory_order_relaxed);
}

}  // namespace

namespace detail {
const KernelTable kScalarTable = {dot_scalar, sum_squares_scalar, axpy_scalar,
                                  scaled_sub_scalar, scale_scalar};
}  // namespace detail

Backend active_backend() noexcept {
  return dispatch().backend.load(std::memory_order_relaxed);
}

bool backend_available(Backend backend) noexcept {
  return table_for(backend) != nullptr && cpu_supports(backend);
}

void force_backend(Backend backend) {
  if (!backend_available(backend)) {
    throw std::invalid_argument("kernel backend unavailable: " +
                                std::string(backend_name(backend)));
  }
  dispatch().backend.store(backend, std::memory_order_relaxed);
  dispatch().table.store(table_for(backend), std::memory_order_relaxed);
}

void reset_backend() noexcept {
  const Backend best = detect_best();
  dispatch().backend.store(best, std::memory_order_relaxed);
  dispatch().table.store(table_for(best), std::memory_order_relaxed);
}

std::string_view backend_name(Backend backend) noexcept {
  switch (backend) {
    case Backend::scalar:
      return "scalar";
    case Backend::avx2:
      return "avx2";
    case Backend::neon:
      return "neon";
  }
  return "unknown";
}

double dot(std::span<const double> a, std::span<const double> b) noexcept {
  assert(a.size() == b.size());
  return active_table().dot(a.data(), b.data(), a.size());
}

double sum_squares(std::span<const double> a) noexcept {
  return active_table().sum_squares(a.data(), a.size());
}

double norm(std::span<const double> a) noexcept {
  return std::sqrt(sum_squares(a));
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) noexcept {
  assert(x.size() == y.size());
  active_table().axpy(alpha, x.data(), y.data(), x.size());
}

void scaled_sub(std::span<const double> x, double s, std::span<const double> d,
                std::span<double> out) noexcept {
  assert(x.size() == d.size() && x.size() == out.size());
  active_table().scaled_sub(x.data(), s, d.data(), out.data(), x.size());
}

void scale(std::span<double> x, double alpha) noexcept {
  active_table().scale(x.data(), alpha, x.size());
}

}  // namespace nsopt::kernels
