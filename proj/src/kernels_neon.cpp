// NEON kernel variants for aarch64. ASIMD is part of the base ISA there, so
// no extra compile flags or runtime feature probing are needed.

#include <arm_neon.h>

#include <cstddef>

#include "kernels_detail.hpp"

namespace nsopt::kernels::detail {
namespace {

double dot_neon(const double* a, const double* b, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    acc = vfmaq_f64(acc, vld1q_f64(a + i), vld1q_f64(b + i));
  }
  double result = vaddvq_f64(acc);
  for (; i < n; ++i) result += a[i] * b[i];
  return result;
}

double sum_squares_neon(const double* a, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t v = vld1q_f64(a + i);
    acc = vfmaq_f64(acc, v, v);
  }
  double result = vaddvq_f64(acc);
  for (; i < n; ++i) result += a[i] * a[i];
  return result;
}

void axpy_neon(double alpha, const double* x, double* y, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(alpha);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(y + i, vfmaq_f64(vld1q_f64(y + i), va, vld1q_f64(x + i)));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void scaled_sub_neon(const double* x, double s, const double* d, double* out,
                     std::size_t n) {
  const float64x2_t vs = vdupq_n_f64(s);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(out + i, vfmsq_f64(vld1q_f64(x + i), vs, vld1q_f64(d + i)));
  }
  for (; i < n; ++i) out[i] = x[i] - s * d[i];
}

void scale_neon(double* x, double alpha, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(alpha);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(x + i, vmulq_f64(vld1q_f64(x + i), va));
  }
  for (; i < n; ++i) x[i] *= alpha;
}

}  // namespace

const KernelTable kNeonTable = {dot_neon, sum_squares_neon, axpy_neon,
                                scaled_sub_neon, scale_neon};

}  // namespace nsopt::kernels::detail
