#include "nsopt/gradient.hpp"

#include <cmath>

namespace nsopt {
namespace {

double probe(const ScalarFn& f, std::span<const double> x, std::size_t i) {
  const double value = f(x);
  if (!std::isfinite(value)) throw GradientError(i, value);
  return value;
}

}  // namespace

std::vector<double> numerical_gradient(const ScalarFn& f,
                                       std::span<const double> x, double h) {
  return numerical_gradient(f, x, h, GradientScheme::central);
}

std::vector<double> numerical_gradient(const ScalarFn& f,
                                       std::span<const double> x, double h,
                                       GradientScheme scheme) {
  const std::size_t n = x.size();
  std::vector<double> scratch(x.begin(), x.end());
  std::vector<double> grad(n);

  if (scheme == GradientScheme::forward) {
    const double base = probe(f, scratch, 0);
    for (std::size_t i = 0; i < n; ++i) {
      scratch[i] = x[i] + h;
      const double forward = probe(f, scratch, i);
      scratch[i] = x[i];
      grad[i] = (forward - base) / h;
    }
    return grad;
  }

  for (std::size_t i = 0; i < n; ++i) {
    scratch[i] = x[i] + h;
    const double forward = probe(f, scratch, i);
    scratch[i] = x[i] - h;
    const double backward = probe(f, scratch, i);
    scratch[i] = x[i];
    grad[i] = (forward - backward) / (2.0 * h);
  }
  return grad;
}

}  // namespace nsopt
