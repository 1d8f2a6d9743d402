#pragma once

#include <functional>
#include <span>
#include <vector>

#include "nsopt/errors.hpp"

namespace nsopt {

/// Scalar function of the parameter vector, as seen by gradient estimation
/// and line searches.
using ScalarFn = std::function<double(std::span<const double>)>;

enum class GradientScheme {
  /// (f(x + h e_i) - f(x - h e_i)) / 2h -- 2n evaluations, O(h^2) error.
  central,
  /// (f(x + h e_i) - f(x)) / h -- n+1 evaluations, O(h) error.
  forward,
};

/// Central-difference gradient estimate with perturbation h. Makes exactly 2n
/// evaluator calls and leaves x untouched. Throws GradientError if any probe
/// returns a non-finite value.
std::vector<double> numerical_gradient(const ScalarFn& f,
                                       std::span<const double> x, double h);

/// Scheme-selectable variant. Forward differences trade accuracy for n+1
/// evaluations instead of 2n.
std::vector<double> numerical_gradient(const ScalarFn& f,
                                       std::span<const double> x, double h,
                                       GradientScheme scheme);

}  // namespace nsopt
