#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace nsopt {

/// A finite-difference probe produced a non-finite value. `component` is the
/// coordinate being perturbed when it happened.
class GradientError : public std::runtime_error {
 public:
  GradientError(std::size_t component, double value)
      : std::runtime_error("numerical gradient: non-finite value " +
                           std::to_string(value) +
                           " while perturbing component " +
                           std::to_string(component)),
        component_(component),
        value_(value) {}

  std::size_t component() const noexcept { return component_; }
  double value() const noexcept { return value_; }

 private:
  std::size_t component_;
  double value_;
};

/// A user evaluator returned a non-finite value during a solve. Carries which
/// evaluator failed, the 0-based constraint index where applicable, and the
/// perturbed component when the failure happened inside gradient estimation.
class EvaluationError : public std::runtime_error {
 public:
  enum class Fn { cost, equality, inequality };

  EvaluationError(Fn fn, std::optional<std::size_t> constraint_index,
                  std::optional<std::size_t> component, double value)
      : std::runtime_error(describe(fn, constraint_index, component, value)),
        fn_(fn),
        constraint_index_(constraint_index),
        component_(component),
        value_(value) {}

  Fn fn() const noexcept { return fn_; }
  std::optional<std::size_t> constraint_index() const noexcept {
    return constraint_index_;
  }
  std::optional<std::size_t> component() const noexcept { return component_; }
  double value() const noexcept { return value_; }

 private:
  static std::string describe(Fn fn, std::optional<std::size_t> k,
                              std::optional<std::size_t> component,
                              double value) {
    std::string out = "evaluator returned non-finite value ";
    out += std::to_string(value);
    switch (fn) {
      case Fn::cost:
        out += " (cost";
        break;
      case Fn::equality:
        out += " (equality constraint";
        break;
      case Fn::inequality:
        out += " (inequality constraint";
        break;
    }
    if (k) out += " " + std::to_string(*k);
    if (component) {
      out += ", while perturbing component " + std::to_string(*component);
    }
    out += ")";
    return out;
  }

  Fn fn_;
  std::optional<std::size_t> constraint_index_;
  std::optional<std::size_t> component_;
  double value_;
};

}  // namespace nsopt
