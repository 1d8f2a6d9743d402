#pragma once

#include <array>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nsopt/problem.hpp"

namespace nsopt {

/// A built-in test problem together with its published starting point and
/// reference optimum.
struct BenchmarkProblem {
  std::string id;
  ProblemDescription description;
  std::vector<double> x0;
  std::vector<double> x_ref;
  /// Acceptance tolerance on the infinity-norm distance to x_ref.
  double tol_ref = 0.0;
  /// Parameters are joint angles; compare against x_ref modulo 2*pi.
  bool angular = false;
};

class UnknownProblemError : public std::runtime_error {
 public:
  explicit UnknownProblemError(std::string_view id)
      : std::runtime_error("unknown problem id: " + std::string(id)) {}
};

/// Five-parameter quadratic bowl with two equality and two inequality
/// constraints pinning four of the coordinates away from their unconstrained
/// optimum.
BenchmarkProblem simple_convex();

/// Rosenbrock's banana function restricted to the unit disk; the constrained
/// minimum sits on the disk boundary.
BenchmarkProblem rosenbrock_disk();

/// Problem 71 of the Hock-Schittkowski collection: quartic objective, one
/// sphere equality, a product inequality, and 1 <= x_i <= 5 bounds expanded
/// into eight scalar inequalities.
BenchmarkProblem hs071();

/// Three-link planar arm: place the end effector at (-1, 0) with the
/// configuration that needs the least static holding torque.
BenchmarkProblem three_link_arm();

/// Registry order matches the documentation and `run-all`.
const std::vector<std::string>& benchmark_ids();

/// Builds the benchmark with the given id; throws UnknownProblemError.
BenchmarkProblem make_benchmark(std::string_view id);

/// End-effector position of the three-link arm (unit link lengths).
std::array<double, 2> planar_arm_end_effector(std::span<const double> joints);

/// Static holding torque of the three-link arm under gravity.
std::array<double, 3> planar_arm_gravity_torque(std::span<const double> joints);

/// Infinity-norm distance from x to the problem's reference optimum,
/// per-component modulo 2*pi for angular problems.
double reference_distance_inf(const BenchmarkProblem& problem,
                              std::span<const double> x);

}  // namespace nsopt
