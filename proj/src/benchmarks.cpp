#include "nsopt/benchmarks.hpp"

#include <cmath>
#include <numbers>

namespace nsopt {
namespace {

constexpr double kGravity = 9.81;

}  // namespace

BenchmarkProblem simple_convex() {
  BenchmarkProblem p;
  p.id = "simple_convex";
  p.description.dimension = 5;
  p.description.num_equality = 2;
  p.description.num_inequality = 2;
  p.description.cost = [](std::span<const double> x) {
    double acc = 0.0;
    for (std::size_t k = 0; k < 5; ++k) {
      const double d = x[k] - static_cast<double>(k + 1);
      acc += d * d;
    }
    return acc;
  };
  p.description.equality = [](std::span<const double> x, std::size_t k) {
    return k == 0 ? x[0] + 5.0 : x[1] - 5.0;
  };
  p.description.inequality = [](std::span<const double> x, std::size_t k) {
    return k == 0 ? x[2] + 3.0 : x[3] - 3.0;
  };
  p.x0.assign(5, 0.0);
  p.x_ref = {-5.0, 5.0, -3.0, 3.0, 5.0};
  p.tol_ref = 1e-2;
  return p;
}

BenchmarkProblem rosenbrock_disk() {
  BenchmarkProblem p;
  p.id = "rosenbrock_disk";
  p.description.dimension = 2;
  p.description.num_equality = 0;
  p.description.num_inequality = 1;
  p.description.cost = [](std::span<const double> x) {
    const double a = x[1] - x[0] * x[0];
    const double b = 1.0 - x[0];
    return 100.0 * a * a + b * b;
  };
  p.description.inequality = [](std::span<const double> x, std::size_t) {
    return x[0] * x[0] + x[1] * x[1] - 1.0;
  };
  p.x0 = {0.0, 0.0};
  p.x_ref = {0.7864, 0.6177};
  p.tol_ref = 2e-2;
  return p;
}

BenchmarkProblem hs071() {
  BenchmarkProblem p;
  p.id = "hs071";
  p.description.dimension = 4;
  p.description.num_equality = 1;
  p.description.num_inequality = 9;
  p.description.cost = [](std::span<const double> x) {
    return x[0] * x[3] * (x[0] + x[1] + x[2]) + x[2];
  };
  p.description.equality = [](std::span<const double> x, std::size_t) {
    return x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3] - 40.0;
  };
  // Index 0 is the product constraint x1*x2*x3*x4 >= 25 in canonical g < 0
  // form; 1..8 are the bounds 1 <= x_i <= 5 as (1 - x_i) and (x_i - 5).
  p.description.inequality = [](std::span<const double> x, std::size_t k) {
    if (k == 0) return 25.0 - x[0] * x[1] * x[2] * x[3];
    const std::size_t i = (k - 1) / 2;
    return (k - 1) % 2 == 0 ? 1.0 - x[i] : x[i] - 5.0;
  };
  p.x0 = {1.0, 5.0, 5.0, 1.0};
  p.x_ref = {1.00, 4.74, 3.82, 1.38};
  p.tol_ref = 5e-2;
  return p;
}

std::array<double, 2> planar_arm_end_effector(std::span<const double> joints) {
  const double a1 = joints[0];
  const double a2 = joints[0] + joints[1];
  const double a3 = joints[0] + joints[1] + joints[2];
  return {std::cos(a1) + std::cos(a2) + std::cos(a3),
          std::sin(a1) + std::sin(a2) + std::sin(a3)};
}

std::array<double, 3> planar_arm_gravity_torque(std::span<const double> joints) {
  const double c1 = std::cos(joints[0]);
  const double c12 = std::cos(joints[0] + joints[1]);
  const double c123 = std::cos(joints[0] + joints[1] + joints[2]);
  return {kGravity * (2.5 * c1 + 1.5 * c12 + 0.5 * c123),
          kGravity * (1.5 * c12 + 0.5 * c123), kGravity * (0.5 * c123)};
}

BenchmarkProblem three_link_arm() {
  BenchmarkProblem p;
  p.id = "three_link_arm";
  p.description.dimension = 3;
  p.description.num_equality = 2;
  p.description.num_inequality = 0;
  p.description.cost = [](std::span<const double> x) {
    const auto tau = planar_arm_gravity_torque(x);
    return tau[0] * tau[0] + tau[1] * tau[1] + tau[2] * tau[2];
  };
  p.description.equality = [](std::span<const double> x, std::size_t k) {
    const auto pos = planar_arm_end_effector(x);
    return k == 0 ? pos[0] + 1.0 : pos[1];
  };
  const double q = std::numbers::pi / 4.0;
  p.x0 = {q, q, q};
  p.x_ref = {1.647, 3.141, -1.647};
  p.tol_ref = 5e-2;
  p.angular = true;
  return p;
}

const std::vector<std::string>& benchmark_ids() {
  static const std::vector<std::string> ids = {
      "simple_convex", "rosenbrock_disk", "hs071", "three_link_arm"};
  return ids;
}

BenchmarkProblem make_benchmark(std::string_view id) {
  if (id == "simple_convex") return simple_convex();
  if (id == "rosenbrock_disk") return rosenbrock_disk();
  if (id == "hs071") return hs071();
  if (id == "three_link_arm") return three_link_arm();
  throw UnknownProblemError(id);
}

double reference_distance_inf(const BenchmarkProblem& problem,
                              std::span<const double> x) {
  double dist = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double d = std::abs(x[i] - problem.x_ref[i]);
    if (problem.angular) {
      constexpr double two_pi = 2.0 * std::numbers::pi;
      d = std::fmod(d, two_pi);
      if (d > std::numbers::pi) d = two_pi - d;
    }
    dist = std::max(dist, d);
  }
  return dist;
}

}  // namespace nsopt
