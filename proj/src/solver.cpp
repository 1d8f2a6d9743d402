#include "nsopt/solver.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "nsopt/kernels.hpp"

namespace nsopt {
namespace {

double step_norm(std::span<const double> a, std::span<const double> b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    acc += d * d;
  }
  return std::sqrt(acc);
}

double checked_cost_value(const ScalarFn& fn, std::span<const double> x) {
  const double value = fn(x);
  if (!std::isfinite(value)) {
    throw EvaluationError(EvaluationError::Fn::cost, std::nullopt, std::nullopt,
                          value);
  }
  return value;
}

}  // namespace

std::string_view to_string(ExitReason reason) noexcept {
  switch (reason) {
    case ExitReason::step_tolerance:
      return "step_tolerance";
    case ExitReason::cost_tolerance:
      return "cost_tolerance";
    case ExitReason::max_iterations:
      return "max_iterations";
  }
  return "unknown";
}

OptimizationReport optimize(const ProblemDescription& problem,
                            std::span<const double> x0,
                            const SolverConfig& config,
                            std::vector<IterationRecord>* trace) {
  const ValidationResult valid = validate(problem, config);
  if (!valid.ok()) {
    throw std::invalid_argument("invalid problem/config: " + valid.message());
  }
  if (x0.size() != problem.dimension) {
    throw std::invalid_argument("x0 has length " + std::to_string(x0.size()) +
                                ", problem dimension is " +
                                std::to_string(problem.dimension));
  }
  for (const double v : x0) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("x0 must have finite entries");
    }
  }

  OptimizationReport report;
  EvaluationCounts& counts = report.evaluation_counts;

  // Counting shims around the user's evaluators; all passes see these.
  ProblemDescription counted = problem;
  counted.cost = [fn = problem.cost, &counts](std::span<const double> x) {
    ++counts.cost;
    return fn(x);
  };
  if (problem.equality) {
    counted.equality = [fn = problem.equality, &counts](
                           std::span<const double> x, std::size_t k) {
      ++counts.equality;
      return fn(x, k);
    };
  }
  if (problem.inequality) {
    counted.inequality = [fn = problem.inequality, &counts](
                             std::span<const double> x, std::size_t k) {
      ++counts.inequality;
      return fn(x, k);
    };
  }

  auto eq_residuals = [&counted](std::span<const double> x) {
    std::vector<double> r(counted.num_equality);
    for (std::size_t k = 0; k < counted.num_equality; ++k) {
      r[k] = counted.equality(x, k);
    }
    return r;
  };
  auto ineq_values = [&counted](std::span<const double> x) {
    std::vector<double> r(counted.num_inequality);
    for (std::size_t k = 0; k < counted.num_inequality; ++k) {
      r[k] = counted.inequality(x, k);
    }
    return r;
  };

  SolverState state(std::vector<double>(x0.begin(), x0.end()),
                    problem.dimension);
  ExitReason reason = ExitReason::max_iterations;
  std::size_t iterations = 0;
  double cost_after = 0.0;
  bool have_previous_cost = false;
  double previous_cost = 0.0;
  std::vector<double> x_prev(problem.dimension);

  const auto t_start = std::chrono::steady_clock::now();
  try {
    for (std::size_t iter = 1; iter <= config.max_iter; ++iter) {
      iterations = iter;
      x_prev = state.x;

      if (counted.interim) counted.interim(state.x);
      solve_equalities(state, counted, config);
      solve_inequalities(state, counted, config);
      const double cost_before = checked_cost_value(counted.cost, state.x);
      cost_after = minimize_cost(state, counted, config);

      const double step = step_norm(state.x, x_prev);
      report.cost_trace.push_back(cost_after);
      if (trace) {
        IterationRecord rec;
        rec.iter = iter;
        rec.cost = cost_after;
        rec.step_norm = step;
        for (const double r : eq_residuals(state.x)) {
          rec.max_eq_residual = std::max(rec.max_eq_residual, std::abs(r));
        }
        bool first = true;
        for (const double v : ineq_values(state.x)) {
          rec.max_ineq_value = first ? v : std::max(rec.max_ineq_value, v);
          first = false;
        }
        trace->push_back(rec);
      }

      if (step < config.step_tol) {
        reason = ExitReason::step_tolerance;
        break;
      }
      // The cost change is measured per outer iteration, like the step
      // change: against the previous iteration's post-pass cost once one
      // exists, so progress made by the constraint passes counts too. The
      // first iteration falls back to the pre-cost-pass value.
      const double baseline = have_previous_cost ? previous_cost : cost_before;
      previous_cost = cost_after;
      have_previous_cost = true;
      if (std::abs(cost_after - baseline) < config.cost_tol) {
        reason = ExitReason::cost_tolerance;
        break;
      }
    }
  } catch (const EvaluationError& e) {
    throw OptimizationError(e, iterations, std::move(state.x),
                            std::move(report.cost_trace));
  }
  const auto t_end = std::chrono::steady_clock::now();

  report.x_star = std::move(state.x);
  report.cost_final = cost_after;
  report.equality_residuals = eq_residuals(report.x_star);
  report.inequality_values = ineq_values(report.x_star);
  report.outer_iterations = iterations;
  report.exit_reason = reason;
  report.wall_time = t_end - t_start;
  return report;
}

}  // namespace nsopt
