#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "nsopt/errors.hpp"
#include "nsopt/problem.hpp"
#include "nsopt/subroutines.hpp"

namespace nsopt {

enum class ExitReason {
  step_tolerance,   ///< parameter change per outer iteration fell below step_tol
  cost_tolerance,   ///< cost change across the cost pass fell below cost_tol
  max_iterations,   ///< iteration cap reached without meeting a tolerance
};

std::string_view to_string(ExitReason reason) noexcept;

struct EvaluationCounts {
  std::uint64_t cost = 0;
  std::uint64_t equality = 0;
  std::uint64_t inequality = 0;
};

/// Per-outer-iteration snapshot, collected on request (the residual columns
/// cost one extra sweep of constraint evaluations per iteration).
struct IterationRecord {
  std::size_t iter = 0;          ///< 1-based outer iteration index
  double cost = 0.0;             ///< cost after the cost pass
  double step_norm = 0.0;        ///< ||x - x_prev|| for this iteration
  double max_eq_residual = 0.0;  ///< max_k |g_eq_k(x)|, 0 when none
  double max_ineq_value = 0.0;   ///< max_k g_ineq_k(x), 0 when none
};

struct OptimizationReport {
  std::vector<double> x_star;
  double cost_final = 0.0;
  std::vector<double> equality_residuals;   ///< g_eq_k(x_star)
  std::vector<double> inequality_values;    ///< g_ineq_k(x_star)
  std::size_t outer_iterations = 0;
  ExitReason exit_reason = ExitReason::max_iterations;
  std::vector<double> cost_trace;           ///< one entry per outer iteration
  EvaluationCounts evaluation_counts;
  std::chrono::duration<double, std::micro> wall_time{0.0};
};

/// An evaluator failed mid-run. Carries the failing call's context, the outer
/// iteration (1-based) it happened in, and the iterate plus cost trace
/// accumulated so far.
class OptimizationError : public std::runtime_error {
 public:
  OptimizationError(EvaluationError cause, std::size_t outer_iteration,
                    std::vector<double> x, std::vector<double> cost_trace)
      : std::runtime_error(std::string(cause.what()) + " (outer iteration " +
                           std::to_string(outer_iteration) + ")"),
        cause_(std::move(cause)),
        outer_iteration_(outer_iteration),
        x_(std::move(x)),
        cost_trace_(std::move(cost_trace)) {}

  const EvaluationError& cause() const noexcept { return cause_; }
  std::size_t outer_iteration() const noexcept { return outer_iteration_; }
  const std::vector<double>& x() const noexcept { return x_; }
  const std::vector<double>& cost_trace() const noexcept { return cost_trace_; }

 private:
  EvaluationError cause_;
  std::size_t outer_iteration_;
  std::vector<double> x_;
  std::vector<double> cost_trace_;
};

/// Runs the full optimization: up to config.max_iter outer iterations, each
/// consisting of the interim update, the equality pass, the inequality pass,
/// and the cost pass, exiting once the parameter change or the cost change of
/// an iteration falls below its tolerance.
///
/// Throws std::invalid_argument when validate(problem, config) fails or x0 is
/// malformed, and OptimizationError when an evaluator fails mid-run. Two runs
/// with identical inputs produce bit-identical results. When `trace` is given
/// it receives one IterationRecord per outer iteration.
OptimizationReport optimize(const ProblemDescription& problem,
                            std::span<const double> x0,
                            const SolverConfig& config,
                            std::vector<IterationRecord>* trace = nullptr);

}  // namespace nsopt
