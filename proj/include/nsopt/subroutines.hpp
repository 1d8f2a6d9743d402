#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "nsopt/gradient.hpp"
#include "nsopt/linalg.hpp"
#include "nsopt/problem.hpp"

namespace nsopt {

/// Mutable state threaded through the three passes of one outer iteration.
struct SolverState {
  std::vector<double> x;
  ActiveJacobianSet jacobians;

  SolverState(std::vector<double> x0, std::size_t dimension)
      : x(std::move(x0)), jacobians(dimension) {}
};

enum class LineSearchExit {
  minimal_point_reached,   ///< next probe would increase the objective
  zero_crossing_reached,   ///< inequality probe crossed into the feasible side
  inequality_violation,    ///< cost probe rejected for violating an inequality
  no_progress,             ///< no probe passed the acceptance test
};

/// Result of one geometric line search. x_final is the last accepted point;
/// rejected probes are never kept.
struct LineSearchOutcome {
  std::vector<double> x_final;
  double final_cost = 0.0;   ///< objective value at x_final
  std::size_t evaluations = 0;
  LineSearchExit exit = LineSearchExit::no_progress;
};

/// Geometric line search for one equality constraint: probes
/// x* = x - s * direction with s growing by config.step_multiplier, accepts
/// while |g(x*)| does not exceed the best accepted |g|, and reverses the
/// direction when g changes sign (the grown step length is kept).
LineSearchOutcome equality_line_search(const ScalarFn& g,
                                       std::span<const double> x,
                                       std::span<const double> direction,
                                       double cost_at_x,
                                       const SolverConfig& config);

/// Geometric line search for one active inequality constraint: every probe is
/// accepted and the search stops once an accepted probe satisfies g(x*) < 0,
/// leaving the iterate just inside the feasible region.
LineSearchOutcome inequality_line_search(const ScalarFn& g,
                                         std::span<const double> x,
                                         std::span<const double> direction,
                                         const SolverConfig& config);

/// Predicate deciding whether a probe point violates any inequality
/// constraint; evaluation stops at the first violation found.
using ViolationFn = std::function<bool(std::span<const double>)>;

/// Geometric line search on the cost: accepts while the cost does not
/// increase and no inequality constraint turns positive at the probe;
/// offending probes are discarded, never kept. `violates` may be empty when
/// there are no inequality constraints.
LineSearchOutcome cost_line_search(const ScalarFn& f, std::span<const double> x,
                                   std::span<const double> direction,
                                   double cost_at_x, const ViolationFn& violates,
                                   const SolverConfig& config);

/// Equality pass: walks constraints in order, records each (sign-adjusted)
/// gradient row in state.jacobians.j_eq, and line-searches each unsatisfied
/// constraint along its gradient projected onto the nullspace of the
/// previously recorded rows. Clears j_eq and resets n_ac on entry.
void solve_equalities(SolverState& state, const ProblemDescription& problem,
                      const SolverConfig& config);

/// Inequality pass: skips constraints with negative value, activates the
/// rest (recording their gradient rows in j_ineq), and line-searches each
/// along its gradient projected onto the nullspace of the equality rows plus
/// previously activated inequality rows that oppose it. Clears j_ineq on
/// entry; requires the equality pass to have run this outer iteration.
void solve_inequalities(SolverState& state, const ProblemDescription& problem,
                        const SolverConfig& config);

/// Cost pass: descends the cost gradient projected onto the nullspace of the
/// equality rows plus opposing activated inequality rows. Accepted steps
/// never increase the cost and never violate an inequality constraint.
/// Returns the cost at the final iterate (the entry cost if no step was
/// taken).
double minimize_cost(SolverState& state, const ProblemDescription& problem,
                     const SolverConfig& config);

}  // namespace nsopt
