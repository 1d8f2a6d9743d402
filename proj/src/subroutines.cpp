#include "nsopt/subroutines.hpp"

#include <cmath>
#include <utility>

#include "nsopt/errors.hpp"
#include "nsopt/kernels.hpp"

namespace nsopt {
namespace {

// Guard against searches that never meet their stop test (e.g. an inequality
// that decays toward zero without crossing). Step-length doubling overflows
// long before this in practice.
constexpr std::size_t kMaxInnerIterations = 8192;

double checked_cost(const ScalarFn& fn, std::span<const double> x) {
  const double value = fn(x);
  if (!std::isfinite(value)) {
    throw EvaluationError(EvaluationError::Fn::cost, std::nullopt, std::nullopt,
                          value);
  }
  return value;
}

double checked_constraint(const ConstraintFn& fn, std::span<const double> x,
                          std::size_t k, EvaluationError::Fn kind) {
  const double value = fn(x, k);
  if (!std::isfinite(value)) {
    throw EvaluationError(kind, k, std::nullopt, value);
  }
  return value;
}

std::vector<double> constraint_gradient(const ConstraintFn& fn,
                                        std::span<const double> x,
                                        std::size_t k,
                                        EvaluationError::Fn kind,
                                        const SolverConfig& config) {
  try {
    return numerical_gradient(
        [&fn, k](std::span<const double> p) { return fn(p, k); }, x,
        config.gradient_step, config.gradient_scheme);
  } catch (const GradientError& e) {
    throw EvaluationError(kind, k, e.component(), e.value());
  }
}

std::vector<double> cost_gradient(const ScalarFn& fn,
                                  std::span<const double> x,
                                  const SolverConfig& config) {
  try {
    return numerical_gradient(fn, x, config.gradient_step,
                              config.gradient_scheme);
  } catch (const GradientError& e) {
    throw EvaluationError(EvaluationError::Fn::cost, std::nullopt,
                          e.component(), e.value());
  }
}

}  // namespace

LineSearchOutcome equality_line_search(const ScalarFn& g,
                                       std::span<const double> x,
                                       std::span<const double> direction,
                                       double cost_at_x,
                                       const SolverConfig& config) {
  LineSearchOutcome out;
  out.x_final.assign(x.begin(), x.end());
  out.final_cost = cost_at_x;

  std::vector<double> dir(direction.begin(), direction.end());
  std::vector<double> probe(x.size());
  double step = config.initial_step_length;
  double cost = cost_at_x;
  std::size_t accepted = 0;

  for (std::size_t i = 0; i < kMaxInnerIterations; ++i) {
    kernels::scaled_sub(out.x_final, step, dir, probe);
    const double probe_cost = g(probe);
    ++out.evaluations;
    if (std::abs(probe_cost) > std::abs(cost)) break;  // minimal point reached
    if ((probe_cost < 0.0) != (cost < 0.0)) {
      // Zero crossing: reverse direction, keep the grown step length.
      kernels::scale(dir, -1.0);
    }
    std::swap(out.x_final, probe);
    cost = probe_cost;
    ++accepted;
    step *= config.step_multiplier;
  }

  out.final_cost = cost;
  out.exit = accepted > 0 ? LineSearchExit::minimal_point_reached
                          : LineSearchExit::no_progress;
  return out;
}

LineSearchOutcome inequality_line_search(const ScalarFn& g,
                                         std::span<const double> x,
                                         std::span<const double> direction,
                                         const SolverConfig& config) {
  LineSearchOutcome out;
  out.x_final.assign(x.begin(), x.end());

  std::vector<double> probe(x.size());
  double step = config.initial_step_length;

  std::size_t accepted = 0;
  for (std::size_t i = 0; i < kMaxInnerIterations; ++i) {
    kernels::scaled_sub(out.x_final, step, direction, probe);
    const double probe_cost = g(probe);
    ++out.evaluations;
    if (probe_cost < 0.0) {
      // Zero crossing: the probe that lands on the feasible side is discarded
      // and the search stops, so the iterate approaches the boundary from the
      // infeasible side and the constraint stays active for the next outer
      // iteration.
      out.exit = LineSearchExit::zero_crossing_reached;
      return out;
    }
    std::swap(out.x_final, probe);
    out.final_cost = probe_cost;
    ++accepted;
    step *= config.step_multiplier;
  }
  out.exit = accepted > 0 ? LineSearchExit::minimal_point_reached
                          : LineSearchExit::no_progress;  // safety cap
  return out;
}

LineSearchOutcome cost_line_search(const ScalarFn& f, std::span<const double> x,
                                   std::span<const double> direction,
                                   double cost_at_x,
                                   const ViolationFn& violates,
                                   const SolverConfig& config) {
  LineSearchOutcome out;
  out.x_final.assign(x.begin(), x.end());
  out.final_cost = cost_at_x;

  std::vector<double> probe(x.size());
  double step = config.initial_step_length;
  double cost = cost_at_x;
  std::size_t accepted = 0;

  for (std::size_t i = 0; i < kMaxInnerIterations; ++i) {
    kernels::scaled_sub(out.x_final, step, direction, probe);
    const double probe_cost = f(probe);
    ++out.evaluations;
    if (probe_cost > cost) {
      out.exit = accepted > 0 ? LineSearchExit::minimal_point_reached
                              : LineSearchExit::no_progress;
      out.final_cost = cost;
      return out;
    }
    std::swap(out.x_final, probe);
    cost = probe_cost;
    ++accepted;
    // A cost-reducing step that newly crosses an inequality boundary is kept
    // but ends the search: the iterate lands on the constraint's infeasible
    // side, so the next outer iteration activates it and walks it back. This
    // keeps boundary-bound coordinates active until the active set settles
    // instead of leaving them parked just inside, where they would throttle
    // every later search.
    if (violates && violates(out.x_final)) {
      out.exit = LineSearchExit::inequality_violation;
      out.final_cost = cost;
      return out;
    }
    step *= config.step_multiplier;
  }
  out.final_cost = cost;
  out.exit = accepted > 0 ? LineSearchExit::minimal_point_reached
                          : LineSearchExit::no_progress;
  return out;
}

void solve_equalities(SolverState& state, const ProblemDescription& problem,
                      const SolverConfig& config) {
  ActiveJacobianSet& jac = state.jacobians;
  jac.j_eq.clear();
  jac.n_ac = 0;

  for (std::size_t k = 0; k < problem.num_equality; ++k) {
    jac.n_ac += 1;
    const double cost = checked_constraint(problem.equality, state.x, k,
                                           EvaluationError::Fn::equality);
    std::vector<double> grad = constraint_gradient(
        problem.equality, state.x, k, EvaluationError::Fn::equality, config);
    // Signed gradient: descending it drives the constraint toward zero from
    // either side. A value of exactly zero keeps the raw gradient so the row
    // below is still recorded.
    if (cost < 0.0) kernels::scale(grad, -1.0);

    if (kernels::norm(grad) <= config.zero_tol) continue;  // zero gradient
    const std::size_t previous_rows = jac.j_eq.rows();
    jac.j_eq.append_row(grad);
    if (std::abs(cost) <= config.zero_tol) continue;  // already satisfied,
                                                      // row stays recorded
    std::vector<double> direction = grad;
    if (jac.n_ac > 1 && previous_rows > 0) {
      // Project onto the nullspace of the constraints recorded before this
      // one so the search cannot disturb them to first order.
      direction =
          project_onto_nullspace(jac.j_eq, grad, config.rank_tol, previous_rows);
    }
    if (kernels::norm(direction) <= config.zero_tol) continue;  // empty nullspace

    LineSearchOutcome outcome = equality_line_search(
        [&problem, k](std::span<const double> p) {
          return checked_constraint(problem.equality, p, k,
                                    EvaluationError::Fn::equality);
        },
        state.x, direction, cost, config);
    state.x = std::move(outcome.x_final);
  }
}

void solve_inequalities(SolverState& state, const ProblemDescription& problem,
                        const SolverConfig& config) {
  ActiveJacobianSet& jac = state.jacobians;
  jac.j_ineq.clear();

  for (std::size_t k = 0; k < problem.num_inequality; ++k) {
    const double cost = checked_constraint(problem.inequality, state.x, k,
                                           EvaluationError::Fn::inequality);
    if (cost < 0.0) continue;  // inactive, nothing to solve
    std::vector<double> grad = constraint_gradient(
        problem.inequality, state.x, k, EvaluationError::Fn::inequality, config);
    if (kernels::norm(grad) <= config.zero_tol) continue;  // zero gradient

    jac.n_ac += 1;
    jac.j_ineq.append_row(grad);

    // Active set for this constraint: every equality row, plus previously
    // activated inequality rows whose gradients oppose this one. The row just
    // appended self-dots >= 0 and is filtered by the same test.
    RowMatrix j_active = jac.j_eq;
    for (std::size_t i = 0; i < jac.j_ineq.rows(); ++i) {
      if (opposes(jac.j_ineq.row(i), grad)) {
        j_active.append_row(jac.j_ineq.row(i));
      }
    }

    std::vector<double> direction = grad;
    if (jac.n_ac > 1 && j_active.rows() > 0) {
      direction = project_onto_nullspace(j_active, grad, config.rank_tol);
    }
    if (kernels::norm(direction) <= config.zero_tol) continue;  // empty nullspace

    LineSearchOutcome outcome = inequality_line_search(
        [&problem, k](std::span<const double> p) {
          return checked_constraint(problem.inequality, p, k,
                                    EvaluationError::Fn::inequality);
        },
        state.x, direction, config);
    state.x = std::move(outcome.x_final);
  }
}

double minimize_cost(SolverState& state, const ProblemDescription& problem,
                     const SolverConfig& config) {
  ActiveJacobianSet& jac = state.jacobians;
  const double cost = checked_cost(problem.cost, state.x);
  std::vector<double> grad = cost_gradient(problem.cost, state.x, config);
  if (kernels::norm(grad) <= config.zero_tol) return cost;  // zero gradient

  RowMatrix j_active = jac.j_eq;
  for (std::size_t i = 0; i < jac.j_ineq.rows(); ++i) {
    if (opposes(jac.j_ineq.row(i), grad)) {
      j_active.append_row(jac.j_ineq.row(i));
    }
  }

  std::vector<double> direction = grad;
  if (jac.n_ac > 0 && j_active.rows() > 0) {
    direction = project_onto_nullspace(j_active, grad, config.rank_tol);
    if (kernels::norm(direction) <= config.zero_tol) return cost;  // empty
                                                                   // nullspace
  }

  // Guard against probes where a constraint BECOMES positive. A constraint
  // already at or past its boundary when the search starts is exempt: its row
  // is being projected out (or the motion improves it), and the next outer
  // iteration's inequality pass walks it back. Only newly crossed constraints
  // veto a probe.
  ViolationFn violates;
  std::vector<bool> entry_feasible;
  if (problem.num_inequality > 0) {
    entry_feasible.resize(problem.num_inequality);
    for (std::size_t k = 0; k < problem.num_inequality; ++k) {
      entry_feasible[k] =
          checked_constraint(problem.inequality, state.x, k,
                             EvaluationError::Fn::inequality) <= 0.0;
    }
    violates = [&problem, &entry_feasible](std::span<const double> p) {
      for (std::size_t k = 0; k < problem.num_inequality; ++k) {
        if (entry_feasible[k] &&
            checked_constraint(problem.inequality, p, k,
                               EvaluationError::Fn::inequality) > 0.0) {
          return true;
        }
      }
      return false;
    };
  }

  LineSearchOutcome outcome = cost_line_search(
      [&problem](std::span<const double> p) {
        return checked_cost(problem.cost, p);
      },
      state.x, direction, cost, violates, config);
  state.x = std::move(outcome.x_final);
  return outcome.final_cost;
}

}  // namespace nsopt
