#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "nsopt/gradient.hpp"

namespace nsopt {

/// Scalar constraint evaluator; `k` is the 0-based constraint index.
using ConstraintFn = std::function<double(std::span<const double>, std::size_t)>;

/// Hook invoked once per outer iteration with the current iterate, before any
/// evaluator call of that iteration. Free to refresh cached state (dynamics
/// terms, precomputed factors) that the evaluators read. Never called from
/// within gradient estimation.
using InterimFn = std::function<void(std::span<const double>)>;

/// User-supplied description of the optimization problem
///
///   min f(x)  subject to  g_eq_k(x) = 0,  g_ineq_k(x) < 0.
///
/// Evaluators must be deterministic: the same vector (and the same
/// interim-managed cache state) must produce the same value. The cost is
/// expected to be non-negative; this is documented rather than enforced, and
/// the descent logic does not rely on it. After construction the description
/// is treated as immutable except for state owned by the interim hook; a
/// single solve drives all evaluators from one thread.
struct ProblemDescription {
  std::size_t dimension = 0;      ///< n, number of optimization parameters
  std::size_t num_equality = 0;   ///< number of equality constraints
  std::size_t num_inequality = 0; ///< number of inequality constraints
  ScalarFn cost;
  ConstraintFn equality;    ///< may be empty when num_equality == 0
  ConstraintFn inequality;  ///< may be empty when num_inequality == 0
  InterimFn interim;        ///< optional; empty means no-op
};

/// Solver parameters. The first four match the framework's standard settings;
/// the rest pin down numerical details (finite-difference step, the threshold
/// realizing "approximately zero" tests, and the rank cutoff of the
/// projection pseudoinverse).
struct SolverConfig {
  double initial_step_length = 1e-6;  ///< line-search starting step
  double step_multiplier = 2.0;       ///< geometric growth factor, > 1
  double step_tol = 1e-4;             ///< outer-iteration parameter-change exit
  double cost_tol = 1e-4;             ///< outer-iteration cost-change exit
  std::size_t max_iter = 2000;        ///< outer-iteration cap
  double gradient_step = 1e-7;        ///< finite-difference perturbation
  double zero_tol = 1e-10;            ///< threshold for ~0 comparisons
  double rank_tol = 1e-10;            ///< eigenvalue cutoff in the pseudoinverse
  GradientScheme gradient_scheme = GradientScheme::central;
};

struct ValidationIssue {
  std::string field;    ///< name of the violated field
  std::string message;  ///< human-readable diagnostic
};

struct ValidationResult {
  std::vector<ValidationIssue> issues;

  bool ok() const noexcept { return issues.empty(); }
  explicit operator bool() const noexcept { return ok(); }

  /// All diagnostics joined into one line; empty when valid.
  std::string message() const;
};

/// Checks the type invariants of both the problem and the configuration.
/// Pure: identical inputs always produce identical results.
ValidationResult validate(const ProblemDescription& problem,
                          const SolverConfig& config);

}  // namespace nsopt
