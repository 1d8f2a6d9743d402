#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "nsopt/benchmarks.hpp"
#include "nsopt/solver.hpp"

/// Benchmark harness behind the nsopt-bench executable. Lives in a library so
/// tests can drive it and inspect exit codes and output directly.
namespace nsopt::bench {

enum class OutputFormat { human, json };

/// Partial solver configuration; unset fields keep their defaults.
struct ConfigOverrides {
  std::optional<double> initial_step_length;
  std::optional<double> step_multiplier;
  std::optional<double> step_tol;
  std::optional<double> cost_tol;
  std::optional<std::size_t> max_iter;

  SolverConfig apply(SolverConfig base = {}) const;
};

struct RunRequest {
  std::string problem_id;
  ConfigOverrides overrides;
  OutputFormat format = OutputFormat::human;
  std::optional<std::string> trace_path;
};

// Exit statuses; mutually exclusive.
inline constexpr int kExitPass = 0;              ///< reached the reference
inline constexpr int kExitReferenceMiss = 1;     ///< ran, but missed it
inline constexpr int kExitUsage = 2;             ///< bad id, flag, or config
inline constexpr int kExitEvaluatorFailure = 3;  ///< non-finite evaluator value

/// Optimizes one registry problem, prints a report (human table or a single
/// JSON object) to `out`, and writes the per-iteration CSV trace when
/// requested. Exit status 0 iff the final point is within tol_ref of the
/// reference in infinity norm and no constraint is violated by more than 1e-3.
int run(const RunRequest& request, std::ostream& out, std::ostream& err);

/// Runs every registry problem with the given overrides (none by default) and
/// prints one summary row per problem. All problems run even after a failure;
/// the exit status is the first failing problem's status, 0 if all pass.
int run_all(const ConfigOverrides& overrides, OutputFormat format,
            std::ostream& out, std::ostream& err);

/// Prints the registry: one line per problem id with its dimensions.
int list_problems(std::ostream& out);

}  // namespace nsopt::bench
