#include "nsopt/problem.hpp"

#include <cmath>

namespace nsopt {

std::string ValidationResult::message() const {
  std::string out;
  for (const auto& issue : issues) {
    if (!out.empty()) out += "; ";
    out += issue.field + ": " + issue.message;
  }
  return out;
}

ValidationResult validate(const ProblemDescription& problem,
                          const SolverConfig& config) {
  ValidationResult result;
  auto fail = [&result](std::string field, std::string message) {
    result.issues.push_back({std::move(field), std::move(message)});
  };

  if (problem.dimension == 0) {
    fail("dimension", "number of optimization parameters must be at least 1");
  }
  if (!problem.cost) {
    fail("cost", "cost evaluator must be set");
  }
  if (problem.num_equality > 0 && !problem.equality) {
    fail("equality", "equality evaluator must be set when num_equality > 0");
  }
  if (problem.num_inequality > 0 && !problem.inequality) {
    fail("inequality",
         "inequality evaluator must be set when num_inequality > 0");
  }

  auto positive = [&](const char* field, double value) {
    if (!(value > 0.0) || !std::isfinite(value)) {
      fail(field, "must be a positive finite real, got " +
                      std::to_string(value));
    }
  };
  positive("initial_step_length", config.initial_step_length);
  positive("step_tol", config.step_tol);
  positive("cost_tol", config.cost_tol);
  positive("gradient_step", config.gradient_step);
  positive("zero_tol", config.zero_tol);
  positive("rank_tol", config.rank_tol);

  if (!(config.step_multiplier > 1.0) || !std::isfinite(config.step_multiplier)) {
    fail("step_multiplier", "geometric growth requires a multiplier > 1, got " +
                                std::to_string(config.step_multiplier));
  }
  if (config.max_iter == 0) {
    fail("max_iter", "outer-iteration cap must be at least 1");
  }
  return result;
}

}  // namespace nsopt
