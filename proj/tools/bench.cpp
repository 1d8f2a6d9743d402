#include "bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace nsopt::bench {
namespace {

constexpr double kViolationTol = 1e-3;

std::string fmt(double v, const char* spec = "%.15g") {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), spec, v);
  return buffer;
}

std::string fmt_vector(std::span<const double> v, const char* spec = "%.12g") {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ", ";
    out += fmt(v[i], spec);
  }
  out += "]";
  return out;
}

double max_violation(const OptimizationReport& report) {
  double v = 0.0;
  for (const double r : report.equality_residuals) v = std::max(v, std::abs(r));
  for (const double g : report.inequality_values) v = std::max(v, g);
  return v;
}

struct RunResult {
  int status = kExitPass;
  bool passed = false;
  BenchmarkProblem problem;
  OptimizationReport report;
  double distance = 0.0;
  double violation = 0.0;
  std::string error;  // set when status is kExitUsage/kExitEvaluatorFailure
};

RunResult run_problem(const std::string& id, const ConfigOverrides& overrides,
                      std::vector<IterationRecord>* trace) {
  RunResult result;
  try {
    result.problem = make_benchmark(id);
  } catch (const UnknownProblemError& e) {
    result.status = kExitUsage;
    result.error = e.what();
    return result;
  }

  const SolverConfig config = overrides.apply();
  const ValidationResult valid = validate(result.problem.description, config);
  if (!valid.ok()) {
    result.status = kExitUsage;
    result.error = "invalid configuration: " + valid.message();
    return result;
  }

  try {
    result.report =
        optimize(result.problem.description, result.problem.x0, config, trace);
  } catch (const OptimizationError& e) {
    result.status = kExitEvaluatorFailure;
    result.error = e.what();
    return result;
  }

  result.distance = reference_distance_inf(result.problem, result.report.x_star);
  result.violation = max_violation(result.report);
  result.passed = result.distance <= result.problem.tol_ref &&
                  result.violation <= kViolationTol;
  result.status = result.passed ? kExitPass : kExitReferenceMiss;
  return result;
}

nlohmann::json report_json(const RunResult& r) {
  const OptimizationReport& report = r.report;
  return nlohmann::json{
      {"problem_id", r.problem.id},
      {"x_star", report.x_star},
      {"cost_final", report.cost_final},
      {"outer_iterations", report.outer_iterations},
      {"exit_reason", std::string(to_string(report.exit_reason))},
      {"equality_residuals", report.equality_residuals},
      {"inequality_values", report.inequality_values},
      {"evaluation_counts",
       {{"cost", report.evaluation_counts.cost},
        {"equality", report.evaluation_counts.equality},
        {"inequality", report.evaluation_counts.inequality}}},
      {"wall_time_us", report.wall_time.count()},
      {"passed", r.passed},
  };
}

void print_human(const RunResult& r, std::ostream& out) {
  const OptimizationReport& report = r.report;
  const ProblemDescription& desc = r.problem.description;
  out << "problem:          " << r.problem.id << " (n=" << desc.dimension
      << ", eq=" << desc.num_equality << ", ineq=" << desc.num_inequality
      << ")\n";
  out << "x*:               " << fmt_vector(report.x_star) << "\n";
  out << "cost:             " << fmt(report.cost_final) << "\n";
  out << "outer iterations: " << report.outer_iterations
      << " (exit: " << to_string(report.exit_reason) << ")\n";
  out << "eq residuals:     " << fmt_vector(report.equality_residuals, "%.6g")
      << "\n";
  out << "ineq values:      " << fmt_vector(report.inequality_values, "%.6g")
      << "\n";
  out << "max violation:    " << fmt(r.violation, "%.6g") << "\n";
  out << "dist to x_ref:    " << fmt(r.distance, "%.6g") << " (tol "
      << fmt(r.problem.tol_ref, "%.3g") << ")\n";
  out << "evaluations:      cost=" << report.evaluation_counts.cost
      << " eq=" << report.evaluation_counts.equality
      << " ineq=" << report.evaluation_counts.inequality << "\n";
  out << "wall time:        " << fmt(report.wall_time.count(), "%.1f")
      << " us\n";
  out << "result:           " << (r.passed ? "PASS" : "FAIL") << "\n";
}

bool write_trace(const std::string& path,
                 const std::vector<IterationRecord>& trace, std::ostream& err) {
  std::ofstream file(path);
  if (!file) {
    err << "cannot open trace file: " << path << "\n";
    return false;
  }
  file << "iter,cost,step_norm,max_eq_residual,max_ineq_value\n";
  for (const IterationRecord& rec : trace) {
    file << rec.iter << "," << fmt(rec.cost) << "," << fmt(rec.step_norm)
         << "," << fmt(rec.max_eq_residual) << "," << fmt(rec.max_ineq_value)
         << "\n";
  }
  return true;
}

}  // namespace

SolverConfig ConfigOverrides::apply(SolverConfig base) const {
  if (initial_step_length) base.initial_step_length = *initial_step_length;
  if (step_multiplier) base.step_multiplier = *step_multiplier;
  if (step_tol) base.step_tol = *step_tol;
  if (cost_tol) base.cost_tol = *cost_tol;
  if (max_iter) base.max_iter = *max_iter;
  return base;
}

int run(const RunRequest& request, std::ostream& out, std::ostream& err) {
  std::vector<IterationRecord> trace;
  const bool want_trace = request.trace_path.has_value();

  const RunResult result = run_problem(request.problem_id, request.overrides,
                                       want_trace ? &trace : nullptr);
  if (result.status == kExitUsage) {
    err << result.error << "\n";
    return result.status;
  }
  if (result.status == kExitEvaluatorFailure) {
    err << result.error << "\n";
    return result.status;
  }

  if (want_trace && !write_trace(*request.trace_path, trace, err)) {
    return kExitUsage;
  }

  if (request.format == OutputFormat::json) {
    out << report_json(result).dump(2) << "\n";
  } else {
    print_human(result, out);
  }
  return result.status;
}

int run_all(const ConfigOverrides& overrides, OutputFormat format,
            std::ostream& out, std::ostream& err) {
  // Reject a bad configuration up front, before any problem runs.
  {
    const SolverConfig config = overrides.apply();
    const ValidationResult valid =
        validate(simple_convex().description, config);
    if (!valid.ok()) {
      err << "invalid configuration: " << valid.message() << "\n";
      return kExitUsage;
    }
  }

  int status = kExitPass;
  nlohmann::json json_rows = nlohmann::json::array();
  std::ostringstream table;
  table << std::left << std::setw(17) << "problem" << std::right
        << std::setw(7) << "iters" << std::setw(14) << "cost" << std::setw(12)
        << "max_viol" << std::setw(12) << "dist_inf" << std::setw(12)
        << "time_us" << "  status\n";

  for (const std::string& id : benchmark_ids()) {
    const RunResult result = run_problem(id, overrides, nullptr);
    if (result.status == kExitEvaluatorFailure ||
        result.status == kExitUsage) {
      err << id << ": " << result.error << "\n";
      table << std::left << std::setw(17) << id << "  error\n";
    } else {
      if (format == OutputFormat::json) json_rows.push_back(report_json(result));
      table << std::left << std::setw(17) << id << std::right << std::setw(7)
            << result.report.outer_iterations << std::setw(14)
            << fmt(result.report.cost_final, "%.6g") << std::setw(12)
            << fmt(result.violation, "%.3g") << std::setw(12)
            << fmt(result.distance, "%.3g") << std::setw(12)
            << fmt(result.report.wall_time.count(), "%.1f")
            << (result.passed ? "    PASS" : "    FAIL") << "\n";
    }
    if (status == kExitPass && result.status != kExitPass) {
      status = result.status;
    }
  }

  if (format == OutputFormat::json) {
    out << json_rows.dump(2) << "\n";
  } else {
    out << table.str();
    out << (status == kExitPass ? "all problems passed\n"
                                : "some problems failed\n");
  }
  return status;
}

int list_problems(std::ostream& out) {
  for (const std::string& id : benchmark_ids()) {
    const BenchmarkProblem problem = make_benchmark(id);
    out << std::left << std::setw(17) << id
        << " n=" << problem.description.dimension
        << " eq=" << problem.description.num_equality
        << " ineq=" << problem.description.num_inequality << "\n";
  }
  return kExitPass;
}

}  // namespace nsopt::bench
