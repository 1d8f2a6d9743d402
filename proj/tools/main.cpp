#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "bench.hpp"

int main(int argc, char** argv) {
  CLI::App app{"nsopt benchmark harness: runs the built-in constrained "
               "optimization problems and checks them against their "
               "reference optima"};
  app.require_subcommand(1);

  nsopt::bench::RunRequest request;
  bool run_json = false;
  std::string trace_path;

  CLI::App* run_cmd =
      app.add_subcommand("run", "optimize one problem and check the result");
  run_cmd->add_option("problem_id", request.problem_id, "registry problem id")
      ->required();
  run_cmd->add_option("--max-iter", "outer-iteration cap");
  run_cmd->add_option("--step-tol", "parameter-change exit threshold");
  run_cmd->add_option("--cost-tol", "cost-change exit threshold");
  run_cmd->add_option("--initial-step", "line-search starting step length");
  run_cmd->add_option("--step-multiplier", "line-search growth factor");
  run_cmd->add_flag("--json", run_json, "emit a single JSON report object");
  run_cmd->add_option("--trace", trace_path,
                      "write a per-iteration CSV trace to this path");

  bool run_all_json = false;
  CLI::App* run_all_cmd =
      app.add_subcommand("run-all", "run every registry problem");
  run_all_cmd->add_flag("--json", run_all_json, "emit a JSON report array");

  CLI::App* list_cmd =
      app.add_subcommand("list", "print registry ids and dimensions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return nsopt::bench::kExitUsage;
  }

  if (run_cmd->parsed()) {
    auto opt_double = [&](const char* name) -> std::optional<double> {
      if (run_cmd->count(name) == 0) return std::nullopt;
      return run_cmd->get_option(name)->as<double>();
    };
    request.overrides.initial_step_length = opt_double("--initial-step");
    request.overrides.step_multiplier = opt_double("--step-multiplier");
    request.overrides.step_tol = opt_double("--step-tol");
    request.overrides.cost_tol = opt_double("--cost-tol");
    if (run_cmd->count("--max-iter") > 0) {
      request.overrides.max_iter =
          run_cmd->get_option("--max-iter")->as<std::size_t>();
    }
    request.format = run_json ? nsopt::bench::OutputFormat::json
                              : nsopt::bench::OutputFormat::human;
    if (!trace_path.empty()) request.trace_path = trace_path;
    return nsopt::bench::run(request, std::cout, std::cerr);
  }
  if (run_all_cmd->parsed()) {
    return nsopt::bench::run_all({},
                                 run_all_json
                                     ? nsopt::bench::OutputFormat::json
                                     : nsopt::bench::OutputFormat::human,
                                 std::cout, std::cerr);
  }
  if (list_cmd->parsed()) {
    return nsopt::bench::list_problems(std::cout);
  }
  return nsopt::bench::kExitUsage;
}
