// qsched: build, solve and verify nurse schedules as penalty QUBOs.
//
//   qsched solve --config month.json [--reads 10] [--sweeps 10000] [--seed 0]
//                [--beta-hot F] [--beta-cold F] [--format ascii|csv|json] [--out PATH]
//   qsched check schedule.csv --config month.json [--oracle]
//   qsched export-qubo --config month.json --out model.qubo
//
// Exit codes: 0 feasible, 2 solved but infeasible, 1 error.

#include <iostream>

#include <CLI11.hpp>

#include "qsched/cli.hpp"

int main(int argc, char** argv) {
  namespace cli = qsched::cli;

  CLI::App app{"Nurse scheduling via penalty QUBO and simulated annealing"};
  app.require_subcommand(1);

  std::string config;
  cli::SolveOptions opts;
  std::string format = "ascii";
  std::string out_path;
  double beta_hot = 0.0;
  double beta_cold = 0.0;

  auto* solve = app.add_subcommand("solve", "Assemble, anneal and print the best schedule");
  solve->add_option("--config", config, "Instance config (JSON)")->required();
  solve->add_option("--reads", opts.reads, "Independent annealing runs")->capture_default_str();
  solve->add_option("--sweeps", opts.sweeps, "Sweeps per run")->capture_default_str();
  solve->add_option("--seed", opts.seed, "Master seed")->capture_default_str();
  auto* hot = solve->add_option("--beta-hot", beta_hot, "Initial inverse temperature");
  auto* cold = solve->add_option("--beta-cold", beta_cold, "Final inverse temperature");
  solve->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"ascii", "csv", "json"}))
      ->capture_default_str();
  solve->add_option("--out", out_path, "Write the schedule here instead of stdout");

  std::string schedule;
  bool with_oracle = false;
  auto* check = app.add_subcommand("check", "Verify a CSV schedule against rules 1-5");
  check->add_option("schedule", schedule, "Schedule CSV (N rows of d 0/1 cells)")->required();
  check->add_option("--config", config, "Instance config (JSON)")->required();
  check->add_flag("--oracle", with_oracle, "Also enumerate every feasible schedule (tiny instances)");

  auto* exporter = app.add_subcommand("export-qubo", "Write the assembled QUBO as text");
  exporter->add_option("--config", config, "Instance config (JSON)")->required();
  exporter->add_option("--out", out_path, "Destination file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kExitError;
  }

  if (solve->parsed()) {
    if (opts.reads == 0 || opts.sweeps == 0) {
      std::cerr << "error: --reads and --sweeps must be positive\n";
      return cli::kExitError;
    }
    if (*hot) opts.beta_hot = beta_hot;
    if (*cold) opts.beta_cold = beta_cold;
    opts.format = *cli::parse_format(format);
    if (!out_path.empty()) opts.out = out_path;
    return cli::run_solve(config, opts, std::cout, std::cerr);
  }
  if (check->parsed()) return cli::run_check(schedule, config, with_oracle, std::cout, std::cerr);
  return cli::run_export_qubo(config, out_path, std::cout, std::cerr);
}
