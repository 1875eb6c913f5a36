// egodyn: simulate radar experiments, analyze round files, compare metric curves.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "egodyn/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Ego-centered routing topology dynamics simulator"};
  app.require_subcommand(1);

  std::string config_path, out_dir;
  unsigned threads = 1;
  auto* simulate = app.add_subcommand("simulate", "Run a radar experiment from a config file");
  simulate->add_option("--config", config_path, "Experiment config (JSON)")->required();
  simulate->add_option("--out", out_dir, "Output directory")->required();
  simulate->add_option("--threads", threads, "Tracing threads per round (output is identical for any value)")
      ->check(CLI::PositiveNumber);

  std::string series_path, metrics_out;
  auto* analyze = app.add_subcommand("analyze", "Compute dynamics metrics from a round file");
  analyze->add_option("--series", series_path, "Round file")->required();
  analyze->add_option("--out", metrics_out, "Metrics CSV path")->required();

  std::string path_a, path_b, field;
  auto* compare = app.add_subcommand("compare", "Compare one normalized curve of two metrics CSVs");
  compare->add_option("--a", path_a, "First metrics CSV")->required();
  compare->add_option("--b", path_b, "Second metrics CSV")->required();
  compare->add_option("--field", field, "nodes_observed, cumulative_distinct, appeared or disappeared")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return egodyn::kExitInvalidInput;
  }

  if (*simulate) return egodyn::cmd_simulate(config_path, out_dir, std::cerr, egodyn::TraceOptions{threads});
  if (*analyze) return egodyn::cmd_analyze(series_path, metrics_out, std::cerr);
  return egodyn::cmd_compare(path_a, path_b, field, std::cout, std::cerr);
}
