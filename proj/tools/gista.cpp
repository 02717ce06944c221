#include <CLI11.hpp>
#include <iostream>

#include "gista/app/commands.hpp"

using namespace gista::app;

int main(int argc, char** argv) {
  CLI::App app{"Iterative super-twisting sliding-mode control experiments"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::string config, out;
  std::optional<std::size_t> iterations;
  std::optional<double> dt;
  int jobs = 0;

  auto* run = app.add_subcommand("run", "run one experiment and write traces + summary");
  run->add_option("--config", config, "experiment config (INI)")->required();
  run->add_option("--out", out, "output directory")->required();
  run->add_option("--iterations", iterations, "override number of iterations");
  run->add_option("--dt", dt, "override sample period [s]");

  auto* sweep = app.add_subcommand("sweep", "run every point of the [sweep] grid");
  sweep->add_option("--config", config, "experiment config with a [sweep] section")->required();
  sweep->add_option("--out", out, "output directory")->required();
  sweep->add_option("--jobs", jobs, "concurrent grid points (0 = all cores, 1 = serial)")
      ->check(CLI::NonNegativeNumber);
  sweep->add_option("--iterations", iterations, "override number of iterations");
  sweep->add_option("--dt", dt, "override sample period [s]");

  auto* plot = app.add_subcommand("plotdata", "emit figure CSVs from a finished run");
  plot->add_option("--out", out, "run directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kConfigError;
  }

  const Overrides ov{iterations, dt};
  if (*run) return cmd_run({config, out, ov}, std::cerr);
  if (*sweep) return cmd_sweep({config, out, ov, jobs}, std::cerr);
  return cmd_plotdata(out, std::cerr);
}
