#include <CLI11.hpp>
#include <string>

#include "legopt/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"swing-phase planning, Lagrangian dynamics and dimension optimization "
               "for a 3-DOF articulated leg"};
  app.require_subcommand(1);

  legopt::cli::CommandOptions opts;
  std::string config_path;
  std::string output_dir;
  std::string geometry_path;
  std::uint64_t seed = 0;
  std::string energy_mode;
  int threads = 0;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "JSON run configuration");
    cmd->add_option("--out", output_dir, "output directory (default: config output_dir)");
    cmd->add_option("--seed", seed, "override the GA seed");
    cmd->add_option("--energy-mode", energy_mode, "absolute|signed");
    cmd->add_option("--threads", threads, "worker threads for fitness evaluation");
    return cmd;
  };

  CLI::App* plan = add_common(app.add_subcommand("plan", "write trajectory and foot-path CSVs"));
  CLI::App* evaluate =
      add_common(app.add_subcommand("evaluate", "torque trace and metrics for a geometry"));
  evaluate->add_option("--geometry", geometry_path,
                       "geometry JSON to evaluate against the configured baseline");
  CLI::App* optimize =
      add_common(app.add_subcommand("optimize", "run the genetic dimension optimization"));
  CLI::App* verify =
      add_common(app.add_subcommand("verify", "numerical cross-checks of the dynamics"));
  CLI::App* simulate =
      add_common(app.add_subcommand("simulate", "forward-dynamics power curves"));
  simulate->add_option("--geometry", geometry_path,
                       "optimized geometry JSON for the before/after comparison");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : legopt::cli::kConfigError;
  }

  CLI::App* sub = app.get_subcommands().front();
  auto supplied = [&](const std::string& name) {
    const CLI::Option* opt = sub->get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
  };
  if (supplied("--config")) opts.config_path = config_path;
  if (supplied("--out")) opts.output_dir = output_dir;
  if (supplied("--geometry")) opts.geometry_path = geometry_path;
  if (supplied("--seed")) opts.seed = seed;
  if (supplied("--energy-mode")) opts.energy_mode = energy_mode;
  if (supplied("--threads")) opts.threads = threads;

  if (plan->parsed()) return legopt::cli::cmd_plan(opts);
  if (evaluate->parsed()) return legopt::cli::cmd_evaluate(opts);
  if (optimize->parsed()) return legopt::cli::cmd_optimize(opts);
  if (verify->parsed()) return legopt::cli::cmd_verify(opts);
  if (simulate->parsed()) return legopt::cli::cmd_simulate(opts);
  return legopt::cli::kConfigError;
}
