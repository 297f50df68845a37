// wlsim: repeated-game simulator for cooperation enforcement in multi-hop
// packet forwarding. See README for the config schema and presets.

#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wlsim/baselines.hpp"
#include "wlsim/config.hpp"
#include "wlsim/experiment.hpp"
#include "wlsim/game.hpp"
#include "wlsim/metrics.hpp"
#include "wlsim/topology.hpp"

namespace {

int cmd_simulate(const std::string& preset, const std::string& config_path,
                 std::uint64_t seed, bool seed_given, const std::string& out_dir,
                 int jobs) {
  std::vector<wlsim::RunConfig> configs;
  if (!preset.empty()) {
    configs = wlsim::expand_preset(preset, seed);
  } else {
    wlsim::RunConfig c = wlsim::load_config(config_path);
    if (seed_given) c.seed = seed;
    configs.push_back(std::move(c));
  }

  const std::vector<wlsim::RunOutput> outputs =
      wlsim::run_experiment(configs, out_dir, jobs);

  int failures = 0;
  for (const wlsim::RunOutput& r : outputs) {
    if (!r.ok) {
      ++failures;
      std::fprintf(stderr, "[fail] %s: %s\n", r.config.out_prefix.c_str(),
                   r.error.c_str());
      continue;
    }
    const wlsim::StepMetrics& last = r.series.rows.back();
    std::printf("[done] %-42s steps=%ld pdr=%.4f", r.config.out_prefix.c_str(),
                static_cast<long>(r.series.rows.size()), last.cum_pdr);
    if (last.fwd_per_dlv) {
      std::printf(" fwd/dlv=%.4f", *last.fwd_per_dlv);
    } else {
      std::printf(" fwd/dlv=n/a");
    }
    std::printf(" eff=%.4f avg_alpha=%.4f\n", last.avg_efficiency,
                last.avg_alpha);
    std::printf("       %s\n", r.series_path.c_str());
  }
  return failures == 0 ? 0 : 1;
}

int cmd_check_nash(const std::string& config_path, double grid, double tol) {
  const wlsim::RunConfig c = wlsim::load_config(config_path);
  const wlsim::Scenario scenario = wlsim::build_scenario(c.scenario);
  const wlsim::StrategyProfile profile =
      wlsim::StrategyProfile::uniform(scenario.num_nodes, c.learn.init_alpha);
  const wlsim::NashReport report =
      wlsim::check_nash(scenario, profile, c.game, grid, tol);
  std::printf("profile: alpha=%g for all %u nodes; grid=%g tol=%g\n",
              c.learn.init_alpha, scenario.num_nodes, grid, tol);
  if (report.is_nash) {
    std::printf("Nash equilibrium: yes (no improving unilateral deviation)\n");
    return 0;
  }
  std::printf("Nash equilibrium: no; %zu node(s) with improving deviations\n",
              report.best_deviations.size());
  int shown = 0;
  for (const auto& [node, dev] : report.best_deviations) {
    if (++shown > 10) {
      std::printf("  ...\n");
      break;
    }
    std::printf("  node %u: alpha -> %g improves total utility by %g\n", node,
                dev.alpha, dev.gain);
  }
  return 1;
}

int cmd_validate(const std::string& config_path,
                 const std::string& scenario_out) {
  const wlsim::RunConfig c = wlsim::load_config(config_path);
  const wlsim::Scenario scenario = wlsim::build_scenario(c.scenario);
  const std::vector<wlsim::Violation> violations = wlsim::validate(scenario);
  if (!violations.empty()) {
    for (const wlsim::Violation& v : violations) {
      std::fprintf(stderr, "violation: %s\n", v.detail.c_str());
    }
    return 1;
  }
  std::printf("config ok; scenario ok: %u nodes, %zu routes\n",
              scenario.num_nodes, scenario.routes.size());
  if (!scenario_out.empty()) {
    std::FILE* f = std::fopen(scenario_out.c_str(), "wb");
    if (!f) {
      std::fprintf(stderr, "cannot write %s\n", scenario_out.c_str());
      return 1;
    }
    const std::string text = wlsim::to_text(scenario);
    std::fwrite(text.data(), 1, text.size(), f);
    std::fclose(f);
    std::printf("scenario written to %s\n", scenario_out.c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weakest-link forwarding game simulator"};
  app.require_subcommand(1);

  std::string preset;
  std::string config_path;
  std::uint64_t seed = 1;
  std::string out_dir = ".";
  int jobs = 1;

  CLI::App* simulate = app.add_subcommand(
      "simulate", "run one config or a whole preset, writing CSV series");
  CLI::Option* opt_preset =
      simulate->add_option("--preset", preset, "preset name");
  CLI::Option* opt_config =
      simulate->add_option("--config", config_path, "config file path");
  opt_preset->excludes(opt_config);
  CLI::Option* opt_seed =
      simulate->add_option("--seed", seed, "run seed (default 1)");
  simulate->add_option("--out", out_dir, "output directory (default .)");
  simulate->add_option("--jobs", jobs, "worker threads across runs")
      ->check(CLI::PositiveNumber);

  std::string nash_config;
  double grid = 0.1;
  double tol = 1e-9;
  CLI::App* check = app.add_subcommand(
      "check-nash", "grid-search unilateral deviations of the config's "
                    "uniform init_alpha profile");
  check->add_option("--config", nash_config, "config file path")->required();
  check->add_option("--grid", grid, "deviation grid step (default 0.1)");
  check->add_option("--tol", tol, "improvement tolerance (default 1e-9)");

  std::string val_config;
  std::string scenario_out;
  CLI::App* validate = app.add_subcommand(
      "validate", "parse a config, build its scenario, run structural checks");
  validate->add_option("--config", val_config, "config file path")->required();
  validate->add_option("--scenario-out", scenario_out,
                       "also write the scenario as text to this path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (simulate->parsed()) {
      if (preset.empty() && config_path.empty()) {
        std::fprintf(stderr, "simulate: need --preset or --config\n");
        return 2;
      }
      return cmd_simulate(preset, config_path, seed, opt_seed->count() > 0,
                          out_dir, jobs);
    }
    if (check->parsed()) return cmd_check_nash(nash_config, grid, tol);
    if (validate->parsed()) return cmd_validate(val_config, scenario_out);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
