#include "wlsim/experiment.hpp"

#include <charconv>
#include <exception>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "wlsim/engine.hpp"

namespace wlsim {

std::string csv_number(double v) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, p);
}

std::string series_csv(const MetricsSeries& series) {
  std::ostringstream out;
  out << "step,avg_alpha,cum_pdr,fwd_per_dlv,avg_efficiency\n";
  for (const StepMetrics& row : series.rows) {
    out << row.step << ',' << csv_number(row.avg_alpha) << ','
        << csv_number(row.cum_pdr) << ',';
    if (row.fwd_per_dlv) out << csv_number(*row.fwd_per_dlv);
    out << ',' << csv_number(row.avg_efficiency) << '\n';
  }
  return out.str();
}

std::string summary_csv(const RunConfig& config, const MetricsSeries& series) {
  std::ostringstream header;
  std::ostringstream row;
  header << "steps,generated,delivered,forwards,avg_alpha,cum_pdr,"
            "fwd_per_dlv,avg_efficiency";
  const StepMetrics last =
      series.rows.empty() ? StepMetrics{} : series.rows.back();
  row << series.rows.size() << ',' << series.totals.generated << ','
      << series.totals.delivered << ',' << series.totals.forwards << ','
      << csv_number(last.avg_alpha) << ',' << csv_number(last.cum_pdr) << ',';
  if (last.fwd_per_dlv) row << csv_number(*last.fwd_per_dlv);
  row << ',' << csv_number(last.avg_efficiency);

  // config echo, one column per key
  std::istringstream echo(emit_config(config));
  std::string line;
  while (std::getline(echo, line)) {
    const auto eq = line.find('=');
    header << ',' << line.substr(0, eq - 1);
    row << ',' << line.substr(eq + 2);
  }
  return header.str() + "\n" + row.str() + "\n";
}

MetricsSeries execute_run(const RunConfig& config, ExecMode mode) {
  const Scenario scenario = build_scenario(config.scenario);
  return run(scenario, config.game, config.learn, config.steps, config.seed,
             config.strategy, mode);
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& bytes) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot open for writing: " + path.string());
  out << bytes;
  out.flush();
  if (!out) throw ConfigError("write failed: " + path.string());
}

RunOutput one_run(const RunConfig& config, const std::string& out_dir,
                  ExecMode mode) {
  RunOutput result;
  result.config = config;
  const std::filesystem::path dir =
      out_dir.empty() ? std::filesystem::path(".") : std::filesystem::path(out_dir);
  const std::filesystem::path series_path = dir / (config.out_prefix + "-series.csv");
  const std::filesystem::path summary_path = dir / (config.out_prefix + "-summary.csv");
  result.series_path = series_path.string();
  result.summary_path = summary_path.string();
  try {
    result.series = execute_run(config, mode);
    write_file(series_path, series_csv(result.series));
    write_file(summary_path, summary_csv(config, result.series));
    result.ok = true;
  } catch (const std::exception& e) {
    result.ok = false;
    result.error = e.what();
  }
  return result;
}

}  // namespace

std::vector<RunOutput> run_experiment(const std::vector<RunConfig>& configs,
                                      const std::string& out_dir,
                                      int parallelism) {
  std::vector<RunOutput> outputs(configs.size());
  const bool across_runs = parallelism > 1;
  const ExecMode inner = across_runs ? ExecMode::Serial : ExecMode::Parallel;
  const int threads = across_runs ? parallelism : 1;
  const auto n = static_cast<std::int64_t>(configs.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads) if (across_runs)
  for (std::int64_t i = 0; i < n; ++i) {
    outputs[static_cast<std::size_t>(i)] =
        one_run(configs[static_cast<std::size_t>(i)], out_dir, inner);
  }
  return outputs;
}

}  // namespace wlsim
