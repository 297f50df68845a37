#pragma once

#include <string>
#include <vector>

#include "wlsim/config.hpp"
#include "wlsim/metrics.hpp"

namespace wlsim {

struct RunOutput {
  RunConfig config;
  std::string series_path;
  std::string summary_path;
  bool ok = false;
  std::string error;
  MetricsSeries series;
};

// Shortest decimal form that parses back to the same double.
std::string csv_number(double v);

// Header `step,avg_alpha,cum_pdr,fwd_per_dlv,avg_efficiency`, one row per
// step, LF endings; fwd_per_dlv is blank until a first delivery.
std::string series_csv(const MetricsSeries& series);

// One data row: final cumulative metrics followed by the full config echo
// (columns named by the config keys).
std::string summary_csv(const RunConfig& config, const MetricsSeries& series);

MetricsSeries execute_run(const RunConfig& config,
                          ExecMode mode = ExecMode::Serial);

// Executes every config and writes <out_dir>/<out.prefix>-series.csv and
// <out_dir>/<out.prefix>-summary.csv. parallelism > 1 distributes whole
// runs over that many threads (serial kernels inside each); parallelism 1
// uses the parallel kernels inside the single running config. The output
// bytes do not depend on that choice.
std::vector<RunOutput> run_experiment(const std::vector<RunConfig>& configs,
                                      const std::string& out_dir,
                                      int parallelism);

}  // namespace wlsim
