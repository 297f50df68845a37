#include "wlsim/game.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wlsim {

double GainSchedule::value(int n) const {
  if (n < 1) {
    throw std::invalid_argument("GainSchedule::value: chain position must be >= 1");
  }
  return increment * (n - 1);
}

StrategyProfile StrategyProfile::uniform(std::uint32_t num_nodes, double alpha) {
  StrategyProfile p;
  p.alpha.assign(num_nodes, alpha);
  return p;
}

double route_utility(const Route& route, int position,
                     const StrategyProfile& profile, const GameParams& params) {
  const int N = route.hop_count();
  if (position < 0 || position > N) {
    throw std::invalid_argument("route_utility: position outside [0, hop_count]");
  }
  double u = params.gain.value(N);
  const int stop = std::max(position, 1);
  for (int k = N - 1; k >= stop; --k) {
    const double a = profile.alpha[route.nodes[static_cast<std::size_t>(k)]];
    u = (1.0 - a) * params.gain.value(k) + a * (u - params.forwarding_cost);
  }
  return u;  // position 0 shares the successor's position-1 value
}

double total_utility(NodeId node, const Scenario& scenario,
                     const StrategyProfile& profile, const GameParams& params) {
  if (node >= scenario.num_nodes) {
    throw std::invalid_argument("total_utility: node outside the scenario");
  }
  double sum = 0.0;
  for (const Route& r : scenario.routes) {
    for (std::size_t k = 0; k < r.nodes.size(); ++k) {
      if (r.nodes[k] == node) {
        sum += route_utility(r, static_cast<int>(k), profile, params);
        break;  // nodes are distinct within a route
      }
    }
  }
  return sum;
}

namespace {

// (route index, position) pairs per node, so the deviation scan only
// re-evaluates routes the node actually sits on.
std::vector<std::vector<std::pair<std::uint32_t, int>>> node_positions(
    const Scenario& scenario) {
  std::vector<std::vector<std::pair<std::uint32_t, int>>> idx(scenario.num_nodes);
  for (std::uint32_t ri = 0; ri < scenario.routes.size(); ++ri) {
    const Route& r = scenario.routes[ri];
    for (std::size_t k = 0; k < r.nodes.size(); ++k) {
      idx[r.nodes[k]].emplace_back(ri, static_cast<int>(k));
    }
  }
  return idx;
}

std::vector<double> deviation_grid(double grid_step) {
  std::vector<double> grid;
  for (double v = 0.0; v < 1.0 - 1e-12; v += grid_step) grid.push_back(v);
  grid.push_back(1.0);
  return grid;
}

}  // namespace

NashReport check_nash(const Scenario& scenario, const StrategyProfile& profile,
                      const GameParams& params, double grid_step,
                      double tolerance, ExecMode mode) {
  if (!(grid_step > 0.0) || grid_step > 0.5) {
    throw std::invalid_argument("check_nash: grid_step must be in (0, 0.5]");
  }
  if (tolerance < 0.0) {
    throw std::invalid_argument("check_nash: tolerance must be >= 0");
  }

  const auto positions = node_positions(scenario);
  const auto grid = deviation_grid(grid_step);
  const auto n = static_cast<std::int64_t>(scenario.num_nodes);

  struct Best {
    bool found = false;
    double alpha = 0.0;
    double gain = 0.0;
  };
  std::vector<Best> best(scenario.num_nodes);

  auto scan_node = [&](NodeId node, StrategyProfile& scratch) {
    const auto& on = positions[node];
    if (on.empty()) return;
    auto eval = [&](const StrategyProfile& p) {
      double sum = 0.0;
      for (const auto& [ri, pos] : on) {
        sum += route_utility(scenario.routes[ri], pos, p, params);
      }
      return sum;
    };
    const double base = eval(scratch);
    const double original = scratch.alpha[node];
    Best b;
    for (double candidate : grid) {
      scratch.alpha[node] = candidate;
      const double gain = eval(scratch) - base;
      if (gain > tolerance && (!b.found || gain > b.gain)) {
        b = {true, candidate, gain};
      }
    }
    scratch.alpha[node] = original;
    best[node] = b;
  };

  if (mode == ExecMode::Parallel) {
#pragma omp parallel
    {
      StrategyProfile scratch = profile;
#pragma omp for schedule(dynamic, 8)
      for (std::int64_t i = 0; i < n; ++i) {
        scan_node(static_cast<NodeId>(i), scratch);
      }
    }
  } else {
    StrategyProfile scratch = profile;
    for (std::int64_t i = 0; i < n; ++i) {
      scan_node(static_cast<NodeId>(i), scratch);
    }
  }

  NashReport report;
  for (NodeId id = 0; id < scenario.num_nodes; ++id) {
    if (best[id].found) {
      report.is_nash = false;
      report.best_deviations[id] = {best[id].alpha, best[id].gain};
    }
  }
  return report;
}

}  // namespace wlsim
