#pragma once

#include <map>
#include <vector>

#include "wlsim/topology.hpp"

namespace wlsim {

enum class ExecMode { Serial, Parallel };

// Chain-length to currency mapping: a chain that reached position n banked
// n-1 successful transmissions, worth increment * (n-1). Linear is the only
// schedule the experiments use; the increment is the abstraction point.
struct GainSchedule {
  double increment = 1.0;

  // C[n] for chain position n >= 1 (C[1] = 0).
  double value(int n) const;

  bool operator==(const GainSchedule&) const = default;
};

struct GameParams {
  double forwarding_cost = 3.0;  // F, charged per forward performed
  GainSchedule gain;

  bool operator==(const GameParams&) const = default;
};

// Forwarding probability per node; the saving probability is 1 - alpha.
struct StrategyProfile {
  std::vector<double> alpha;  // indexed by NodeId

  static StrategyProfile uniform(std::uint32_t num_nodes, double alpha);
};

// Expected utility of the node at chain position n of the route, evaluated
// by backward induction from the destination:
//   U(N) = C[N]
//   U(k) = (1 - alpha_k) * C[k] + alpha_k * (U(k+1) - F)   for 0 < k < N
//   U(0) = U(1)                                  (the source sends w.p. 1)
double route_utility(const Route& route, int position,
                     const StrategyProfile& profile, const GameParams& params);

// Sum of route_utility over every route containing the node, at the node's
// position in each. A node on no route has utility 0.
double total_utility(NodeId node, const Scenario& scenario,
                     const StrategyProfile& profile, const GameParams& params);

struct NashDeviation {
  double alpha;  // best improving unilateral strategy found
  double gain;   // total-utility improvement it yields

  bool operator==(const NashDeviation&) const = default;
};

struct NashReport {
  bool is_nash = true;
  std::map<NodeId, NashDeviation> best_deviations;

  bool operator==(const NashReport&) const = default;
};

// Scans unilateral deviations alpha_i in {0, grid_step, 2*grid_step, ..., 1}
// for every node; the profile is an equilibrium iff no deviation improves
// the deviating node's total utility by more than tolerance.
NashReport check_nash(const Scenario& scenario, const StrategyProfile& profile,
                      const GameParams& params, double grid_step,
                      double tolerance, ExecMode mode = ExecMode::Serial);

}  // namespace wlsim
