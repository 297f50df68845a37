#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "wlsim/game.hpp"
#include "wlsim/rng.hpp"
#include "wlsim/topology.hpp"

namespace wlsim {

enum class StrategyKind;  // defined in baselines.hpp
struct MetricsSeries;     // defined in metrics.hpp

struct LearningConfig {
  double lambda = 0.01;      // sensitivity of the utility-proportional update
  double epsilon = 0.05;     // recovery step while punished
  int punish_duration = 3;   // T, in steps
  double init_alpha = 0.0;
  bool punish_banking = true;  // false exempts probabilistic banks entirely

  bool operator==(const LearningConfig&) const = default;
};

struct NodeState {
  double alpha = 0.0;
  double last_utility = 0.0;     // realized utility settled in the previous step
  double current_utility = 0.0;  // accumulator for the step in progress
  double lambda = 0.01;
  double epsilon = 0.05;
  // punisher -> last step index whose transmissions it blocks; purged once
  // the step index passes that value.
  std::map<NodeId, long> punished_until;

  bool punished() const { return !punished_until.empty(); }
};

// Active (punisher, punished) forwarding overrides. An entry issued at step
// s blocks the punisher's forwarding toward the punished node during steps
// s+1 .. s+T; the victim counts as punished for the learning update from
// the issuing step until the window ends. Re-offense re-arms the window.
class PunishmentRegistry {
 public:
  explicit PunishmentRegistry(int duration);

  // Advances the clock to `step` and drops entries whose window has ended.
  void begin_step(long step);
  // Issues or refreshes an override at the current step.
  void punish(NodeId punisher, NodeId punished);
  // True when the override suppresses a transmission at the current step.
  bool blocks(NodeId punisher, NodeId punished) const;
  // Blocked steps still ahead (including the current one); in [1, duration]
  // for a live entry, 0 when absent or ended.
  int remaining(NodeId punisher, NodeId punished) const;

  int duration() const { return duration_; }
  long current_step() const { return step_; }
  const std::map<std::pair<NodeId, NodeId>, long>& active() const {
    return active_;
  }

 private:
  int duration_;
  long step_ = 0;
  std::map<std::pair<NodeId, NodeId>, long> active_;  // -> last blocked step
};

struct PacketOutcome {
  std::uint32_t route_index = 0;
  int break_position = 0;  // chain index where forwarding stopped; == hop_count when delivered
  bool delivered = false;
  std::vector<NodeId> forwards_performed;  // forwarding intermediates, route order
  // (punisher, punished) override behind the break, when the break was one.
  std::vector<std::pair<NodeId, NodeId>> punishment_drops;
};

struct StepEvents {
  long step = 0;
  std::vector<PacketOutcome> outcomes;  // one per route, route order
  std::vector<std::pair<NodeId, NodeId>> new_punishments;
  std::vector<std::pair<NodeId, NodeId>> notifications;  // (punisher, its predecessor)
};

// One forwarding decision. Overrides in the registry win; otherwise the
// source transmits with certainty and an intermediate draws Bernoulli(alpha).
bool decide_forward(NodeId node, NodeId next_hop, bool is_source,
                    const NodeState& state, const PunishmentRegistry& registry,
                    SplitMix64& rng);

// Walks one packet from the source until the first refusal or delivery.
PacketOutcome transmit_packet(const Route& route, std::uint32_t route_index,
                              const std::vector<NodeState>& states,
                              const PunishmentRegistry& registry,
                              SplitMix64& rng);

// Settlement rule: with b = break_position, the route nodes at chain
// positions 0..b each collect C[b] (zero-length chains collect nothing) and
// every forwarding intermediate is charged the forwarding cost. Deltas
// accumulate into current_utility.
std::vector<std::pair<NodeId, double>> settle_rewards(
    const PacketOutcome& outcome, const Route& route, const GameParams& params,
    std::vector<NodeState>& states);

// Scans the step's outcomes for un-notified refusals and issues punishments
// according to the strategy's scope (targeted, or every successor of the
// observer for the Han-style baseline). Appends new_punishments and
// notifications to the events.
void detect_and_punish(StepEvents& events, const Scenario& scenario,
                       PunishmentRegistry& registry,
                       std::vector<NodeState>& states, StrategyKind strategy,
                       bool punish_banking,
                       const std::vector<std::vector<NodeId>>& successors);

// The self-learning rule: a punished node raises alpha by its epsilon step;
// otherwise alpha moves by lambda times the step-over-step utility change,
// clamped to [0, 1]. Rotates the utility accumulators afterwards.
void apply_learning_update(NodeState& state);

// One run of the repeated game. Step phases: advance/purge the registry,
// transmit one packet per route and settle it, detect and punish, then the
// per-node learning update. Identical inputs (including seed and either
// execution mode) yield identical results.
class Simulation {
 public:
  Simulation(Scenario scenario, GameParams params, LearningConfig learn,
             StrategyKind strategy, std::uint64_t seed,
             ExecMode mode = ExecMode::Serial);

  const StepEvents& step();

  long current_step() const { return registry_.current_step(); }
  const Scenario& scenario() const { return scenario_; }
  const GameParams& params() const { return params_; }
  const std::vector<NodeState>& states() const { return states_; }
  const PunishmentRegistry& registry() const { return registry_; }
  const StepEvents& last_events() const { return events_; }

 private:
  Scenario scenario_;
  GameParams params_;
  LearningConfig learn_;
  StrategyKind strategy_;
  std::uint64_t seed_;
  ExecMode mode_;
  std::vector<NodeState> states_;
  PunishmentRegistry registry_;
  std::vector<std::vector<NodeId>> successors_;
  StepEvents events_;
};

MetricsSeries run(const Scenario& scenario, const GameParams& params,
                  const LearningConfig& learn, long steps, std::uint64_t seed,
                  StrategyKind strategy, ExecMode mode = ExecMode::Serial);

}  // namespace wlsim
