#include "wlsim/engine.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <utility>

#include "wlsim/baselines.hpp"
#include "wlsim/metrics.hpp"

namespace wlsim {

PunishmentRegistry::PunishmentRegistry(int duration) : duration_(duration) {
  if (duration < 1) {
    throw std::invalid_argument("PunishmentRegistry: duration must be >= 1");
  }
}

void PunishmentRegistry::begin_step(long step) {
  if (step < step_) {
    throw std::invalid_argument("PunishmentRegistry: step clock must not go back");
  }
  step_ = step;
  std::erase_if(active_, [step](const auto& kv) { return kv.second < step; });
}

void PunishmentRegistry::punish(NodeId punisher, NodeId punished) {
  active_[{punisher, punished}] = step_ + duration_;
}

bool PunishmentRegistry::blocks(NodeId punisher, NodeId punished) const {
  auto it = active_.find({punisher, punished});
  if (it == active_.end()) return false;
  // The window opens the step after the entry was issued.
  return step_ > it->second - duration_ && step_ <= it->second;
}

int PunishmentRegistry::remaining(NodeId punisher, NodeId punished) const {
  auto it = active_.find({punisher, punished});
  if (it == active_.end() || it->second < step_) return 0;
  return static_cast<int>(
      std::min<long>(duration_, it->second - step_ + 1));
}

bool decide_forward(NodeId node, NodeId next_hop, bool is_source,
                    const NodeState& state, const PunishmentRegistry& registry,
                    SplitMix64& rng) {
  if (registry.blocks(node, next_hop)) return false;
  if (is_source) return true;
  return rng.next_bernoulli(state.alpha);
}

PacketOutcome transmit_packet(const Route& route, std::uint32_t route_index,
                              const std::vector<NodeState>& states,
                              const PunishmentRegistry& registry,
                              SplitMix64& rng) {
  PacketOutcome out;
  out.route_index = route_index;
  const int hops = route.hop_count();
  for (int k = 0; k < hops; ++k) {
    const NodeId node = route.nodes[static_cast<std::size_t>(k)];
    const NodeId next = route.nodes[static_cast<std::size_t>(k) + 1];
    if (!decide_forward(node, next, k == 0, states[node], registry, rng)) {
      out.break_position = k;
      if (registry.blocks(node, next)) {
        out.punishment_drops.emplace_back(node, next);
      }
      return out;
    }
    if (k > 0) out.forwards_performed.push_back(node);
  }
  out.break_position = hops;
  out.delivered = true;
  return out;
}

std::vector<std::pair<NodeId, double>> settle_rewards(
    const PacketOutcome& outcome, const Route& route, const GameParams& params,
    std::vector<NodeState>& states) {
  std::vector<std::pair<NodeId, double>> deltas;
  const int b = outcome.break_position;
  if (b > 0) {
    const double gain = params.gain.value(b);
    for (int k = 0; k <= b; ++k) {
      const NodeId node = route.nodes[static_cast<std::size_t>(k)];
      double d = gain;
      if (k > 0 && k < b) d -= params.forwarding_cost;
      deltas.emplace_back(node, d);
    }
  }
  for (auto& [node, d] : deltas) states[node].current_utility += d;
  return deltas;
}

void detect_and_punish(StepEvents& events, const Scenario& scenario,
                       PunishmentRegistry& registry,
                       std::vector<NodeState>& states, StrategyKind strategy,
                       bool punish_banking,
                       const std::vector<std::vector<NodeId>>& successors) {
  const long until = registry.current_step() + registry.duration();
  std::set<std::pair<NodeId, NodeId>> fresh;
  auto issue = [&](NodeId punisher, NodeId punished) {
    registry.punish(punisher, punished);
    states[punished].punished_until[punisher] = until;
    if (fresh.insert({punisher, punished}).second) {
      events.new_punishments.emplace_back(punisher, punished);
    }
  };
  const bool announced = announces_punishment(strategy);
  for (const PacketOutcome& out : events.outcomes) {
    if (out.delivered) continue;
    const Route& route = scenario.routes[out.route_index];
    const int b = out.break_position;
    if (b == 0) continue;  // the source itself held the packet, nobody upstream to react
    const NodeId observer = route.nodes[static_cast<std::size_t>(b) - 1];
    const NodeId dropper = route.nodes[static_cast<std::size_t>(b)];
    if (!out.punishment_drops.empty()) {
      // A disciplinary drop. When announced the observer stands down.
      if (announced) {
        events.notifications.emplace_back(dropper, observer);
        continue;
      }
    } else if (!punish_banking) {
      continue;
    }
    for (NodeId target : punishment_targets(strategy, observer, dropper, successors)) {
      issue(observer, target);
    }
  }
}

void apply_learning_update(NodeState& state) {
  if (state.punished()) {
    state.alpha = std::min(1.0, state.alpha + state.epsilon);
  } else {
    const double delta = state.current_utility - state.last_utility;
    state.alpha = std::clamp(state.alpha + state.lambda * delta, 0.0, 1.0);
  }
  state.last_utility = state.current_utility;
  state.current_utility = 0.0;
}

Simulation::Simulation(Scenario scenario, GameParams params,
                       LearningConfig learn, StrategyKind strategy,
                       std::uint64_t seed, ExecMode mode)
    : scenario_(std::move(scenario)),
      params_(params),
      learn_(learn),
      strategy_(strategy),
      seed_(seed),
      mode_(mode),
      registry_(learn.punish_duration) {
  if (learn_.lambda < 0.0) {
    throw std::invalid_argument("Simulation: lambda must be >= 0");
  }
  if (!(learn_.epsilon > 0.0) || learn_.epsilon > 1.0) {
    throw std::invalid_argument("Simulation: epsilon must be in (0, 1]");
  }
  if (learn_.init_alpha < 0.0 || learn_.init_alpha > 1.0) {
    throw std::invalid_argument("Simulation: init_alpha must be in [0, 1]");
  }
  NodeState init;
  init.alpha = learn_.init_alpha;
  init.lambda = learn_.lambda;
  init.epsilon = learn_.epsilon;
  states_.assign(scenario_.num_nodes, init);
  successors_ = successors_by_node(scenario_);
}

const StepEvents& Simulation::step() {
  const long t = registry_.current_step() + 1;
  registry_.begin_step(t);
  for (NodeState& st : states_) {
    std::erase_if(st.punished_until,
                  [t](const auto& kv) { return kv.second < t; });
  }

  events_.step = t;
  events_.outcomes.assign(scenario_.routes.size(), PacketOutcome{});
  events_.new_punishments.clear();
  events_.notifications.clear();

  const auto n_routes = static_cast<std::int64_t>(scenario_.routes.size());
  if (mode_ == ExecMode::Parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t r = 0; r < n_routes; ++r) {
      SplitMix64 rng(substream_seed(seed_, static_cast<std::uint64_t>(t),
                                    static_cast<std::uint64_t>(r)));
      events_.outcomes[static_cast<std::size_t>(r)] =
          transmit_packet(scenario_.routes[static_cast<std::size_t>(r)],
                          static_cast<std::uint32_t>(r), states_, registry_, rng);
    }
  } else {
    for (std::int64_t r = 0; r < n_routes; ++r) {
      SplitMix64 rng(substream_seed(seed_, static_cast<std::uint64_t>(t),
                                    static_cast<std::uint64_t>(r)));
      events_.outcomes[static_cast<std::size_t>(r)] =
          transmit_packet(scenario_.routes[static_cast<std::size_t>(r)],
                          static_cast<std::uint32_t>(r), states_, registry_, rng);
    }
  }

  for (const PacketOutcome& out : events_.outcomes) {
    settle_rewards(out, scenario_.routes[out.route_index], params_, states_);
  }

  detect_and_punish(events_, scenario_, registry_, states_, strategy_,
                    learn_.punish_banking, successors_);

  if (strategy_ == StrategyKind::PandanaStyle) {
    for (NodeState& st : states_) pandana_style_update(st);
  } else {
    for (NodeState& st : states_) apply_learning_update(st);
  }
  return events_;
}

MetricsSeries run(const Scenario& scenario, const GameParams& params,
                  const LearningConfig& learn, long steps, std::uint64_t seed,
                  StrategyKind strategy, ExecMode mode) {
  if (steps < 1) throw std::invalid_argument("run: steps must be >= 1");
  if (auto violations = validate(scenario); !violations.empty()) {
    throw std::invalid_argument("run: invalid scenario: " +
                                violations.front().detail);
  }
  Simulation sim(scenario, params, learn, strategy, seed, mode);
  MetricsAccumulator acc(scenario);
  for (long t = 0; t < steps; ++t) {
    acc.observe_step(sim.step(), sim.states());
  }
  return acc.series();
}

}  // namespace wlsim
