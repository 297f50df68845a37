#include "property_suites.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "wlsim/baselines.hpp"
#include "wlsim/engine.hpp"
#include "wlsim/rng.hpp"
#include "wlsim/topology.hpp"

namespace wlsim::props {

namespace {

long pick(SplitMix64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng.next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
}

Scenario random_scenario(SplitMix64& rng) {
  if (rng.next_u64() % 2 == 0) {
    const int nodes = static_cast<int>(pick(rng, 4, 14));
    const int hops = static_cast<int>(pick(rng, 1, std::min(nodes - 1, 5)));
    return generate_ring(nodes, hops);
  }
  const int nodes = static_cast<int>(pick(rng, 5, 14));
  const int pairs = static_cast<int>(pick(rng, 3, 12));
  const int min_fwd = static_cast<int>(pick(rng, 0, 2));
  const int max_fwd = static_cast<int>(pick(rng, min_fwd, nodes - 2));
  return generate_random(nodes, pairs, {min_fwd, max_fwd}, rng.next_u64());
}

StrategyKind random_strategy(SplitMix64& rng) {
  switch (rng.next_u64() % 3) {
    case 0: return StrategyKind::WeakestLink;
    case 1: return StrategyKind::HanStyle;
    default: return StrategyKind::PandanaStyle;
  }
}

LearningConfig random_learn(SplitMix64& rng, bool wild_lambda) {
  LearningConfig learn;
  learn.lambda = (wild_lambda ? 5.0 : 0.1) * rng.next_double();
  learn.epsilon = 0.001 + 0.999 * rng.next_double();
  learn.punish_duration = static_cast<int>(pick(rng, 1, 5));
  learn.init_alpha = rng.next_double();
  learn.punish_banking = rng.next_u64() % 4 != 0;
  return learn;
}

GameParams random_params(SplitMix64& rng) {
  GameParams params;
  params.gain.increment = 0.25 + 2.0 * rng.next_double();
  params.forwarding_cost = 5.0 * rng.next_double();
  return params;
}

GameParams exact_params(SplitMix64& rng) {
  static const double gains[] = {0.5, 1.0, 2.0};
  static const double costs[] = {0.0, 1.0, 3.0, 5.5};
  GameParams params;
  params.gain.increment = gains[rng.next_u64() % 3];
  params.forwarding_cost = costs[rng.next_u64() % 4];
  return params;
}

std::string describe(long case_index, const std::string& what) {
  std::ostringstream out;
  out << "case " << case_index << ": " << what;
  return out.str();
}

void record(SuiteResult& result, long case_index, const std::string& what) {
  ++result.failures;
  if (result.detail.empty()) result.detail = describe(case_index, what);
}

}  // namespace

SuiteResult alpha_clamping(long cases, std::uint64_t seed) {
  SuiteResult result;
  SplitMix64 gen(seed);
  for (long c = 0; c < cases; ++c) {
    ++result.cases;
    const Scenario scenario = random_scenario(gen);
    const GameParams params = random_params(gen);
    const LearningConfig learn = random_learn(gen, true);
    Simulation sim(scenario, params, learn, random_strategy(gen),
                   gen.next_u64());
    const long steps = pick(gen, 3, 10);
    bool bad = false;
    for (long s = 0; s < steps && !bad; ++s) {
      sim.step();
      for (std::size_t n = 0; n < sim.states().size(); ++n) {
        const double a = sim.states()[n].alpha;
        if (!(a >= 0.0 && a <= 1.0)) {
          std::ostringstream what;
          what << "alpha[" << n << "] = " << a << " after step " << s + 1
               << " (lambda " << learn.lambda << ")";
          record(result, c, what.str());
          bad = true;
          break;
        }
      }
    }
  }
  return result;
}

SuiteResult settlement_conservation(long cases, std::uint64_t seed) {
  SuiteResult result;
  SplitMix64 gen(seed);
  for (long c = 0; c < cases; ++c) {
    ++result.cases;
    const Scenario scenario = random_scenario(gen);
    const GameParams params = exact_params(gen);
    LearningConfig learn = random_learn(gen, false);
    Simulation sim(scenario, params, learn, random_strategy(gen),
                   gen.next_u64());
    const long steps = pick(gen, 3, 8);
    bool bad = false;
    for (long s = 0; s < steps && !bad; ++s) {
      const StepEvents& events = sim.step();
      std::map<NodeId, double> expected;
      for (const PacketOutcome& out : events.outcomes) {
        const Route& route = scenario.routes[out.route_index];
        const int b = out.break_position;
        if (b < 1) continue;
        const double gain = params.gain.value(b);
        for (int k = 0; k <= b; ++k) expected[route.nodes[k]] += gain;
        for (NodeId fwd : out.forwards_performed) {
          expected[fwd] -= params.forwarding_cost;
        }
      }
      for (std::size_t n = 0; n < sim.states().size(); ++n) {
        const double want = expected.count(static_cast<NodeId>(n))
                                ? expected[static_cast<NodeId>(n)]
                                : 0.0;
        if (sim.states()[n].last_utility != want) {
          std::ostringstream what;
          what << "node " << n << " settled " << sim.states()[n].last_utility
               << ", outcomes imply " << want << " at step " << s + 1;
          record(result, c, what.str());
          bad = true;
          break;
        }
      }
    }
  }
  return result;
}

SuiteResult punished_edge_blocking(long cases, std::uint64_t seed) {
  SuiteResult result;
  SplitMix64 gen(seed);
  for (long c = 0; c < cases; ++c) {
    ++result.cases;
    const Scenario scenario = random_scenario(gen);
    const GameParams params = random_params(gen);
    const LearningConfig learn = random_learn(gen, false);
    Simulation sim(scenario, params, learn, random_strategy(gen),
                   gen.next_u64());
    std::map<std::pair<NodeId, NodeId>, long> window;  // -> last blocked step
    const long steps = pick(gen, 4, 10);
    bool bad = false;
    for (long s = 0; s < steps && !bad; ++s) {
      const StepEvents& events = sim.step();
      const long t = events.step;
      std::erase_if(window, [t](const auto& e) { return e.second < t; });
      const auto blocked = [&](NodeId a, NodeId b) {
        return window.count({a, b}) != 0;
      };
      for (const PacketOutcome& out : events.outcomes) {
        const Route& route = scenario.routes[out.route_index];
        const int b = out.break_position;
        for (int k = 0; k < b && !bad; ++k) {
          if (blocked(route.nodes[k], route.nodes[k + 1])) {
            record(result, c, "a transmission crossed a blocked edge");
            bad = true;
          }
        }
        if (bad) break;
        if (!out.delivered) {
          const std::pair<NodeId, NodeId> edge{route.nodes[b],
                                               route.nodes[b + 1]};
          if (blocked(edge.first, edge.second)) {
            if (out.punishment_drops !=
                std::vector<std::pair<NodeId, NodeId>>{edge}) {
              record(result, c, "a blocked break was not recorded as a drop");
              bad = true;
            }
          } else if (!out.punishment_drops.empty()) {
            record(result, c, "a drop was recorded on an unblocked edge");
            bad = true;
          }
        } else if (!out.punishment_drops.empty()) {
          record(result, c, "a delivered packet carries punishment drops");
          bad = true;
        }
      }
      for (const auto& p : events.new_punishments) {
        window[p] = t + learn.punish_duration;
      }
      if (!bad && sim.registry().active() != window) {
        record(result, c, "registry content diverged from the window table");
        bad = true;
      }
    }
  }
  return result;
}

SuiteResult punishment_scope(long cases, std::uint64_t seed) {
  SuiteResult result;
  SplitMix64 gen(seed);
  for (long c = 0; c < cases; ++c) {
    ++result.cases;
    const Scenario scenario = random_scenario(gen);
    const GameParams params = random_params(gen);
    const LearningConfig learn = random_learn(gen, false);
    const StrategyKind strategy = random_strategy(gen);
    const auto successors = successors_by_node(scenario);
    Simulation sim(scenario, params, learn, strategy, gen.next_u64());
    const long steps = pick(gen, 3, 8);
    bool bad = false;
    for (long s = 0; s < steps && !bad; ++s) {
      const StepEvents& events = sim.step();
      std::set<std::pair<NodeId, NodeId>> expected;
      std::vector<std::pair<NodeId, NodeId>> expected_notes;
      for (const PacketOutcome& out : events.outcomes) {
        if (out.delivered || out.break_position < 1) continue;
        const Route& route = scenario.routes[out.route_index];
        const NodeId observer = route.nodes[out.break_position - 1];
        const NodeId refuser = route.nodes[out.break_position];
        const bool was_drop = !out.punishment_drops.empty();
        if (was_drop && announces_punishment(strategy)) {
          expected_notes.emplace_back(refuser, observer);
          continue;
        }
        if (!was_drop && !learn.punish_banking) continue;
        if (strategy == StrategyKind::HanStyle) {
          for (NodeId succ : successors[observer]) {
            expected.emplace(observer, succ);
          }
          expected.emplace(observer, refuser);
        } else {
          expected.emplace(observer, refuser);
        }
      }
      const std::set<std::pair<NodeId, NodeId>> actual(
          events.new_punishments.begin(), events.new_punishments.end());
      if (actual != expected) {
        record(result, c, "punishments do not match the strategy scope");
        bad = true;
      }
      if (events.notifications != expected_notes) {
        record(result, c, "notifications do not match the announced drops");
        bad = true;
      }
      if (!bad) {
        for (const auto& [punisher, punished] : events.new_punishments) {
          const auto& until = sim.states()[punished].punished_until;
          const auto it = until.find(punisher);
          if (it == until.end() ||
              it->second != events.step + learn.punish_duration) {
            record(result, c, "a punished node is missing its window mirror");
            bad = true;
            break;
          }
        }
      }
    }
  }
  return result;
}

SuiteResult pandana_monotonicity(long cases, std::uint64_t seed) {
  SuiteResult result;
  SplitMix64 gen(seed);
  for (long c = 0; c < cases; ++c) {
    ++result.cases;
    const Scenario scenario = random_scenario(gen);
    const GameParams params = random_params(gen);
    const LearningConfig learn = random_learn(gen, false);
    Simulation sim(scenario, params, learn, StrategyKind::PandanaStyle,
                   gen.next_u64());
    const long steps = pick(gen, 3, 10);
    std::vector<double> before(sim.states().size(), learn.init_alpha);
    bool bad = false;
    for (long s = 0; s < steps && !bad; ++s) {
      sim.step();
      for (std::size_t n = 0; n < sim.states().size(); ++n) {
        if (sim.states()[n].alpha < before[n]) {
          std::ostringstream what;
          what << "alpha[" << n << "] fell from " << before[n] << " to "
               << sim.states()[n].alpha << " at step " << s + 1;
          record(result, c, what.str());
          bad = true;
          break;
        }
        before[n] = sim.states()[n].alpha;
      }
    }
  }
  return result;
}

}  // namespace wlsim::props
