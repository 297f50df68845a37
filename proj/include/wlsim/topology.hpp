#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wlsim {

using NodeId = std::uint32_t;

// An ordered node sequence from source to destination; the unit over which
// forwarding chains form.
struct Route {
  std::vector<NodeId> nodes;  // source first, destination last

  int hop_count() const { return static_cast<int>(nodes.size()) - 1; }
  int forwarder_count() const { return static_cast<int>(nodes.size()) - 2; }
  NodeId source() const { return nodes.front(); }
  NodeId destination() const { return nodes.back(); }

  bool operator==(const Route&) const = default;
};

enum class ScenarioKind { Ring, Random };

struct Scenario {
  std::uint32_t num_nodes = 0;
  ScenarioKind kind = ScenarioKind::Random;
  std::vector<Route> routes;

  bool operator==(const Scenario&) const = default;
};

// Uniform integer distribution over [min, max] for the number of forwarders
// (intermediate nodes) per generated route. min == max pins the count.
struct ForwarderCountRange {
  int min = 3;
  int max = 6;

  double mean() const { return 0.5 * (min + max); }

  bool operator==(const ForwarderCountRange&) const = default;
};

// Ring of num_nodes nodes, one route per node: source i reaches destination
// (i + hops) mod num_nodes through the consecutive intermediates. Every node
// is a source once, a destination once and an intermediate hops-1 times.
Scenario generate_ring(int num_nodes, int hops);

// num_pairs routes over num_nodes nodes, each route a uniformly drawn
// sequence of distinct nodes whose forwarder count is drawn from counts.
// Pure function of its arguments: the same seed reproduces the route set.
Scenario generate_random(int num_nodes, int num_pairs,
                         ForwarderCountRange counts, std::uint64_t seed);

struct Violation {
  enum class Kind {
    RouteTooShort,
    DuplicateNode,
    UnknownNode,
    RingLengthMismatch,
    RingRoleCount,
  };
  Kind kind;
  std::uint32_t route_index;  // route-scoped kinds; node id for RingRoleCount
  std::string detail;
};

// Structural checks; returns one record per breach instead of throwing.
std::vector<Violation> validate(const Scenario& scenario);

// Flat key-value serialization (scenario.kind / scenario.nodes / route.K
// lines); see the config file documentation for the schema.
std::string to_text(const Scenario& scenario);
Scenario scenario_from_text(const std::string& text);

// Successor sets per node over all routes, deduplicated and sorted.
std::vector<std::vector<NodeId>> successors_by_node(const Scenario& scenario);

// participating[id] is true when the node appears on at least one route.
std::vector<bool> participating_nodes(const Scenario& scenario);

}  // namespace wlsim
