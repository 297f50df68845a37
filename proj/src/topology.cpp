#include "wlsim/topology.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace wlsim {

Scenario generate_ring(int num_nodes, int hops) {
  if (hops < 1) {
    throw std::invalid_argument("generate_ring: hops must be >= 1");
  }
  if (num_nodes <= hops) {
    throw std::invalid_argument(
        "generate_ring: num_nodes must exceed hops (need num_nodes >= hops + 1)");
  }
  Scenario s;
  s.num_nodes = static_cast<std::uint32_t>(num_nodes);
  s.kind = ScenarioKind::Ring;
  s.routes.reserve(static_cast<std::size_t>(num_nodes));
  for (int i = 0; i < num_nodes; ++i) {
    Route r;
    r.nodes.reserve(static_cast<std::size_t>(hops) + 1);
    for (int k = 0; k <= hops; ++k) {
      r.nodes.push_back(static_cast<NodeId>((i + k) % num_nodes));
    }
    s.routes.push_back(std::move(r));
  }
  return s;
}

Scenario generate_random(int num_nodes, int num_pairs,
                         ForwarderCountRange counts, std::uint64_t seed) {
  if (num_nodes < 3) {
    throw std::invalid_argument("generate_random: num_nodes must be >= 3");
  }
  if (num_pairs < 0) {
    throw std::invalid_argument("generate_random: num_pairs must be >= 0");
  }
  if (counts.min < 0 || counts.min > counts.max) {
    throw std::invalid_argument(
        "generate_random: forwarder count range must satisfy 0 <= min <= max");
  }
  if (counts.max + 2 > num_nodes) {
    throw std::invalid_argument(
        "generate_random: longest drawable route exceeds the node count");
  }

  Scenario s;
  s.num_nodes = static_cast<std::uint32_t>(num_nodes);
  s.kind = ScenarioKind::Random;
  s.routes.reserve(static_cast<std::size_t>(num_pairs));

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> count_dist(counts.min, counts.max);
  std::vector<NodeId> pool(static_cast<std::size_t>(num_nodes));
  std::iota(pool.begin(), pool.end(), NodeId{0});

  for (int p = 0; p < num_pairs; ++p) {
    const int len = count_dist(rng) + 2;
    // Partial Fisher-Yates over the pool: the first len entries are a
    // uniform sample of distinct nodes in uniform order.
    for (int j = 0; j < len; ++j) {
      std::uniform_int_distribution<int> pick(j, num_nodes - 1);
      std::swap(pool[static_cast<std::size_t>(j)],
                pool[static_cast<std::size_t>(pick(rng))]);
    }
    Route r;
    r.nodes.assign(pool.begin(), pool.begin() + len);
    s.routes.push_back(std::move(r));
  }
  return s;
}

std::vector<Violation> validate(const Scenario& scenario) {
  std::vector<Violation> out;
  for (std::uint32_t ri = 0; ri < scenario.routes.size(); ++ri) {
    const Route& r = scenario.routes[ri];
    if (r.nodes.size() < 2) {
      out.push_back({Violation::Kind::RouteTooShort, ri,
                     "route " + std::to_string(ri) + " has fewer than 2 nodes"});
      continue;
    }
    std::unordered_set<NodeId> seen;
    for (NodeId id : r.nodes) {
      if (id >= scenario.num_nodes) {
        out.push_back({Violation::Kind::UnknownNode, ri,
                       "route " + std::to_string(ri) + " references node " +
                           std::to_string(id) + " outside the scenario"});
      }
      if (!seen.insert(id).second) {
        out.push_back({Violation::Kind::DuplicateNode, ri,
                       "route " + std::to_string(ri) + " visits node " +
                           std::to_string(id) + " more than once"});
      }
    }
  }

  if (scenario.kind == ScenarioKind::Ring && out.empty()) {
    // All routes share one length; every node is a source exactly once, a
    // destination exactly once and an intermediate exactly hops-1 times.
    if (scenario.routes.empty()) {
      out.push_back({Violation::Kind::RingRoleCount, 0,
                     "ring scenario has no routes"});
      return out;
    }
    const std::size_t len = scenario.routes.front().nodes.size();
    for (std::uint32_t ri = 0; ri < scenario.routes.size(); ++ri) {
      if (scenario.routes[ri].nodes.size() != len) {
        out.push_back({Violation::Kind::RingLengthMismatch, ri,
                       "route " + std::to_string(ri) +
                           " length differs from route 0"});
      }
    }
    if (!out.empty()) return out;

    const int hops = static_cast<int>(len) - 1;
    std::vector<int> as_source(scenario.num_nodes, 0);
    std::vector<int> as_destination(scenario.num_nodes, 0);
    std::vector<int> as_intermediate(scenario.num_nodes, 0);
    for (const Route& r : scenario.routes) {
      ++as_source[r.source()];
      ++as_destination[r.destination()];
      for (std::size_t k = 1; k + 1 < r.nodes.size(); ++k) {
        ++as_intermediate[r.nodes[k]];
      }
    }
    for (NodeId id = 0; id < scenario.num_nodes; ++id) {
      if (as_source[id] != 1 || as_destination[id] != 1 ||
          as_intermediate[id] != hops - 1) {
        std::ostringstream msg;
        msg << "node " << id << " role counts (source " << as_source[id]
            << ", destination " << as_destination[id] << ", intermediate "
            << as_intermediate[id] << ") differ from (1, 1, " << (hops - 1)
            << ")";
        out.push_back({Violation::Kind::RingRoleCount, id, msg.str()});
      }
    }
  }
  return out;
}

std::string to_text(const Scenario& scenario) {
  std::ostringstream os;
  os << "scenario.kind = "
     << (scenario.kind == ScenarioKind::Ring ? "ring" : "random") << "\n";
  os << "scenario.nodes = " << scenario.num_nodes << "\n";
  os << "scenario.routes = " << scenario.routes.size() << "\n";
  for (std::size_t ri = 0; ri < scenario.routes.size(); ++ri) {
    os << "route." << ri << " =";
    for (NodeId id : scenario.routes[ri].nodes) os << ' ' << id;
    os << "\n";
  }
  return os.str();
}

Scenario scenario_from_text(const std::string& text) {
  Scenario s;
  bool have_kind = false, have_nodes = false, have_count = false;
  std::size_t declared_routes = 0;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& what) {
    throw std::runtime_error("scenario text, line " + std::to_string(lineno) +
                             ": " + what);
  };
  while (std::getline(is, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;  // blank
    std::string eq;
    if (!(ls >> eq) || eq != "=") fail("expected 'key = value'");
    if (key == "scenario.kind") {
      std::string v;
      ls >> v;
      if (v == "ring") {
        s.kind = ScenarioKind::Ring;
      } else if (v == "random") {
        s.kind = ScenarioKind::Random;
      } else {
        fail("unknown scenario.kind '" + v + "'");
      }
      have_kind = true;
    } else if (key == "scenario.nodes") {
      long long n = -1;
      ls >> n;
      if (n < 0) fail("scenario.nodes must be a non-negative integer");
      s.num_nodes = static_cast<std::uint32_t>(n);
      have_nodes = true;
    } else if (key == "scenario.routes") {
      long long n = -1;
      ls >> n;
      if (n < 0) fail("scenario.routes must be a non-negative integer");
      declared_routes = static_cast<std::size_t>(n);
      have_count = true;
    } else if (key.rfind("route.", 0) == 0) {
      std::size_t idx = 0;
      try {
        idx = std::stoul(key.substr(6));
      } catch (const std::exception&) {
        fail("malformed route key '" + key + "'");
      }
      if (idx != s.routes.size()) fail("route keys must be consecutive from 0");
      Route r;
      long long id;
      while (ls >> id) {
        if (id < 0) fail("negative node id");
        r.nodes.push_back(static_cast<NodeId>(id));
      }
      if (r.nodes.size() < 2) fail("route needs at least 2 nodes");
      s.routes.push_back(std::move(r));
    } else {
      fail("unknown key '" + key + "'");
    }
  }
  if (!have_kind || !have_nodes || !have_count) {
    throw std::runtime_error(
        "scenario text: scenario.kind, scenario.nodes and scenario.routes are required");
  }
  if (declared_routes != s.routes.size()) {
    throw std::runtime_error("scenario text: scenario.routes = " +
                             std::to_string(declared_routes) + " but " +
                             std::to_string(s.routes.size()) + " routes given");
  }
  return s;
}

std::vector<std::vector<NodeId>> successors_by_node(const Scenario& scenario) {
  std::vector<std::vector<NodeId>> succ(scenario.num_nodes);
  for (const Route& r : scenario.routes) {
    for (std::size_t k = 0; k + 1 < r.nodes.size(); ++k) {
      succ[r.nodes[k]].push_back(r.nodes[k + 1]);
    }
  }
  for (auto& v : succ) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
  return succ;
}

std::vector<bool> participating_nodes(const Scenario& scenario) {
  std::vector<bool> on(scenario.num_nodes, false);
  for (const Route& r : scenario.routes) {
    for (NodeId id : r.nodes) on[id] = true;
  }
  return on;
}

}  // namespace wlsim
