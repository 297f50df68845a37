#include "wlsim/config.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <string_view>
#include <system_error>

namespace wlsim {

namespace {

std::string trim(std::string_view s) {
  const char* ws = " \t\r";
  const auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(ws);
  return std::string(s.substr(first, last - first + 1));
}

struct KeyValue {
  std::string key;
  std::string value;
  int line = 0;
};

[[noreturn]] void fail(int line, const std::string& what) {
  throw ConfigError("config line " + std::to_string(line) + ": " + what);
}

std::vector<KeyValue> tokenize(const std::string& text) {
  std::vector<KeyValue> out;
  std::set<std::string> seen;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string stripped = trim(raw);
    if (stripped.empty() || stripped.front() == '#') continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) fail(line, "expected 'key = value': " + stripped);
    KeyValue kv;
    kv.key = trim(std::string_view(stripped).substr(0, eq));
    kv.value = trim(std::string_view(stripped).substr(eq + 1));
    kv.line = line;
    if (kv.key.empty()) fail(line, "empty key");
    if (!seen.insert(kv.key).second) fail(line, "repeated key '" + kv.key + "'");
    out.push_back(std::move(kv));
  }
  return out;
}

long to_long(const KeyValue& kv) {
  long v = 0;
  const char* b = kv.value.data();
  const char* e = b + kv.value.size();
  auto [p, ec] = std::from_chars(b, e, v);
  if (ec != std::errc{} || p != e) {
    fail(kv.line, "key '" + kv.key + "': not an integer: " + kv.value);
  }
  return v;
}

std::uint64_t to_u64(const KeyValue& kv) {
  std::uint64_t v = 0;
  const char* b = kv.value.data();
  const char* e = b + kv.value.size();
  auto [p, ec] = std::from_chars(b, e, v);
  if (ec != std::errc{} || p != e) {
    fail(kv.line, "key '" + kv.key + "': not an unsigned integer: " + kv.value);
  }
  return v;
}

double to_double(const KeyValue& kv) {
  double v = 0.0;
  const char* b = kv.value.data();
  const char* e = b + kv.value.size();
  auto [p, ec] = std::from_chars(b, e, v);
  if (ec != std::errc{} || p != e) {
    fail(kv.line, "key '" + kv.key + "': not a number: " + kv.value);
  }
  return v;
}

bool to_bool(const KeyValue& kv) {
  if (kv.value == "true") return true;
  if (kv.value == "false") return false;
  fail(kv.line, "key '" + kv.key + "': expected true or false: " + kv.value);
}

std::string format_double(double v) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, p);
}

}  // namespace

StrategyKind strategy_from_name(const std::string& name) {
  if (name == "weakest-link") return StrategyKind::WeakestLink;
  if (name == "han-style") return StrategyKind::HanStyle;
  if (name == "pandana-style") return StrategyKind::PandanaStyle;
  throw ConfigError("unknown strategy '" + name +
                    "' (expected weakest-link, han-style or pandana-style)");
}

RunConfig parse_config(const std::string& text) {
  RunConfig c;
  for (const KeyValue& kv : tokenize(text)) {
    if (kv.key == "scenario.kind") {
      if (kv.value == "ring") {
        c.scenario.kind = ScenarioKind::Ring;
      } else if (kv.value == "random") {
        c.scenario.kind = ScenarioKind::Random;
      } else {
        fail(kv.line, "key 'scenario.kind': expected ring or random: " + kv.value);
      }
    } else if (kv.key == "scenario.nodes") {
      c.scenario.nodes = static_cast<int>(to_long(kv));
    } else if (kv.key == "scenario.hops") {
      c.scenario.hops = static_cast<int>(to_long(kv));
    } else if (kv.key == "scenario.pairs") {
      c.scenario.pairs = static_cast<int>(to_long(kv));
    } else if (kv.key == "scenario.forwarders_min") {
      c.scenario.forwarders.min = static_cast<int>(to_long(kv));
    } else if (kv.key == "scenario.forwarders_max") {
      c.scenario.forwarders.max = static_cast<int>(to_long(kv));
    } else if (kv.key == "scenario.seed") {
      c.scenario.seed = to_u64(kv);
    } else if (kv.key == "scenario.file") {
      c.scenario.file = kv.value;
    } else if (kv.key == "game.F") {
      c.game.forwarding_cost = to_double(kv);
    } else if (kv.key == "game.g") {
      c.game.gain.increment = to_double(kv);
    } else if (kv.key == "learn.lambda") {
      c.learn.lambda = to_double(kv);
    } else if (kv.key == "learn.epsilon") {
      c.learn.epsilon = to_double(kv);
    } else if (kv.key == "learn.T") {
      c.learn.punish_duration = static_cast<int>(to_long(kv));
    } else if (kv.key == "learn.init_alpha") {
      c.learn.init_alpha = to_double(kv);
    } else if (kv.key == "learn.punish_banking") {
      c.learn.punish_banking = to_bool(kv);
    } else if (kv.key == "run.strategy") {
      try {
        c.strategy = strategy_from_name(kv.value);
      } catch (const ConfigError& e) {
        fail(kv.line, e.what());
      }
    } else if (kv.key == "run.steps") {
      c.steps = to_long(kv);
    } else if (kv.key == "run.seed") {
      c.seed = to_u64(kv);
    } else if (kv.key == "out.prefix") {
      c.out_prefix = kv.value;
    } else {
      fail(kv.line, "unknown key '" + kv.key + "'");
    }
  }
  if (auto problems = validate_config(c); !problems.empty()) {
    std::string msg = "invalid config:";
    for (const std::string& p : problems) msg += "\n  - " + p;
    throw ConfigError(msg);
  }
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string emit_config(const RunConfig& c) {
  std::ostringstream out;
  out << "scenario.kind = "
      << (c.scenario.kind == ScenarioKind::Ring ? "ring" : "random") << '\n';
  out << "scenario.nodes = " << c.scenario.nodes << '\n';
  out << "scenario.hops = " << c.scenario.hops << '\n';
  out << "scenario.pairs = " << c.scenario.pairs << '\n';
  out << "scenario.forwarders_min = " << c.scenario.forwarders.min << '\n';
  out << "scenario.forwarders_max = " << c.scenario.forwarders.max << '\n';
  out << "scenario.seed = " << c.scenario.seed << '\n';
  if (!c.scenario.file.empty()) out << "scenario.file = " << c.scenario.file << '\n';
  out << "game.F = " << format_double(c.game.forwarding_cost) << '\n';
  out << "game.g = " << format_double(c.game.gain.increment) << '\n';
  out << "learn.lambda = " << format_double(c.learn.lambda) << '\n';
  out << "learn.epsilon = " << format_double(c.learn.epsilon) << '\n';
  out << "learn.T = " << c.learn.punish_duration << '\n';
  out << "learn.init_alpha = " << format_double(c.learn.init_alpha) << '\n';
  out << "learn.punish_banking = "
      << (c.learn.punish_banking ? "true" : "false") << '\n';
  out << "run.strategy = " << to_label(c.strategy) << '\n';
  out << "run.steps = " << c.steps << '\n';
  out << "run.seed = " << c.seed << '\n';
  out << "out.prefix = " << c.out_prefix << '\n';
  return out.str();
}

std::vector<std::string> validate_config(const RunConfig& c) {
  std::vector<std::string> out;
  if (c.scenario.file.empty()) {
    if (c.scenario.kind == ScenarioKind::Ring) {
      if (c.scenario.hops < 1) out.push_back("scenario.hops must be >= 1");
      if (c.scenario.nodes < c.scenario.hops + 1) {
        out.push_back("scenario.nodes must exceed scenario.hops");
      }
    } else {
      if (c.scenario.nodes < 3) out.push_back("scenario.nodes must be >= 3 for random scenarios");
      if (c.scenario.pairs < 0) out.push_back("scenario.pairs must be >= 0");
      if (c.scenario.forwarders.min < 0 ||
          c.scenario.forwarders.max < c.scenario.forwarders.min) {
        out.push_back("scenario.forwarders_min..max must satisfy 0 <= min <= max");
      } else if (c.scenario.forwarders.max + 2 > c.scenario.nodes) {
        out.push_back("scenario.forwarders_max + 2 must not exceed scenario.nodes");
      }
    }
  }
  if (c.game.forwarding_cost < 0.0) out.push_back("game.F must be >= 0");
  if (!(c.game.gain.increment > 0.0)) out.push_back("game.g must be > 0");
  if (c.learn.lambda < 0.0) out.push_back("learn.lambda must be >= 0");
  if (!(c.learn.epsilon > 0.0) || c.learn.epsilon > 1.0) {
    out.push_back("learn.epsilon must be in (0, 1]");
  }
  if (c.learn.punish_duration < 1) out.push_back("learn.T must be >= 1");
  if (c.learn.init_alpha < 0.0 || c.learn.init_alpha > 1.0) {
    out.push_back("learn.init_alpha must be in [0, 1]");
  }
  if (c.steps < 1) out.push_back("run.steps must be >= 1");
  if (c.out_prefix.empty()) out.push_back("out.prefix must not be empty");
  return out;
}

Scenario build_scenario(const ScenarioSpec& spec) {
  if (!spec.file.empty()) {
    std::ifstream in(spec.file, std::ios::binary);
    if (!in) throw ConfigError("cannot open scenario file: " + spec.file);
    std::ostringstream buf;
    buf << in.rdbuf();
    return scenario_from_text(buf.str());
  }
  if (spec.kind == ScenarioKind::Ring) {
    return generate_ring(spec.nodes, spec.hops);
  }
  return generate_random(spec.nodes, spec.pairs, spec.forwarders, spec.seed);
}

namespace {

struct StrategyRow {
  StrategyKind kind;
  double epsilon;
  const char* label;
};

constexpr StrategyRow kWeakestLinkSlow{StrategyKind::WeakestLink, 0.01,
                                       "weakest-link-eps0.01"};
constexpr StrategyRow kWeakestLinkFast{StrategyKind::WeakestLink, 0.05,
                                       "weakest-link-eps0.05"};
constexpr StrategyRow kPandana{StrategyKind::PandanaStyle, kPandanaStyleEpsilon,
                               "pandana-style"};
constexpr StrategyRow kHan{StrategyKind::HanStyle, kHanStyleEpsilon,
                           "han-style"};

RunConfig preset_base(ScenarioKind kind) {
  RunConfig c;
  c.scenario.kind = kind;
  if (kind == ScenarioKind::Ring) {
    c.scenario.nodes = 25;
    c.scenario.hops = 6;
  } else {
    c.scenario.nodes = 100;
    c.scenario.pairs = 1000;
    c.scenario.forwarders = {3, 6};
  }
  c.scenario.seed = 42;
  return c;
}

std::vector<RunConfig> expand_rows(const std::string& name, ScenarioKind kind,
                                   double init_alpha,
                                   const std::vector<StrategyRow>& rows,
                                   std::uint64_t run_seed) {
  std::vector<RunConfig> out;
  for (const StrategyRow& row : rows) {
    RunConfig c = preset_base(kind);
    c.strategy = row.kind;
    c.learn.epsilon = row.epsilon;
    c.learn.init_alpha = init_alpha;
    c.seed = run_seed;
    c.out_prefix = name + "-" + row.label;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

std::vector<std::string> preset_names() {
  return {"ring-fig2",    "random-fig3",  "ring-table1",
          "random-table2", "ring-table3", "random-table4"};
}

std::vector<RunConfig> expand_preset(const std::string& name,
                                     std::uint64_t run_seed) {
  const std::vector<StrategyRow> init0 = {kWeakestLinkSlow, kWeakestLinkFast,
                                          kPandana, kHan};
  const std::vector<StrategyRow> init_half = {kWeakestLinkSlow,
                                              kWeakestLinkFast, kPandana};
  if (name == "ring-fig2" || name == "ring-table1") {
    return expand_rows(name, ScenarioKind::Ring, 0.0, init0, run_seed);
  }
  if (name == "random-fig3" || name == "random-table2") {
    return expand_rows(name, ScenarioKind::Random, 0.0, init0, run_seed);
  }
  if (name == "ring-table3") {
    return expand_rows(name, ScenarioKind::Ring, 0.5, init_half, run_seed);
  }
  if (name == "random-table4") {
    return expand_rows(name, ScenarioKind::Random, 0.5, init_half, run_seed);
  }
  std::string msg = "unknown preset '" + name + "' (expected one of:";
  for (const std::string& p : preset_names()) msg += " " + p;
  throw ConfigError(msg + ")");
}

}  // namespace wlsim
