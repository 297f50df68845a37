#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "wlsim/config.hpp"

using namespace wlsim;

TEST_CASE("an empty config is all defaults") {
  const RunConfig c = parse_config("# nothing but comments\n\n");
  CHECK(c.scenario.kind == ScenarioKind::Ring);
  CHECK(c.scenario.nodes == 25);
  CHECK(c.scenario.hops == 6);
  CHECK(c.game.forwarding_cost == 3.0);
  CHECK(c.game.gain.increment == 1.0);
  CHECK(c.learn.lambda == 0.01);
  CHECK(c.learn.epsilon == 0.05);
  CHECK(c.learn.punish_duration == 3);
  CHECK(c.learn.init_alpha == 0.0);
  CHECK(c.learn.punish_banking);
  CHECK(c.strategy == StrategyKind::WeakestLink);
  CHECK(c.steps == 2000);
  CHECK(c.seed == 1);
  CHECK(c.out_prefix == "run");
}

TEST_CASE("keys are parsed and applied") {
  const RunConfig c = parse_config(
      "scenario.kind = random\n"
      "scenario.nodes = 100\n"
      "scenario.pairs = 1000\n"
      "scenario.forwarders_min = 3\n"
      "scenario.forwarders_max = 6\n"
      "scenario.seed = 42\n"
      "game.F = 2.5\n"
      "game.g = 0.5\n"
      "learn.lambda = 0.02\n"
      "learn.epsilon = 0.1\n"
      "learn.T = 5\n"
      "learn.init_alpha = 0.5\n"
      "learn.punish_banking = false\n"
      "run.strategy = pandana-style\n"
      "run.steps = 123\n"
      "run.seed = 77\n"
      "out.prefix = trial\n");
  CHECK(c.scenario.kind == ScenarioKind::Random);
  CHECK(c.scenario.nodes == 100);
  CHECK(c.scenario.pairs == 1000);
  CHECK(c.scenario.forwarders == ForwarderCountRange{3, 6});
  CHECK(c.scenario.seed == 42);
  CHECK(c.game.forwarding_cost == 2.5);
  CHECK(c.game.gain.increment == 0.5);
  CHECK(c.learn.lambda == 0.02);
  CHECK(c.learn.epsilon == 0.1);
  CHECK(c.learn.punish_duration == 5);
  CHECK(c.learn.init_alpha == 0.5);
  CHECK_FALSE(c.learn.punish_banking);
  CHECK(c.strategy == StrategyKind::PandanaStyle);
  CHECK(c.steps == 123);
  CHECK(c.seed == 77);
  CHECK(c.out_prefix == "trial");
}

TEST_CASE("emit and parse round-trip") {
  RunConfig c;
  c.scenario.kind = ScenarioKind::Random;
  c.scenario.nodes = 61;
  c.scenario.pairs = 17;
  c.scenario.forwarders = {1, 4};
  c.scenario.seed = 987654321;
  c.game.forwarding_cost = 3.25;
  c.game.gain.increment = 0.1;  // not exactly representable on purpose
  c.learn.lambda = 0.013;
  c.learn.epsilon = 1.0 / 3.0;
  c.learn.punish_duration = 7;
  c.learn.init_alpha = 0.725;
  c.learn.punish_banking = false;
  c.strategy = StrategyKind::HanStyle;
  c.steps = 4321;
  c.seed = 222;
  c.out_prefix = "roundtrip";
  CHECK(parse_config(emit_config(c)) == c);

  RunConfig with_file;
  with_file.scenario.file = "some/scenario.txt";
  CHECK(parse_config(emit_config(with_file)) == with_file);

  CHECK(parse_config(emit_config(RunConfig{})) == RunConfig{});
}

TEST_CASE("unknown, repeated and malformed keys fail with line context") {
  CHECK_THROWS_WITH_AS(parse_config("bogus.key = 3\n"),
                       doctest::Contains("line 1"), ConfigError);
  CHECK_THROWS_WITH_AS(parse_config("run.steps = 10\nrun.steps = 20\n"),
                       doctest::Contains("line 2"), ConfigError);
  CHECK_THROWS_WITH_AS(parse_config("run.steps = soon\n"),
                       doctest::Contains("not an integer"), ConfigError);
  CHECK_THROWS_WITH_AS(parse_config("game.F 3\n"),
                       doctest::Contains("key = value"), ConfigError);
  CHECK_THROWS_WITH_AS(parse_config("run.strategy = tit-for-tat\n"),
                       doctest::Contains("tit-for-tat"), ConfigError);
  CHECK_THROWS_WITH_AS(parse_config("learn.punish_banking = yes\n"),
                       doctest::Contains("true or false"), ConfigError);
  CHECK_THROWS_WITH_AS(parse_config("scenario.kind = mesh\n"),
                       doctest::Contains("ring or random"), ConfigError);
}

TEST_CASE("validation lists every violation at once") {
  RunConfig c;
  c.steps = 0;
  c.learn.epsilon = 0.0;
  c.learn.punish_duration = 0;
  c.game.gain.increment = -1.0;
  c.learn.init_alpha = 2.0;
  const auto problems = validate_config(c);
  CHECK(problems.size() == 5);

  CHECK_THROWS_WITH_AS(parse_config("run.steps = 0\nlearn.T = 0\n"),
                       doctest::Contains("learn.T"), ConfigError);
}

TEST_CASE("scenario bounds are validated per kind") {
  RunConfig ring;
  ring.scenario.kind = ScenarioKind::Ring;
  ring.scenario.nodes = 6;
  ring.scenario.hops = 6;
  CHECK_FALSE(validate_config(ring).empty());

  RunConfig rnd;
  rnd.scenario.kind = ScenarioKind::Random;
  rnd.scenario.nodes = 6;
  rnd.scenario.forwarders = {3, 6};
  CHECK_FALSE(validate_config(rnd).empty());

  RunConfig file_backed = rnd;
  file_backed.scenario.file = "whatever.txt";
  CHECK(validate_config(file_backed).empty());
}

TEST_CASE("strategy names round-trip through labels") {
  for (StrategyKind kind : {StrategyKind::WeakestLink, StrategyKind::HanStyle,
                            StrategyKind::PandanaStyle}) {
    CHECK(strategy_from_name(to_label(kind)) == kind);
  }
  CHECK_THROWS_AS(strategy_from_name("grim-trigger"), ConfigError);
}

TEST_CASE("build_scenario matches the generators") {
  ScenarioSpec ring;
  ring.kind = ScenarioKind::Ring;
  ring.nodes = 25;
  ring.hops = 6;
  CHECK(build_scenario(ring) == generate_ring(25, 6));

  ScenarioSpec rnd;
  rnd.kind = ScenarioKind::Random;
  rnd.nodes = 50;
  rnd.pairs = 120;
  rnd.forwarders = {2, 5};
  rnd.seed = 9;
  CHECK(build_scenario(rnd) == generate_random(50, 120, {2, 5}, 9));
}

TEST_CASE("build_scenario loads scenario files") {
  const Scenario original = generate_random(20, 30, {1, 4}, 5);
  const auto path =
      std::filesystem::temp_directory_path() / "wlsim_scenario_roundtrip.txt";
  {
    std::ofstream out(path, std::ios::binary);
    out << to_text(original);
  }
  ScenarioSpec spec;
  spec.file = path.string();
  CHECK(build_scenario(spec) == original);
  std::filesystem::remove(path);

  ScenarioSpec missing;
  missing.file = "/nonexistent/scenario.txt";
  CHECK_THROWS_AS(build_scenario(missing), ConfigError);
}

TEST_CASE("preset names expand and unknown presets fail") {
  for (const std::string& name : preset_names()) {
    CHECK_FALSE(expand_preset(name, 1).empty());
  }
  CHECK_THROWS_AS(expand_preset("ring-table9", 1), ConfigError);
}

TEST_CASE("ring presets carry the reference parameters") {
  const auto runs = expand_preset("ring-table1", 31);
  REQUIRE(runs.size() == 4);
  for (const RunConfig& c : runs) {
    CHECK(c.scenario.kind == ScenarioKind::Ring);
    CHECK(c.scenario.nodes == 25);
    CHECK(c.scenario.hops == 6);
    CHECK(c.game.forwarding_cost == 3.0);
    CHECK(c.game.gain.increment == 1.0);
    CHECK(c.learn.lambda == 0.01);
    CHECK(c.learn.punish_duration == 3);
    CHECK(c.learn.init_alpha == 0.0);
    CHECK(c.steps == 2000);
    CHECK(c.seed == 31);
    CHECK(validate_config(c).empty());
  }
  CHECK(runs[0].strategy == StrategyKind::WeakestLink);
  CHECK(runs[0].learn.epsilon == 0.01);
  CHECK(runs[1].strategy == StrategyKind::WeakestLink);
  CHECK(runs[1].learn.epsilon == 0.05);
  CHECK(runs[2].strategy == StrategyKind::PandanaStyle);
  CHECK(runs[3].strategy == StrategyKind::HanStyle);
}

TEST_CASE("random presets carry the reference parameters") {
  const auto runs = expand_preset("random-table2", 2);
  REQUIRE(runs.size() == 4);
  for (const RunConfig& c : runs) {
    CHECK(c.scenario.kind == ScenarioKind::Random);
    CHECK(c.scenario.nodes == 100);
    CHECK(c.scenario.pairs == 1000);
    CHECK(c.scenario.forwarders == ForwarderCountRange{3, 6});
    CHECK(c.learn.init_alpha == 0.0);
    CHECK(c.steps == 2000);
  }
}

TEST_CASE("half-initialized presets drop the han-style run") {
  for (const char* name : {"ring-table3", "random-table4"}) {
    const auto runs = expand_preset(name, 7);
    REQUIRE(runs.size() == 3);
    for (const RunConfig& c : runs) {
      CHECK(c.learn.init_alpha == 0.5);
      CHECK(c.strategy != StrategyKind::HanStyle);
    }
  }
}

TEST_CASE("figure presets mirror their table counterparts") {
  const auto fig = expand_preset("ring-fig2", 4);
  const auto table = expand_preset("ring-table1", 4);
  REQUIRE(fig.size() == table.size());
  for (std::size_t i = 0; i < fig.size(); ++i) {
    RunConfig renamed = fig[i];
    renamed.out_prefix = table[i].out_prefix;
    CHECK(renamed == table[i]);
  }
}

TEST_CASE("preset output prefixes are distinct") {
  for (const std::string& name : preset_names()) {
    const auto runs = expand_preset(name, 1);
    for (std::size_t i = 0; i < runs.size(); ++i) {
      for (std::size_t j = i + 1; j < runs.size(); ++j) {
        CHECK(runs[i].out_prefix != runs[j].out_prefix);
      }
    }
  }
}

TEST_CASE("load_config reads files and reports missing ones") {
  const auto path = std::filesystem::temp_directory_path() / "wlsim_cfg_test.cfg";
  {
    std::ofstream out(path, std::ios::binary);
    out << "run.steps = 12\n";
  }
  CHECK(load_config(path.string()).steps == 12);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(load_config("/nonexistent/x.cfg"), ConfigError);
}
