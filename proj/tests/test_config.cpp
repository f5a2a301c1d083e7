#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "divgraph/graph_io.hpp"
#include "divgraph/run_config.hpp"
#include "support.hpp"

using namespace divgraph;

namespace {

std::map<std::string, std::string> entries(const std::string& text) {
  std::istringstream in(text);
  return read_config_entries(in, "test");
}

std::string error_of(const std::map<std::string, std::string>& file,
                     const std::map<std::string, std::string>& flags = {}) {
  try {
    parse_config(file, flags);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return {};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("minimal config parses") {
  const auto cfg = parse_config(entries("n = 16\nN = 100\ndescriptor = gcd\nplan = greedy[10000]\n"), {});
  CHECK(cfg.n == 16);
  CHECK(cfg.N == 100);
  CHECK(cfg.kind == DescriptorKind::Gcd);
  CHECK(cfg.plan.stages.size() == 1);
  CHECK(cfg.measure.measure == Measure::Energy);
  CHECK_FALSE(cfg.overwrite);
}

TEST_CASE("config file syntax") {
  const auto e = entries("# comment\n\n  seed = 7  # trailing\nplan=local_opt[10]\n");
  CHECK(e.at("seed") == "7");
  CHECK(e.at("plan") == "local_opt[10]");
  CHECK_THROWS_AS(entries("bogus = 1\n"), ConfigError);
  CHECK_THROWS_AS(entries("seed = 1\nseed = 2\n"), ConfigError);
  CHECK_THROWS_AS(entries("seed 1\n"), ConfigError);
}

TEST_CASE("config validation names the key") {
  CHECK(error_of({{"plan", "greedy[0]"}}).find("plan") != std::string::npos);
  const auto m = error_of({{"plan", "greedy[10]"}, {"measure", "entropy"}});
  CHECK(m.find("measure") != std::string::npos);
  CHECK(m.find("bottleneck") != std::string::npos);
  CHECK(error_of({{"plan", "greedy[10]"}, {"bogus", "1"}}).find("bogus") != std::string::npos);
  CHECK(error_of({}).find("plan") != std::string::npos);
  CHECK(error_of({{"plan", "greedy[10]"}, {"N", "1"}}).find("'N'") != std::string::npos);
  CHECK(error_of({{"plan", "greedy[10]"}, {"n", "x"}}).find("'n'") != std::string::npos);
  CHECK(error_of({{"plan", "greedy[10]"}, {"epsilon", "0"}}).find("epsilon") != std::string::npos);
  CHECK(error_of({{"plan", "greedy[10]"}, {"measure", "num_circles"}}).find("measure") != std::string::npos);
  CHECK(error_of({{"plan", "greedy[10]"}, {"pool_file", "/nonexistent/x"}}).find("pool_file") != std::string::npos);
}

TEST_CASE("flags override file values") {
  const auto cfg = parse_config({{"plan", "greedy[10]"}, {"seed", "3"}}, {{"seed", "9"}, {"N", "5"}});
  CHECK(cfg.seed == 9);
  CHECK(cfg.N == 5);
}

TEST_CASE("output directory default comes from the environment") {
  ::setenv(kOutputDirEnv, "/tmp/divgraph_env_out", 1);
  CHECK(parse_config({{"plan", "greedy[10]"}}, {}).output_dir == "/tmp/divgraph_env_out");
  ::unsetenv(kOutputDirEnv);
  CHECK(parse_config({{"plan", "greedy[10]"}}, {}).output_dir == "out");
  CHECK(parse_config({{"plan", "greedy[10]"}, {"output_dir", "x"}}, {}).output_dir == "x");
}

TEST_CASE("run writes artifacts and refuses to clobber them") {
  const auto dir = std::filesystem::temp_directory_path() / "divgraph_run_test";
  std::filesystem::remove_all(dir);
  auto cfg = parse_config({{"plan", "greedy[60]->local_opt[40]"}, {"n", "8"}, {"N", "10"},
                           {"output_dir", dir.string()}},
                          {});
  std::ostringstream log;
  const auto first = run(cfg, log);
  CHECK(first.graphs.size() == 10);
  CHECK(first.report.total_used() == 100);
  for (const char* name : {RunArtifacts::graphs, RunArtifacts::characteristics, RunArtifacts::diversity,
                           RunArtifacts::report, RunArtifacts::summary}) {
    CHECK(std::filesystem::exists(dir / name));
  }
  const auto graphs = slurp(dir / RunArtifacts::graphs);
  CHECK_THROWS_AS(run(cfg, log), ConfigError);
  cfg.overwrite = true;
  run(cfg, log);
  CHECK(slurp(dir / RunArtifacts::graphs) == graphs);
  std::filesystem::remove_all(dir);
}

TEST_CASE("greedy reselection from a pool file") {
  const auto dir = std::filesystem::temp_directory_path() / "divgraph_pool_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  Rng rng(3);
  std::vector<Graph> pool;
  for (int i = 0; i < 30; ++i) pool.push_back(testing::random_graph(8, uniform01(rng), rng));
  {
    std::ofstream out(dir / "pool.jsonl");
    write_graph_set(out, pool);
  }
  const auto cfg = parse_config({{"plan", "greedy[30]"}, {"n", "8"}, {"N", "6"},
                                 {"pool_file", (dir / "pool.jsonl").string()}},
                                {});
  const auto outcome = execute(cfg);
  REQUIRE(outcome.graphs.size() == 6);
  for (const auto& g : outcome.graphs) CHECK(std::find(pool.begin(), pool.end(), g) != pool.end());
  std::filesystem::remove_all(dir);
}
