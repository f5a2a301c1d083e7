#include "divgraph/run_config.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>

#include "divgraph/analysis.hpp"
#include "divgraph/generators.hpp"
#include "divgraph/graph_io.hpp"
#include "divgraph/space.hpp"

namespace divgraph {

namespace {

class GridPool final : public ElementPool<Graph> {
 public:
  GridPool(std::size_t count, std::size_t n, Seed seed) : pool_(ensemble_grid(n), count, n, seed) {}
  std::size_t size() const override { return pool_.size(); }
  Graph at(std::size_t i) const override { return pool_.at(i); }

 private:
  GeneratorPool pool_;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <class T>
T parse_unsigned(const std::string& key, const std::string& v) {
  T out{};
  const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (v.empty() || ec != std::errc() || p != v.data() + v.size()) {
    throw ConfigError("config key '" + key + "': expected a nonnegative integer, got '" + v + "'");
  }
  return out;
}

double parse_double(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  double out = 0.0;
  try {
    out = std::stod(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (v.empty() || used != v.size()) {
    throw ConfigError("config key '" + key + "': expected a real number, got '" + v + "'");
  }
  return out;
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError("config key '" + key + "': expected true or false, got '" + v + "'");
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error(path.string() + ": cannot open for writing");
  out << text;
  out.flush();
  if (!out) throw std::runtime_error(path.string() + ": write failed");
}

}  // namespace

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = {"n",         "N",    "descriptor", "measure",
                                                "gamma",     "epsilon", "threshold", "plan",
                                                "seed",      "output_dir", "pool_file", "overwrite"};
  return keys;
}

std::map<std::string, std::string> read_config_entries(std::istream& in, const std::string& source) {
  std::map<std::string, std::string> entries;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const std::string where = source + ":" + std::to_string(lineno);
    if (eq == std::string::npos) throw ConfigError(where + ": expected key = value");
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    const auto& keys = config_keys();
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      throw ConfigError(where + ": unknown config key '" + key + "'");
    }
    if (!entries.emplace(key, value).second) throw ConfigError(where + ": duplicate key '" + key + "'");
  }
  return entries;
}

std::map<std::string, std::string> read_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  return read_config_entries(in, path.string());
}

RunConfig parse_config(const std::map<std::string, std::string>& file_entries,
                       const std::map<std::string, std::string>& flag_entries) {
  auto entries = file_entries;
  for (const auto& [k, v] : flag_entries) entries[k] = v;
  const auto& keys = config_keys();
  for (const auto& [k, v] : entries) {
    if (std::find(keys.begin(), keys.end(), k) == keys.end()) {
      throw ConfigError("unknown config key '" + k + "'");
    }
  }

  RunConfig cfg;
  auto get = [&](const std::string& key) -> const std::string* {
    const auto it = entries.find(key);
    return it == entries.end() ? nullptr : &it->second;
  };
  auto wrap = [](const std::string& key, auto&& fn) {
    try {
      fn();
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception& e) {
      throw ConfigError("config key '" + key + "': " + e.what());
    }
  };

  if (auto v = get("n")) cfg.n = parse_unsigned<std::size_t>("n", *v);
  if (auto v = get("N")) cfg.N = parse_unsigned<std::size_t>("N", *v);
  if (auto v = get("descriptor")) wrap("descriptor", [&] { cfg.kind = parse_descriptor_kind(*v); });
  if (auto v = get("measure")) wrap("measure", [&] { cfg.measure.measure = parse_measure(*v); });
  if (auto v = get("gamma")) cfg.measure.gamma = parse_double("gamma", *v);
  if (auto v = get("epsilon")) cfg.measure.epsilon = parse_double("epsilon", *v);
  if (auto v = get("threshold")) cfg.measure.threshold = parse_double("threshold", *v);
  if (auto v = get("seed")) cfg.seed = parse_unsigned<Seed>("seed", *v);
  if (auto v = get("overwrite")) cfg.overwrite = parse_bool("overwrite", *v);
  if (auto v = get("pool_file")) {
    cfg.pool_file = *v;
    if (!std::filesystem::is_regular_file(*cfg.pool_file)) {
      throw ConfigError("config key 'pool_file': no such file " + *v);
    }
  }
  if (auto v = get("plan")) {
    wrap("plan", [&] { cfg.plan = parse_stage_plan(*v); });
  } else {
    throw ConfigError("config key 'plan' is required (e.g. greedy[10000]->genetic[10000])");
  }
  if (auto v = get("output_dir")) {
    cfg.output_dir = *v;
  } else if (const char* env = std::getenv(kOutputDirEnv); env && *env) {
    cfg.output_dir = env;
  } else {
    cfg.output_dir = "out";
  }

  if (cfg.n < 2) throw ConfigError("config key 'n': expected an integer >= 2");
  if (cfg.N < 2) throw ConfigError("config key 'N': expected an integer >= 2");
  wrap("gamma/epsilon", [&] { cfg.measure.validate(); });
  if (cfg.measure.measure == Measure::NumCircles && cfg.N > 25) {
    throw ConfigError("config key 'measure': num_circles supports N <= 25");
  }
  return cfg;
}

RunOutcome execute(const RunConfig& cfg) {
  const GraphSpace space(cfg.kind, cfg.n);
  std::vector<Graph> file_graphs;
  if (cfg.pool_file) {
    file_graphs = read_graph_set(*cfg.pool_file);
    for (std::size_t i = 0; i < file_graphs.size(); ++i) {
      if (file_graphs[i].node_count() != cfg.n) {
        throw std::runtime_error("pool file graph " + std::to_string(i) + " has " +
                                 std::to_string(file_graphs[i].node_count()) + " nodes, expected " +
                                 std::to_string(cfg.n));
      }
    }
  }

  PipelineSources<GraphSpace> sources;
  if (cfg.pool_file) {
    sources.pool = [&](std::size_t count, Seed) -> std::unique_ptr<ElementPool<Graph>> {
      const auto take = std::min(count, file_graphs.size());
      return std::make_unique<VectorPool<Graph>>(
          std::vector<Graph>(file_graphs.begin(), file_graphs.begin() + static_cast<long>(take)));
    };
    sources.initial = [&](std::size_t n, Rng&) {
      if (file_graphs.size() < n) throw InsufficientPool("pool file holds fewer than N graphs");
      return std::vector<Graph>(file_graphs.begin(), file_graphs.begin() + static_cast<long>(n));
    };
  } else {
    const std::size_t n = cfg.n;
    sources.pool = [n](std::size_t count, Seed seed) -> std::unique_ptr<ElementPool<Graph>> {
      return std::make_unique<GridPool>(count, n, seed);
    };
  }

  auto result = run_pipeline(cfg.plan, space, cfg.measure, cfg.N, cfg.seed, sources);
  return {result.state.elements(), std::move(result.report)};
}

RunOutcome run(const RunConfig& cfg, std::ostream& log) {
  namespace fs = std::filesystem;
  const fs::path dir = cfg.output_dir;
  const char* names[] = {RunArtifacts::graphs, RunArtifacts::characteristics, RunArtifacts::diversity,
                         RunArtifacts::report, RunArtifacts::summary};
  if (!cfg.overwrite) {
    for (const char* name : names) {
      if (fs::exists(dir / name)) {
        throw ConfigError((dir / name).string() + ": exists (set overwrite = true to replace)");
      }
    }
  }
  fs::create_directories(dir);

  auto outcome = execute(cfg);

  {
    std::ofstream out(dir / RunArtifacts::graphs, std::ios::trunc);
    if (!out) throw std::runtime_error((dir / RunArtifacts::graphs).string() + ": cannot open for writing");
    write_graph_set(out, outcome.graphs);
    out.flush();
    if (!out) throw std::runtime_error((dir / RunArtifacts::graphs).string() + ": write failed");
  }
  export_table(dir / RunArtifacts::characteristics, outcome.graphs, true);
  const auto rows = report_diversity(outcome.graphs, kAllDescriptorKinds, cfg.measure.epsilon);
  write_file(dir / RunArtifacts::diversity, format_diversity_table(rows));
  const auto table = format_run_report(outcome.report);
  write_file(dir / RunArtifacts::report, "plan: " + to_string(cfg.plan) + "\n" + table);
  write_file(dir / RunArtifacts::summary, run_report_json(outcome.report) + "\n");
  log << table;
  return outcome;
}

}  // namespace divgraph
