#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "divgraph/analysis.hpp"
#include "divgraph/descriptor_io.hpp"
#include "divgraph/generators.hpp"
#include "divgraph/graph_io.hpp"
#include "divgraph/measures.hpp"
#include "divgraph/run_config.hpp"
#include "divgraph/toy.hpp"

namespace fs = std::filesystem;
using namespace divgraph;

namespace {

// Writes to stdout for an empty path or "-", otherwise to a new file.
void emit(const std::string& path, bool overwrite, const std::function<void(std::ostream&)>& body) {
  if (path.empty() || path == "-") {
    body(std::cout);
    return;
  }
  if (!overwrite && fs::exists(path)) throw ConfigError(path + ": exists (pass --overwrite to replace)");
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  body(out);
  out.flush();
  if (!out) throw std::runtime_error(path + ": write failed");
}

std::vector<DescriptorKind> kinds_from(const std::vector<std::string>& names) {
  if (names.empty()) return {std::begin(kAllDescriptorKinds), std::end(kAllDescriptorKinds)};
  std::vector<DescriptorKind> kinds;
  for (const auto& n : names) kinds.push_back(parse_descriptor_kind(n));
  return kinds;
}

std::string measure_table(const std::vector<Graph>& graphs, const std::vector<DescriptorKind>& kinds,
                          double epsilon) {
  if (graphs.size() < 2) throw std::invalid_argument("measure needs at least two graphs");
  std::string out;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%-12s", "measure");
  out += buf;
  std::vector<SquareMatrix> tables;
  for (auto k : kinds) {
    std::snprintf(buf, sizeof buf, " %14s", std::string(display_name(k)).c_str());
    out += buf;
    tables.push_back(pairwise_distances(graphs, k));
  }
  out += '\n';
  const std::pair<const char*, std::function<double(const SquareMatrix&)>> rows[] = {
      {"energy", [&](const SquareMatrix& d) { return energy_penalty(d, epsilon); }},
      {"average", [](const SquareMatrix& d) { return average(d); }},
      {"bottleneck", [](const SquareMatrix& d) { return bottleneck(d); }},
  };
  for (const auto& [name, fn] : rows) {
    std::snprintf(buf, sizeof buf, "%-12s", name);
    out += buf;
    for (const auto& t : tables) {
      std::snprintf(buf, sizeof buf, " %14.4f", fn(t));
      out += buf;
    }
    out += '\n';
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generate and evaluate diverse sets of graphs"};
  app.require_subcommand(1);

  // pool generate
  auto* pool_cmd = app.add_subcommand("pool", "Random graph pools");
  pool_cmd->require_subcommand(1);
  auto* gen = pool_cmd->add_subcommand("generate", "Sample a graph set from the ensemble grid or ER-mix");
  std::size_t gen_n = 16, gen_count = 100;
  Seed gen_seed = 1;
  std::string gen_model = "grid", gen_out;
  bool gen_overwrite = false;
  gen->add_option("--n", gen_n, "Nodes per graph");
  gen->add_option("--count", gen_count, "Number of graphs");
  gen->add_option("--seed", gen_seed, "Seed");
  gen->add_option("--model", gen_model, "grid | er-mix | er-mix-grid");
  gen->add_option("--out", gen_out, "Output file (default stdout)");
  gen->add_flag("--overwrite", gen_overwrite, "Replace an existing output file");

  // describe
  auto* desc = app.add_subcommand("describe", "Compute descriptors of a graph set");
  std::string desc_in, desc_out, desc_kind = "gcd";
  bool desc_overwrite = false;
  desc->add_option("--in", desc_in, "Graph set file")->required();
  desc->add_option("--kind", desc_kind, "heat | wave | gcd | portrait");
  desc->add_option("--out", desc_out, "Output file (default stdout)");
  desc->add_flag("--overwrite", desc_overwrite, "Replace an existing output file");

  // measure
  auto* meas = app.add_subcommand("measure", "Energy penalty, average and bottleneck of a graph set");
  std::string meas_in;
  std::vector<std::string> meas_kinds;
  double meas_eps = 1e-5;
  meas->add_option("--in", meas_in, "Graph set file")->required();
  meas->add_option("--kind", meas_kinds, "Descriptor kinds (default all)");
  meas->add_option("--epsilon", meas_eps, "Stabilizer added to distances");

  // optimize
  auto* opt = app.add_subcommand("optimize", "Run an optimization pipeline");
  std::string opt_config;
  std::map<std::string, std::string> flag_entries;
  std::map<std::string, std::string> flag_values;
  opt->add_option("--config", opt_config, "Config file (key = value lines)");
  for (const auto& key : config_keys()) {
    if (key == "overwrite") continue;
    std::string flag = "--" + key;
    for (auto& c : flag) c = c == '_' ? '-' : c;
    opt->add_option(flag, flag_values[key], "Overrides config key '" + key + "'");
  }
  bool opt_overwrite = false;
  opt->add_flag("--overwrite", opt_overwrite, "Replace existing artifacts");

  // report
  auto* rep = app.add_subcommand("report", "Diversity table and characteristics CSV of a graph set");
  std::string rep_in, rep_csv;
  std::vector<std::string> rep_kinds;
  double rep_eps = 1e-5;
  bool rep_overwrite = false;
  rep->add_option("--in", rep_in, "Graph set file")->required();
  rep->add_option("--kind", rep_kinds, "Descriptor kinds (default all)");
  rep->add_option("--epsilon", rep_eps, "Stabilizer added to distances");
  rep->add_option("--csv", rep_csv, "Write characteristics CSV here");
  rep->add_flag("--overwrite", rep_overwrite, "Replace an existing CSV");

  // toy-points
  auto* toy = app.add_subcommand("toy-points", "Local optimization of points in the unit box");
  ToyConfig toy_cfg;
  std::string toy_objective = "energy", toy_out, toy_K;
  bool toy_overwrite = false;
  toy->add_option("--objective", toy_objective, "Measure tag");
  toy->add_option("--n", toy_cfg.count, "Number of points");
  toy->add_option("--dim", toy_cfg.dim, "Dimension");
  toy->add_option("--gamma", toy_cfg.measure.gamma, "Energy exponent");
  toy->add_option("--epsilon", toy_cfg.measure.epsilon, "Stabilizer");
  toy->add_option("--threshold", toy_cfg.measure.threshold, "num_circles radius");
  toy->add_option("--budget", toy_cfg.budget, "Attempts, initial points included");
  toy->add_option("--K", toy_K, "Escape after K failures (inf disables)");
  toy->add_option("--sigma", toy_cfg.sigma, "Mutation step");
  toy->add_option("--seed", toy_cfg.seed, "Seed");
  toy->add_option("--out", toy_out, "Output CSV (default stdout)");
  toy->add_flag("--overwrite", toy_overwrite, "Replace an existing output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*gen) {
      std::vector<Graph> graphs;
      if (gen_model == "grid") {
        graphs = sample_pool(ensemble_grid(gen_n), gen_count, gen_n, gen_seed);
      } else if (gen_model == "er-mix" || gen_model == "er-mix-grid") {
        const auto mode = gen_model == "er-mix" ? ErMixMode::Uniform : ErMixMode::Grid;
        for (std::size_t i = 0; i < gen_count; ++i) graphs.push_back(er_mix(gen_n, derive_seed(gen_seed, i), mode));
      } else {
        throw ConfigError("--model: expected grid, er-mix or er-mix-grid, got '" + gen_model + "'");
      }
      emit(gen_out, gen_overwrite, [&](std::ostream& o) { write_graph_set(o, graphs); });
    } else if (*desc) {
      const auto kind = parse_descriptor_kind(desc_kind);
      std::vector<Descriptor> ds;
      for (const auto& g : read_graph_set(desc_in)) ds.push_back(describe(kind, g));
      emit(desc_out, desc_overwrite, [&](std::ostream& o) { write_descriptors(o, ds); });
    } else if (*meas) {
      if (!(meas_eps > 0.0)) throw ConfigError("--epsilon must be > 0");
      std::cout << measure_table(read_graph_set(meas_in), kinds_from(meas_kinds), meas_eps);
    } else if (*opt) {
      std::map<std::string, std::string> file_entries;
      if (!opt_config.empty()) file_entries = read_config_file(opt_config);
      for (const auto& [k, v] : flag_values) {
        if (!v.empty()) flag_entries[k] = v;
      }
      if (opt_overwrite) flag_entries["overwrite"] = "true";
      const auto cfg = parse_config(file_entries, flag_entries);
      run(cfg, std::cout);
      std::cout << "artifacts written to " << cfg.output_dir.string() << '\n';
    } else if (*rep) {
      if (!(rep_eps > 0.0)) throw ConfigError("--epsilon must be > 0");
      const auto graphs = read_graph_set(rep_in);
      const auto kinds = kinds_from(rep_kinds);
      std::cout << format_diversity_table(report_diversity(graphs, kinds, rep_eps));
      if (!rep_csv.empty()) export_table(rep_csv, graphs, rep_overwrite);
    } else if (*toy) {
      toy_cfg.measure.measure = parse_measure(toy_objective);
      if (!toy_K.empty()) {
        toy_cfg.K = (toy_K == "inf" || toy_K == "none") ? kNoEscape : std::stoul(toy_K);
      }
      const auto result = toy_points(toy_cfg);
      emit(toy_out, toy_overwrite, [&](std::ostream& o) { write_points_csv(o, result.points); });
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitOk;
}
