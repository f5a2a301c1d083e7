#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "divgraph/descriptor.hpp"
#include "divgraph/graph.hpp"
#include "divgraph/measures.hpp"
#include "divgraph/pipeline.hpp"
#include "divgraph/rng.hpp"

namespace divgraph {

/// Invalid configuration; maps to exit status 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitRuntime = 3;

/// Environment variable naming the default output directory.
inline constexpr const char* kOutputDirEnv = "DIVGRAPH_OUT";

struct RunConfig {
  std::size_t n = 16;           // nodes per graph
  std::size_t N = 100;          // set size
  DescriptorKind kind = DescriptorKind::Gcd;
  MeasureConfig measure;
  StagePlan plan;
  Seed seed = 1;
  std::filesystem::path output_dir;
  std::optional<std::filesystem::path> pool_file;  // greedy pool; grid ensemble otherwise
  bool overwrite = false;
};

/// Recognised keys, in documentation order.
const std::vector<std::string>& config_keys();

/// Reads "key = value" lines; '#' starts a comment, blank lines are
/// skipped. Duplicate or unknown keys and lines without '=' are errors.
std::map<std::string, std::string> read_config_entries(std::istream& in, const std::string& source);
std::map<std::string, std::string> read_config_file(const std::filesystem::path& path);

/// Builds and validates a RunConfig from file entries overlaid by flag
/// entries. `plan` is required. output_dir defaults to $DIVGRAPH_OUT, then
/// "out". Throws ConfigError naming the offending key.
RunConfig parse_config(const std::map<std::string, std::string>& file_entries,
                       const std::map<std::string, std::string>& flag_entries);

/// Artifact file names inside the output directory.
struct RunArtifacts {
  static constexpr const char* graphs = "graphs.jsonl";
  static constexpr const char* characteristics = "characteristics.csv";
  static constexpr const char* diversity = "diversity.txt";
  static constexpr const char* report = "run_report.txt";
  static constexpr const char* summary = "run_summary.json";
};

struct RunOutcome {
  std::vector<Graph> graphs;
  RunReport report;
};

/// Runs the configured pipeline without touching the file system beyond
/// reading the pool file.
RunOutcome execute(const RunConfig& cfg);

/// execute() plus all artifacts written into cfg.output_dir. Existing
/// artifacts are a ConfigError unless cfg.overwrite.
RunOutcome run(const RunConfig& cfg, std::ostream& log);

}  // namespace divgraph
