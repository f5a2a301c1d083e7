#include <cstdio>
#include <stdexcept>

#include "divgraph/analysis.hpp"
#include "divgraph/measures.hpp"

namespace divgraph {

DiversityRow summarize(std::string label, const SquareMatrix& dist, double epsilon) {
  return {std::move(label), energy_penalty(dist, epsilon), average(dist)};
}

SquareMatrix pairwise_distances(std::span<const Descriptor> descriptors) {
  SquareMatrix d(descriptors.size());
  for (std::size_t i = 0; i < descriptors.size(); ++i) {
    for (std::size_t j = i + 1; j < descriptors.size(); ++j) {
      d.set_symmetric(i, j, distance(descriptors[i], descriptors[j]));
    }
  }
  return d;
}

SquareMatrix pairwise_distances(std::span<const Graph> graphs, DescriptorKind kind) {
  std::vector<Descriptor> descs;
  descs.reserve(graphs.size());
  for (const auto& g : graphs) descs.push_back(describe(kind, g));
  return pairwise_distances(descs);
}

std::vector<DiversityRow> report_diversity(std::span<const Graph> graphs,
                                           std::span<const DescriptorKind> kinds, double epsilon) {
  if (graphs.size() < 2) throw std::invalid_argument("diversity report needs at least two graphs");
  std::vector<DiversityRow> rows;
  for (auto kind : kinds) {
    rows.push_back(summarize(std::string(display_name(kind)), pairwise_distances(graphs, kind), epsilon));
  }
  return rows;
}

std::string format_diversity_table(std::span<const DiversityRow> rows) {
  std::string out;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%-10s", "");
  out += buf;
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, " %14s", r.label.c_str());
    out += buf;
  }
  out += '\n';
  std::snprintf(buf, sizeof buf, "%-10s", "energy");
  out += buf;
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, " %14.4f", r.energy_penalty);
    out += buf;
  }
  out += '\n';
  std::snprintf(buf, sizeof buf, "%-10s", "avg_dist");
  out += buf;
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, " %14.4f", r.average_distance);
    out += buf;
  }
  out += '\n';
  return out;
}

}  // namespace divgraph
