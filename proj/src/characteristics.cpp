#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "divgraph/analysis.hpp"

namespace divgraph {

CharacteristicRow characteristics(const Graph& g, std::size_t id) {
  const std::size_t n = g.node_count();
  CharacteristicRow row;
  row.id = id;
  row.edges = g.edge_count();
  row.avg_degree = 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(n);
  row.components = component_sizes(g).size();

  double clustering = 0.0;
  for (Node u = 0; u < n; ++u) {
    const auto nb = g.neighbors(u);
    const std::size_t d = nb.size();
    if (d < 2) continue;
    std::size_t links = 0;
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t b = a + 1; b < d; ++b) links += g.has_edge(nb[a], nb[b]);
    }
    clustering += 2.0 * static_cast<double>(links) / static_cast<double>(d * (d - 1));
  }
  row.avg_clustering = clustering / static_cast<double>(n);

  double diff = 0.0;
  double total = 0.0;
  for (Node u = 0; u < n; ++u) {
    total += static_cast<double>(g.degree(u));
    for (Node v = 0; v < n; ++v) {
      diff += std::abs(static_cast<double>(g.degree(u)) - static_cast<double>(g.degree(v)));
    }
  }
  row.gini = total > 0.0 ? diff / (2.0 * static_cast<double>(n) * total) : 0.0;

  if (n > 1) {
    double inv = 0.0;
    for (Node s = 0; s < n; ++s) {
      const auto hops = bfs_from(g, s);
      for (Node t = 0; t < n; ++t) {
        if (t != s && hops[t]) inv += 1.0 / static_cast<double>(*hops[t]);
      }
    }
    row.efficiency = inv / static_cast<double>(n * (n - 1));
  }
  return row;
}

void export_table(std::ostream& out, std::span<const Graph> graphs) {
  out << kCharacteristicsHeader << '\n';
  char buf[256];
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const auto r = characteristics(graphs[i], i);
    std::snprintf(buf, sizeof buf, "%zu,%.6f,%.6f,%.6f,%.6f,%zu,%zu\n", r.id, r.avg_degree,
                  r.avg_clustering, r.gini, r.efficiency, r.edges, r.components);
    out << buf;
  }
}

void export_table(const std::filesystem::path& path, std::span<const Graph> graphs, bool overwrite) {
  if (!overwrite && std::filesystem::exists(path)) {
    throw std::runtime_error(path.string() + ": exists (pass --overwrite to replace)");
  }
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error(path.string() + ": cannot open for writing");
  export_table(out, graphs);
  out.flush();
  if (!out) throw std::runtime_error(path.string() + ": write failed");
}

}  // namespace divgraph
