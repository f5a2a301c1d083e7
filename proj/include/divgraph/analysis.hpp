#pragma once

#include <cstddef>
#include <filesystem>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "divgraph/descriptor.hpp"
#include "divgraph/graph.hpp"
#include "divgraph/square_matrix.hpp"

namespace divgraph {

struct CharacteristicRow {
  std::size_t id = 0;
  double avg_degree = 0.0;
  double avg_clustering = 0.0;  // nodes of degree < 2 count as 0
  double gini = 0.0;            // of the degree sequence; 0 if there are no edges
  double efficiency = 0.0;      // mean of 1/hops over ordered pairs, 0 if unreachable
  std::size_t edges = 0;
  std::size_t components = 0;
};

CharacteristicRow characteristics(const Graph& g, std::size_t id = 0);

inline constexpr const char* kCharacteristicsHeader =
    "id,avg_degree,avg_clustering,gini,efficiency,edges,components";

/// Header plus one row per graph, reals with 6 decimals.
void export_table(std::ostream& out, std::span<const Graph> graphs);
/// Writes the table to `path`; refuses to replace an existing file unless
/// `overwrite`. Errors name the path.
void export_table(const std::filesystem::path& path, std::span<const Graph> graphs, bool overwrite);

struct DiversityRow {
  std::string label;
  double energy_penalty = 0.0;
  double average_distance = 0.0;
};

/// Penalty and mean pairwise distance of one distance table (N >= 2).
DiversityRow summarize(std::string label, const SquareMatrix& dist, double epsilon);

/// Pairwise distance table of a graph set under one descriptor kind.
SquareMatrix pairwise_distances(std::span<const Graph> graphs, DescriptorKind kind);
SquareMatrix pairwise_distances(std::span<const Descriptor> descriptors);

/// One row per kind, labelled with its display name.
std::vector<DiversityRow> report_diversity(std::span<const Graph> graphs,
                                           std::span<const DescriptorKind> kinds, double epsilon);

/// Columns per kind, rows "energy" and "avg_dist".
std::string format_diversity_table(std::span<const DiversityRow> rows);

}  // namespace divgraph
