#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "divgraph/graph.hpp"
#include "divgraph/orbits.hpp"

namespace divgraph {

/// 11 x 11 Spearman correlation matrix of the non-redundant orbit columns.
/// Only the 55 strictly-upper entries are stored; the diagonal is 1.
class GraphletCorrelationMatrix {
 public:
  static constexpr std::size_t kSize = kNonRedundantOrbits.size();
  static constexpr std::size_t kUpperCount = kSize * (kSize - 1) / 2;

  double at(std::size_t i, std::size_t j) const;
  std::span<const double> upper() const { return upper_; }
  std::span<double> upper() { return upper_; }

 private:
  std::array<double, kUpperCount> upper_{};
};

/// Average ranks (1-based), ties share the mean of their positions.
std::vector<double> average_ranks(std::span<const double> values);

/// Spearman correlation over the reduced orbit columns after appending one
/// all-ones row. A column whose ranks are all tied is treated as perfectly
/// correlated with every other column.
GraphletCorrelationMatrix gcm_from_counts(const OrbitCountMatrix& counts);
GraphletCorrelationMatrix gcm(const Graph& g);

/// Euclidean distance between the strictly-upper triangles.
double gcd_distance(const GraphletCorrelationMatrix& a, const GraphletCorrelationMatrix& b);

}  // namespace divgraph
