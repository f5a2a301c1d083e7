#pragma once

#include <cstddef>
#include <ostream>
#include <vector>

#include "divgraph/measures.hpp"
#include "divgraph/pipeline.hpp"
#include "divgraph/rng.hpp"

namespace divgraph {

struct ToyConfig {
  MeasureConfig measure;
  std::size_t dim = 1;
  std::size_t count = 30;      // number of points
  std::size_t budget = 50000;  // local-opt attempts, initial points included
  std::size_t K = 1000;
  double sigma = 0.05;
  Seed seed = 1;
};

struct ToyResult {
  std::vector<std::vector<double>> points;
  RunReport report;
};

/// Local optimization of uniformly random points in [0,1]^dim.
ToyResult toy_points(const ToyConfig& cfg);

/// CSV with header x0,x1,... and one point per row, 6 decimals.
void write_points_csv(std::ostream& out, const std::vector<std::vector<double>>& points);

}  // namespace divgraph
