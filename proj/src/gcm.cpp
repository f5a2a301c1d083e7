#include "divgraph/gcm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace divgraph {

namespace {

std::size_t upper_index(std::size_t i, std::size_t j) {
  // row-major over i < j
  constexpr std::size_t k = GraphletCorrelationMatrix::kSize;
  return i * (2 * k - i - 1) / 2 + (j - i - 1);
}

}  // namespace

double GraphletCorrelationMatrix::at(std::size_t i, std::size_t j) const {
  if (i == j) return 1.0;
  if (i > j) std::swap(i, j);
  return upper_[upper_index(i, j)];
}

std::vector<double> average_ranks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(values.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
    const double rank = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

GraphletCorrelationMatrix gcm_from_counts(const OrbitCountMatrix& counts) {
  constexpr std::size_t k = GraphletCorrelationMatrix::kSize;
  const std::size_t rows = counts.node_count() + 1;

  std::array<std::vector<double>, k> centered;
  std::array<double, k> norm{};
  std::vector<double> column(rows);
  for (std::size_t c = 0; c < k; ++c) {
    for (Node v = 0; v < counts.node_count(); ++v) {
      column[v] = static_cast<double>(counts.reduced(v, c));
    }
    column[rows - 1] = 1.0;
    auto ranks = average_ranks(column);
    const double mean = std::accumulate(ranks.begin(), ranks.end(), 0.0) / rows;
    double ss = 0.0;
    for (double& r : ranks) {
      r -= mean;
      ss += r * r;
    }
    centered[c] = std::move(ranks);
    norm[c] = std::sqrt(ss);
  }

  GraphletCorrelationMatrix out;
  auto upper = out.upper();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      double r = 1.0;
      if (norm[i] > 0.0 && norm[j] > 0.0) {
        double dot = 0.0;
        for (std::size_t t = 0; t < rows; ++t) dot += centered[i][t] * centered[j][t];
        r = std::clamp(dot / (norm[i] * norm[j]), -1.0, 1.0);
      }
      upper[upper_index(i, j)] = r;
    }
  }
  return out;
}

GraphletCorrelationMatrix gcm(const Graph& g) { return gcm_from_counts(orbit_counts(g)); }

double gcd_distance(const GraphletCorrelationMatrix& a, const GraphletCorrelationMatrix& b) {
  const auto ua = a.upper();
  const auto ub = b.upper();
  double s = 0.0;
  for (std::size_t i = 0; i < ua.size(); ++i) {
    const double d = ua[i] - ub[i];
    s += d * d;
  }
  return std::sqrt(s);
}

}  // namespace divgraph
