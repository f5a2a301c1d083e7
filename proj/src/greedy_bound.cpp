#include <bit>
#include <cmath>
#include <cstdint>

#include "divgraph/greedy.hpp"

namespace divgraph {

namespace {

SquareMatrix restrict_to(const SquareMatrix& dist, const std::vector<std::size_t>& idx) {
  SquareMatrix sub(idx.size());
  for (std::size_t a = 0; a < idx.size(); ++a) {
    for (std::size_t b = 0; b < idx.size(); ++b) sub(a, b) = dist(idx[a], idx[b]);
  }
  return sub;
}

}  // namespace

GreedyBoundReport verify_greedy_bound(const SquareMatrix& dist, std::size_t n, const MeasureConfig& cfg) {
  const std::size_t m = dist.size();
  if (m > 12) throw UnsupportedSize("greedy bound check limited to 12 elements");
  if (n < 2 || n > m) throw std::invalid_argument("greedy bound check needs 2 <= n <= m");

  GreedyBoundReport report;
  switch (cfg.measure) {
    case Measure::Average:
    case Measure::Bottleneck: report.factor = 0.5; break;
    case Measure::Energy: report.factor = std::pow(2.0, cfg.gamma); break;
    default: throw std::invalid_argument("greedy bound defined for average, bottleneck and energy only");
  }
  if (cfg.measure == Measure::Energy && cfg.epsilon == 0.0) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        if (dist(i, j) == 0.0) {
          report.skipped = true;
          return report;
        }
      }
    }
  }

  bool have_opt = false;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != n) continue;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask >> i & 1u) idx.push_back(i);
    }
    const double v = diversity(cfg, restrict_to(dist, idx));
    if (!have_opt || v > report.optimum) report.optimum = v;
    have_opt = true;
  }

  const double slack = 1e-12 * std::abs(report.optimum);
  for (std::size_t first = 0; first < m; ++first) {
    const auto picked =
        greedy_indices(m, n, cfg, first, [&](std::size_t a, std::size_t b) { return dist(a, b); });
    const double v = diversity(cfg, restrict_to(dist, picked));
    if (first == 0 || v < report.worst_greedy) report.worst_greedy = v;
    if (v < report.factor * report.optimum - slack) report.holds = false;
  }
  return report;
}

}  // namespace divgraph
