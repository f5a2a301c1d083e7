#include "divgraph/toy.hpp"

#include <cstdio>

#include "divgraph/space.hpp"

namespace divgraph {

ToyResult toy_points(const ToyConfig& cfg) {
  cfg.measure.validate();
  const PointSpace space(cfg.dim, cfg.sigma);
  StagePlan plan;
  plan.stages.push_back(Stage{StageKind::LocalOpt, cfg.budget, cfg.K, 0.0});
  auto result = run_pipeline(plan, space, cfg.measure, cfg.count, cfg.seed, PipelineSources<PointSpace>{});
  return {result.state.elements(), std::move(result.report)};
}

void write_points_csv(std::ostream& out, const std::vector<std::vector<double>>& points) {
  const std::size_t dim = points.empty() ? 0 : points.front().size();
  for (std::size_t k = 0; k < dim; ++k) out << (k ? ",x" : "x") << k;
  out << '\n';
  char buf[32];
  for (const auto& p : points) {
    for (std::size_t k = 0; k < p.size(); ++k) {
      std::snprintf(buf, sizeof buf, "%s%.6f", k ? "," : "", p[k]);
      out << buf;
    }
    out << '\n';
  }
}

}  // namespace divgraph
