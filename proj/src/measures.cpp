#include "divgraph/measures.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>

#include <Eigen/Dense>

namespace divgraph {

namespace {

constexpr std::pair<Measure, std::string_view> kMeasureNames[] = {
    {Measure::Energy, "energy"},
    {Measure::Average, "average"},
    {Measure::SumAverage, "sum_average"},
    {Measure::Diameter, "diameter"},
    {Measure::SumDiameter, "sum_diameter"},
    {Measure::Bottleneck, "bottleneck"},
    {Measure::SumBottleneck, "sum_bottleneck"},
    {Measure::NumCircles, "num_circles"},
};

void require_pairs(const SquareMatrix& dist) {
  if (dist.size() < 2) throw std::invalid_argument("diversity needs at least two elements");
}

double energy_term(double d, double gamma, double epsilon) {
  const double x = d + epsilon;
  return gamma == 1.0 ? 1.0 / x : 1.0 / std::pow(x, gamma);
}

double ordered_pair_sum(const SquareMatrix& dist) {
  double s = 0.0;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    for (std::size_t j = 0; j < dist.size(); ++j) {
      if (i != j) s += dist(i, j);
    }
  }
  return s;
}

template <class Pick>
double per_element_extreme_sum(const SquareMatrix& dist, Pick pick) {
  double total = 0.0;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    double best = std::numeric_limits<double>::quiet_NaN();
    for (std::size_t j = 0; j < dist.size(); ++j) {
      if (i == j) continue;
      best = std::isnan(best) ? dist(i, j) : pick(best, dist(i, j));
    }
    total += best;
  }
  return total;
}

template <class Pick>
double pair_extreme(const SquareMatrix& dist, Pick pick) {
  double best = dist(0, 1);
  for (std::size_t i = 0; i < dist.size(); ++i) {
    for (std::size_t j = i + 1; j < dist.size(); ++j) best = pick(best, dist(i, j));
  }
  return best;
}

void grow_clique(const std::vector<std::uint32_t>& adj, std::uint32_t candidates, std::size_t size,
                 std::size_t& best) {
  if (candidates == 0) {
    best = std::max(best, size);
    return;
  }
  while (candidates != 0) {
    if (size + static_cast<std::size_t>(std::popcount(candidates)) <= best) return;
    const int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    grow_clique(adj, candidates & adj[v], size + 1, best);
  }
}

}  // namespace

std::string_view to_string(Measure m) {
  for (const auto& [tag, name] : kMeasureNames) {
    if (tag == m) return name;
  }
  return "?";
}

Measure parse_measure(std::string_view name) {
  for (const auto& [tag, n] : kMeasureNames) {
    if (n == name) return tag;
  }
  std::string valid;
  for (const auto& [tag, n] : kMeasureNames) {
    if (!valid.empty()) valid += ", ";
    valid += n;
  }
  throw std::invalid_argument("unknown measure '" + std::string(name) + "' (valid: " + valid + ")");
}

void MeasureConfig::validate() const {
  if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be > 0");
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be > 0");
  if (measure == Measure::NumCircles && !(threshold >= 0.0)) {
    throw std::invalid_argument("num_circles threshold must be >= 0");
  }
}

double energy_signed(const SquareMatrix& dist, double gamma, double epsilon) {
  require_pairs(dist);
  const std::size_t n = dist.size();
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) s += energy_term(dist(i, j), gamma, epsilon);
    }
  }
  return -s / static_cast<double>(n * (n - 1));
}

double energy_penalty(const SquareMatrix& dist, double epsilon) {
  return -energy_signed(dist, 1.0, epsilon);
}

double average(const SquareMatrix& dist) {
  require_pairs(dist);
  const double n = static_cast<double>(dist.size());
  return ordered_pair_sum(dist) / (n * (n - 1.0));
}

double sum_average(const SquareMatrix& dist) {
  require_pairs(dist);
  return ordered_pair_sum(dist) / static_cast<double>(dist.size());
}

double diameter(const SquareMatrix& dist) {
  require_pairs(dist);
  return pair_extreme(dist, [](double a, double b) { return std::max(a, b); });
}

double sum_diameter(const SquareMatrix& dist) {
  require_pairs(dist);
  return per_element_extreme_sum(dist, [](double a, double b) { return std::max(a, b); });
}

double bottleneck(const SquareMatrix& dist) {
  require_pairs(dist);
  return pair_extreme(dist, [](double a, double b) { return std::min(a, b); });
}

double sum_bottleneck(const SquareMatrix& dist) {
  require_pairs(dist);
  return per_element_extreme_sum(dist, [](double a, double b) { return std::min(a, b); });
}

std::size_t num_circles(const SquareMatrix& dist, double t) {
  const std::size_t n = dist.size();
  if (n > 25) {
    throw UnsupportedSize("num_circles: exact search limited to 25 elements, got " +
                          std::to_string(n));
  }
  if (n == 0) return 0;
  std::vector<std::uint32_t> adj(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && dist(i, j) > t) adj[i] |= std::uint32_t{1} << j;
    }
  }
  std::size_t best = 1;
  grow_clique(adj, (n == 32 ? ~0u : (std::uint32_t{1} << n) - 1), 0, best);
  return best;
}

double vendi_score(const SquareMatrix& similarity) {
  const std::size_t n = similarity.size();
  if (n == 0) throw std::invalid_argument("vendi_score: empty matrix");
  Eigen::MatrixXd k(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(similarity(i, i) - 1.0) > 1e-9) {
      throw std::invalid_argument("vendi_score: diagonal entries must be 1");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (std::abs(similarity(i, j) - similarity(j, i)) > 1e-9) {
        throw std::invalid_argument("vendi_score: matrix must be symmetric");
      }
      k(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = similarity(i, j) / n;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(k, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("vendi_score: eigensolver failed");
  double entropy = 0.0;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    const double lambda = solver.eigenvalues()(i);
    if (lambda < -1e-9) throw std::invalid_argument("vendi_score: matrix is not PSD");
    if (lambda > 0.0) entropy -= lambda * std::log(lambda);
  }
  return std::exp(entropy);
}

double diversity(const MeasureConfig& cfg, const SquareMatrix& dist) {
  switch (cfg.measure) {
    case Measure::Energy: return energy_signed(dist, cfg.gamma, cfg.epsilon);
    case Measure::Average: return average(dist);
    case Measure::SumAverage: return sum_average(dist);
    case Measure::Diameter: return diameter(dist);
    case Measure::SumDiameter: return sum_diameter(dist);
    case Measure::Bottleneck: return bottleneck(dist);
    case Measure::SumBottleneck: return sum_bottleneck(dist);
    case Measure::NumCircles: return static_cast<double>(num_circles(dist, cfg.threshold));
  }
  return 0.0;
}

double fitness_from_row(const MeasureConfig& cfg, std::span<const double> row, std::size_t self) {
  FitnessAccumulator acc;
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (j != self) acc.add(cfg, row[j]);
  }
  return acc.value(cfg);
}

void FitnessAccumulator::add(const MeasureConfig& cfg, double d) {
  switch (cfg.measure) {
    case Measure::Energy: sum_ += energy_term(d, cfg.gamma, cfg.epsilon); break;
    case Measure::Average:
    case Measure::SumAverage: sum_ += d; break;
    case Measure::NumCircles: sum_ += d > cfg.threshold ? 1.0 : 0.0; break;
    default: break;
  }
  min_ = count_ == 0 ? d : std::min(min_, d);
  max_ = count_ == 0 ? d : std::max(max_, d);
  ++count_;
}

double FitnessAccumulator::value(const MeasureConfig& cfg) const {
  if (count_ == 0) return 0.0;
  const double m = static_cast<double>(count_);
  switch (cfg.measure) {
    case Measure::Energy: return -sum_ / m;
    case Measure::Average:
    case Measure::SumAverage:
    case Measure::NumCircles: return sum_ / m;
    case Measure::Diameter:
    case Measure::SumDiameter: return max_;
    case Measure::Bottleneck:
    case Measure::SumBottleneck: return min_;
  }
  return 0.0;
}

void fitness_excluding_each(const MeasureConfig& cfg, std::span<const double> dists,
                            std::vector<double>& out) {
  const std::size_t n = dists.size();
  out.assign(n, 0.0);
  if (n < 2) return;
  const double others = static_cast<double>(n - 1);
  switch (cfg.measure) {
    case Measure::Energy:
    case Measure::Average:
    case Measure::SumAverage:
    case Measure::NumCircles: {
      std::vector<double> terms(n);
      double total = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        double t = dists[i];
        if (cfg.measure == Measure::Energy) t = energy_term(t, cfg.gamma, cfg.epsilon);
        if (cfg.measure == Measure::NumCircles) t = t > cfg.threshold ? 1.0 : 0.0;
        terms[i] = t;
        total += t;
      }
      const double sign = cfg.measure == Measure::Energy ? -1.0 : 1.0;
      for (std::size_t i = 0; i < n; ++i) out[i] = sign * (total - terms[i]) / others;
      return;
    }
    case Measure::Diameter:
    case Measure::SumDiameter:
    case Measure::Bottleneck:
    case Measure::SumBottleneck: {
      const bool want_max = cfg.measure == Measure::Diameter || cfg.measure == Measure::SumDiameter;
      auto better = [&](double a, double b) { return want_max ? a > b : a < b; };
      std::size_t first = 0;
      for (std::size_t i = 1; i < n; ++i) {
        if (better(dists[i], dists[first])) first = i;
      }
      std::size_t second = first == 0 ? 1 : 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (i != first && better(dists[i], dists[second])) second = i;
      }
      for (std::size_t i = 0; i < n; ++i) out[i] = i == first ? dists[second] : dists[first];
      return;
    }
  }
}

}  // namespace divgraph
