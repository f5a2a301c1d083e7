#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <numeric>
#include <optional>
#include <vector>

#include "divgraph/budget.hpp"
#include "divgraph/measures.hpp"
#include "divgraph/population.hpp"
#include "divgraph/rng.hpp"
#include "divgraph/space.hpp"

namespace divgraph {

/// K value that disables the forced-accept escape.
inline constexpr std::size_t kNoEscape = std::numeric_limits<std::size_t>::max();

struct GeneticParams {
  std::size_t K = 1000;
  double alpha = 0.1;  // mutation probability
};

struct LocalOptParams {
  std::size_t K = 1000;
};

enum class StepOutcome { Accepted, Rejected, Forced };

/// Rejected candidates since the last accepted update. Nothing changes in
/// the population while candidates are being rejected, so every stored
/// margin stays valid until the escape fires.
template <DiversitySpace S>
class EscapeBuffer {
 public:
  struct Candidate {
    typename S::Element element;
    typename S::Descriptor descriptor;
    std::vector<double> row;
    std::size_t target;
    double margin;
  };

  std::size_t rejections() const { return rejections_; }

  void reject(Candidate c) {
    ++rejections_;
    if (!best_ || c.margin > best_->margin) best_ = std::move(c);
  }

  /// Forces the best rejected candidate into the population once K
  /// rejections have accumulated.
  bool maybe_force(PopulationState<S>& state, std::size_t K) {
    if (K == kNoEscape || rejections_ < K || !best_) return false;
    state.replace(best_->target, std::move(best_->element), std::move(best_->descriptor), best_->row);
    reset();
    return true;
  }

  void reset() {
    rejections_ = 0;
    best_.reset();
  }

 private:
  std::size_t rejections_ = 0;
  std::optional<Candidate> best_;
};

/// weights[i] = rank of element i in the given order, 1..N; ties by index.
inline std::vector<double> rank_weights(const std::vector<double>& fitness, bool worst_first) {
  std::vector<std::size_t> order(fitness.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return worst_first ? fitness[a] < fitness[b] : fitness[a] > fitness[b];
  });
  std::vector<double> w(fitness.size());
  for (std::size_t r = 0; r < order.size(); ++r) w[order[r]] = static_cast<double>(r + 1);
  return w;
}

/// Index drawn with probability proportional to weights; `skip` gets weight 0.
inline std::size_t weighted_index(const std::vector<double>& weights, Rng& rng,
                                  std::size_t skip = std::numeric_limits<std::size_t>::max()) {
  double total = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (i != skip) total += weights[i];
  }
  double r = uniform01(rng) * total;
  std::size_t last = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (i == skip) continue;
    last = i;
    if (r < weights[i]) return i;
    r -= weights[i];
  }
  return last;
}

/// One genetic attempt: rank-weighted parents, crossover, optional
/// mutation, then the child replaces the element whose removal it
/// compensates best, if that improves the fitness there.
template <CrossoverSpace S>
StepOutcome genetic_step(PopulationState<S>& state, const GeneticParams& params, Rng& rng,
                         BudgetLedger& ledger, EscapeBuffer<S>& escape) {
  const S& space = state.space();
  const auto& cfg = state.config();
  const auto weights = rank_weights(state.fitness(), true);
  const std::size_t p1 = weighted_index(weights, rng);
  const std::size_t p2 = weighted_index(weights, rng, p1);
  auto child = space.crossover(state.element(p1), state.element(p2), rng);
  if (uniform01(rng) < params.alpha) child = space.mutate(child, rng);

  auto desc = describe_charged(space, child, ledger);
  auto row = state.distances_to(desc);
  std::vector<double> excl;
  fitness_excluding_each(cfg, row, excl);
  std::size_t target = 0;
  for (std::size_t i = 1; i < state.size(); ++i) {
    if (excl[i] - state.fitness(i) > excl[target] - state.fitness(target)) target = i;
  }
  const double margin = fitness_from_row(cfg, row, target) - state.fitness(target);
  if (margin > 0.0) {
    state.replace(target, std::move(child), std::move(desc), row);
    escape.reset();
    return StepOutcome::Accepted;
  }
  escape.reject({std::move(child), std::move(desc), std::move(row), target, margin});
  return escape.maybe_force(state, params.K) ? StepOutcome::Forced : StepOutcome::Rejected;
}

/// One local attempt: a low-fitness element (inverse-rank weights) gets one
/// local move and keeps it if its fitness against the rest improves.
template <DiversitySpace S>
StepOutcome local_opt_step(PopulationState<S>& state, const LocalOptParams& params, Rng& rng,
                           BudgetLedger& ledger, EscapeBuffer<S>& escape) {
  const S& space = state.space();
  const auto weights = rank_weights(state.fitness(), false);
  const std::size_t target = weighted_index(weights, rng);
  auto moved = space.local_move(state.element(target), rng);

  auto desc = describe_charged(space, moved, ledger);
  auto row = state.distances_to(desc);
  const double margin = fitness_from_row(state.config(), row, target) - state.fitness(target);
  if (margin > 0.0) {
    state.replace(target, std::move(moved), std::move(desc), row);
    escape.reset();
    return StepOutcome::Accepted;
  }
  escape.reject({std::move(moved), std::move(desc), std::move(row), target, margin});
  return escape.maybe_force(state, params.K) ? StepOutcome::Forced : StepOutcome::Rejected;
}

}  // namespace divgraph
