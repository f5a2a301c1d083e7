#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "divgraph/measures.hpp"
#include "divgraph/population.hpp"
#include "divgraph/rng.hpp"
#include "divgraph/space.hpp"

namespace divgraph {

class InsufficientPool : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Random-access source of candidate elements. at(i) must be deterministic.
template <class Element>
class ElementPool {
 public:
  virtual ~ElementPool() = default;
  virtual std::size_t size() const = 0;
  virtual Element at(std::size_t i) const = 0;
};

template <class Element>
class VectorPool final : public ElementPool<Element> {
 public:
  explicit VectorPool(std::vector<Element> items) : items_(std::move(items)) {}
  std::size_t size() const override { return items_.size(); }
  Element at(std::size_t i) const override { return items_[i]; }

 private:
  std::vector<Element> items_;
};

/// Greedy selection of n out of m candidates, where dist(c, s) gives the
/// distance between candidates c and s. Starts from `first`; each step adds
/// the unselected candidate with the highest fitness against the selected
/// set, lowest index on ties. Returns indices in selection order.
template <class DistFn>
std::vector<std::size_t> greedy_indices(std::size_t m, std::size_t n, const MeasureConfig& cfg,
                                        std::size_t first, DistFn&& dist) {
  if (n > m) throw InsufficientPool("greedy: pool of " + std::to_string(m) + " < " + std::to_string(n));
  if (first >= m) throw std::invalid_argument("greedy: first pick out of range");
  std::vector<std::size_t> picked{first};
  picked.reserve(n);
  std::vector<char> taken(m, 0);
  taken[first] = 1;
  std::vector<FitnessAccumulator> acc(m);
  std::size_t last = first;
  while (picked.size() < n) {
    std::size_t best = m;
    double best_value = 0.0;
    for (std::size_t c = 0; c < m; ++c) {
      if (taken[c]) continue;
      acc[c].add(cfg, dist(c, last));
      const double v = acc[c].value(cfg);
      if (best == m || v > best_value) {
        best = c;
        best_value = v;
      }
    }
    taken[best] = 1;
    picked.push_back(best);
    last = best;
  }
  return picked;
}

/// Greedy over `carry` (free, already described) followed by the first
/// min(pool.size(), ledger.remaining()) pool elements, each charged once.
/// Only descriptors are kept for pool elements; the chosen ones are
/// regenerated through pool.at().
template <DiversitySpace S>
PopulationState<S> greedy_select(const ElementPool<typename S::Element>& pool, std::size_t n,
                                 const MeasureConfig& cfg, const S& space, Rng& rng,
                                 BudgetLedger& ledger, std::optional<std::size_t> first = {},
                                 const PopulationState<S>* carry = nullptr) {
  using Desc = typename S::Descriptor;
  const std::size_t free_count = carry ? carry->size() : 0;
  const std::size_t pooled = std::min(pool.size(), ledger.remaining());
  const std::size_t m = free_count + pooled;
  if (m < n) {
    throw InsufficientPool("greedy: " + std::to_string(m) + " candidates within budget, need " +
                           std::to_string(n));
  }
  std::vector<Desc> descs;
  descs.reserve(m);
  for (std::size_t i = 0; i < free_count; ++i) descs.push_back(carry->descriptor(i));
  for (std::size_t i = 0; i < pooled; ++i) descs.push_back(describe_charged(space, pool.at(i), ledger));

  const std::size_t start = first ? *first : uniform_index(rng, m);
  const auto picked = greedy_indices(m, n, cfg, start, [&](std::size_t a, std::size_t b) {
    return space.distance(descs[a], descs[b]);
  });

  std::vector<typename S::Element> elements;
  std::vector<Desc> chosen;
  elements.reserve(n);
  chosen.reserve(n);
  for (std::size_t idx : picked) {
    elements.push_back(idx < free_count ? carry->element(idx) : pool.at(idx - free_count));
    chosen.push_back(std::move(descs[idx]));
  }
  return PopulationState<S>(space, cfg, std::move(elements), std::move(chosen));
}

struct GreedyBoundReport {
  double optimum = 0.0;
  double worst_greedy = 0.0;  // over every possible first pick
  double factor = 0.0;        // guaranteed ratio: 1/2 or 2^gamma
  bool holds = true;
  bool skipped = false;       // Energy with a zero distance and epsilon = 0
};

/// Exhaustive check of the greedy guarantee on an m x m distance table
/// (m <= 12): Average and Bottleneck need greedy >= opt/2, Energy needs
/// greedy >= 2^gamma * opt. Other measures throw std::invalid_argument.
GreedyBoundReport verify_greedy_bound(const SquareMatrix& dist, std::size_t n, const MeasureConfig& cfg);

}  // namespace divgraph
