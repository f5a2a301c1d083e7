#pragma once

#include <concepts>
#include <cstddef>
#include <vector>

#include "divgraph/budget.hpp"
#include "divgraph/descriptor.hpp"
#include "divgraph/graph.hpp"
#include "divgraph/rng.hpp"

namespace divgraph {

/// An element space the optimizers can work over.
template <class S>
concept DiversitySpace = requires(const S& s, const typename S::Element& e,
                                  const typename S::Descriptor& d, Rng& rng) {
  { s.describe(e) } -> std::same_as<typename S::Descriptor>;
  { s.distance(d, d) } -> std::convertible_to<double>;
  { s.mutate(e, rng) } -> std::same_as<typename S::Element>;
  { s.local_move(e, rng) } -> std::same_as<typename S::Element>;
  { s.random_element(rng) } -> std::same_as<typename S::Element>;
};

template <class S>
concept CrossoverSpace = DiversitySpace<S> && requires(const S& s, const typename S::Element& e, Rng& rng) {
  { s.crossover(e, e, rng) } -> std::same_as<typename S::Element>;
};

/// describe() plus one ledger charge.
template <DiversitySpace S>
typename S::Descriptor describe_charged(const S& space, const typename S::Element& e,
                                        BudgetLedger& ledger) {
  ledger.charge();
  return space.describe(e);
}

/// Graphs on n nodes compared through one descriptor kind.
class GraphSpace {
 public:
  using Element = Graph;
  using Descriptor = divgraph::Descriptor;

  GraphSpace(DescriptorKind kind, std::size_t n);

  DescriptorKind kind() const { return kind_; }
  std::size_t node_count() const { return n_; }

  Descriptor describe(const Graph& g) const { return divgraph::describe(kind_, g); }
  double distance(const Descriptor& a, const Descriptor& b) const { return divgraph::distance(a, b); }

  /// Rewire one uniform node: drop its edges, then link it to k distinct
  /// uniform other nodes, k uniform in {1..n-1}.
  Graph mutate(const Graph& g, Rng& rng) const;
  /// Each node goes to parent a or b with probability 1/2. Pairs on one side
  /// copy that parent; mixed pairs copy a per-pair uniformly chosen parent.
  Graph crossover(const Graph& a, const Graph& b, Rng& rng) const;
  /// Toggle one uniformly chosen node pair.
  Graph local_move(const Graph& g, Rng& rng) const;
  /// ER-mix graph.
  Graph random_element(Rng& rng) const;

 private:
  DescriptorKind kind_;
  std::size_t n_;
};

/// Points in the unit box [0,1]^d under Euclidean distance.
class PointSpace {
 public:
  using Element = std::vector<double>;
  using Descriptor = std::vector<double>;

  explicit PointSpace(std::size_t dim, double sigma = 0.05);

  std::size_t dim() const { return dim_; }

  Descriptor describe(const Element& p) const { return p; }
  double distance(const Descriptor& a, const Descriptor& b) const;
  /// Gaussian step of standard deviation sigma per coordinate, clipped to the box.
  Element mutate(const Element& p, Rng& rng) const;
  Element local_move(const Element& p, Rng& rng) const { return mutate(p, rng); }
  Element random_element(Rng& rng) const;

 private:
  std::size_t dim_;
  double sigma_;
};

}  // namespace divgraph
