#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "divgraph/graph.hpp"

namespace divgraph {

/// Network portrait: b(l, k) = number of nodes with exactly k nodes at hop
/// distance l, for k >= 1. The k = 0 count of a row is n minus the row sum.
class Portrait {
 public:
  struct Entry {
    std::uint32_t l;
    std::uint32_t k;
    std::uint64_t count;
    friend bool operator==(const Entry&, const Entry&) = default;
  };
  /// One cell of the joint distribution P(k, l).
  struct Mass {
    std::uint32_t l;
    std::uint32_t k;
    double p;
  };

  Portrait(std::size_t n, std::vector<Entry> entries, std::uint64_t pair_normalization);

  std::size_t node_count() const { return n_; }
  /// Nonzero b(l,k), k >= 1, sorted by (l, k).
  const std::vector<Entry>& entries() const { return entries_; }
  std::uint64_t b(std::uint32_t l, std::uint32_t k) const;
  /// Largest finite hop distance.
  std::uint32_t max_distance() const { return max_l_; }
  /// Sum over components of size squared: the number of ordered reachable pairs.
  std::uint64_t pair_normalization() const { return pair_norm_; }
  /// P(k,l) = [sum_k' k' b(l,k') / sum_c n_c^2] * [b(l,k) / n], including the
  /// k = 0 column; nonzero cells sorted by (l, k).
  const std::vector<Mass>& distribution() const { return distribution_; }

 private:
  std::size_t n_;
  std::vector<Entry> entries_;
  std::uint64_t pair_norm_;
  std::uint32_t max_l_ = 0;
  std::vector<Mass> distribution_;
};

Portrait portrait(const Graph& g);

/// Jensen-Shannon divergence (natural log) between the two portrait
/// distributions, over the union of their supports. Lies in [0, ln 2].
double portrait_divergence(const Portrait& a, const Portrait& b);

}  // namespace divgraph
