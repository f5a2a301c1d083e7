#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "divgraph/graph.hpp"

namespace divgraph {

/// Orbits of the connected 2-, 3- and 4-node graphlets, standard numbering:
///   0 edge | 1,2 path P3 (end, middle) | 3 triangle
///   4,5 path P4 (end, middle) | 6,7 star (leaf, center) | 8 cycle C4
///   9,10,11 paw (tail end, triangle degree-2, degree-3)
///   12,13 diamond (degree 2, degree 3) | 14 K4
inline constexpr std::size_t kOrbitCount = 15;

/// The 11 non-redundant orbits used for the graphlet correlation matrix.
inline constexpr std::array<std::size_t, 11> kNonRedundantOrbits{0, 1, 2, 4, 5, 6,
                                                                 7, 8, 9, 10, 11};

/// Per-node counts of induced graphlet occurrences, one column per orbit.
class OrbitCountMatrix {
 public:
  explicit OrbitCountMatrix(std::size_t n) : n_(n), counts_(n * kOrbitCount, 0) {}

  std::size_t node_count() const { return n_; }
  std::uint64_t at(Node v, std::size_t orbit) const { return counts_[v * kOrbitCount + orbit]; }
  std::uint64_t& at(Node v, std::size_t orbit) { return counts_[v * kOrbitCount + orbit]; }
  /// Column j of the n x 11 reduced view.
  std::uint64_t reduced(Node v, std::size_t j) const { return at(v, kNonRedundantOrbits[j]); }

  friend bool operator==(const OrbitCountMatrix&, const OrbitCountMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<std::uint64_t> counts_;
};

/// Exact induced orbit counts. Each node's counts of non-induced pattern
/// copies come from degree and common-neighbor sums; the induced counts then
/// follow by subtracting the copies hidden inside denser graphlets, from K4
/// downwards.
OrbitCountMatrix orbit_counts(const Graph& g);

}  // namespace divgraph
