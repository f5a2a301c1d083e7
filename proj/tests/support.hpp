#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <vector>

#include "divgraph/graph.hpp"
#include "divgraph/orbits.hpp"
#include "divgraph/rng.hpp"

namespace testing {

using divgraph::Edge;
using divgraph::Graph;
using divgraph::Node;

inline Graph random_graph(std::size_t n, double p, divgraph::Rng& rng) {
  std::vector<Edge> edges;
  for (Node u = 0; u < n; ++u) {
    for (Node v = u + 1; v < n; ++v) {
      if (divgraph::uniform01(rng) < p) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

inline Graph relabel(const Graph& g, const std::vector<Node>& perm) {
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph::from_edges(g.node_count(), edges);
}

inline std::vector<Node> random_permutation(std::size_t n, divgraph::Rng& rng) {
  std::vector<Node> perm(n);
  std::iota(perm.begin(), perm.end(), Node{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

inline Graph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Node u = 0; u < n; ++u) {
    for (Node v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

inline Graph star(std::size_t n) {
  std::vector<Edge> edges;
  for (Node v = 1; v < n; ++v) edges.emplace_back(0, v);
  return Graph::from_edges(n, edges);
}

/// Orbit counts by enumerating every 2-, 3- and 4-node subset, keeping the
/// connected induced ones, and naming each node's position from the edge
/// count and its degree inside the subset.
inline divgraph::OrbitCountMatrix brute_force_orbits(const Graph& g) {
  const std::size_t n = g.node_count();
  divgraph::OrbitCountMatrix m(n);
  auto orbit_of = [](std::size_t size, std::size_t edges, std::size_t deg,
                     const std::vector<std::size_t>& degs) -> int {
    if (size == 2) return edges == 1 ? 0 : -1;
    if (size == 3) {
      if (edges == 2) return deg == 1 ? 1 : 2;
      if (edges == 3) return 3;
      return -1;
    }
    const std::size_t max_deg = *std::max_element(degs.begin(), degs.end());
    switch (edges) {
      case 3:
        if (max_deg == 3) return deg == 3 ? 7 : 6;  // claw
        return deg == 1 ? 4 : 5;                     // path
      case 4:
        if (max_deg == 2) return 8;                  // cycle
        return deg == 1 ? 9 : (deg == 2 ? 10 : 11);  // paw
      case 5: return deg == 2 ? 12 : 13;             // diamond
      case 6: return 14;
      default: return -1;                            // disconnected
    }
  };
  std::vector<Node> pick;
  auto visit = [&](auto&& self, Node start, std::size_t want) -> void {
    if (pick.size() == want) {
      std::vector<std::size_t> degs(want, 0);
      std::size_t edges = 0;
      for (std::size_t a = 0; a < want; ++a) {
        for (std::size_t b = a + 1; b < want; ++b) {
          if (g.has_edge(pick[a], pick[b])) {
            ++edges;
            ++degs[a];
            ++degs[b];
          }
        }
      }
      if (edges < want - 1) return;
      // connectivity: 3-edge subsets on 4 nodes could be a triangle + isolated node
      if (std::find(degs.begin(), degs.end(), 0u) != degs.end()) return;
      for (std::size_t a = 0; a < want; ++a) {
        const int o = orbit_of(want, edges, degs[a], degs);
        if (o >= 0) ++m.at(pick[a], static_cast<std::size_t>(o));
      }
      return;
    }
    for (Node v = start; v < n; ++v) {
      pick.push_back(v);
      self(self, v + 1, want);
      pick.pop_back();
    }
  };
  for (std::size_t size = 2; size <= 4; ++size) visit(visit, 0, size);
  return m;
}

}  // namespace testing
