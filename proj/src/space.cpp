#include "divgraph/space.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "divgraph/generators.hpp"

namespace divgraph {

GraphSpace::GraphSpace(DescriptorKind kind, std::size_t n) : kind_(kind), n_(n) {
  if (n < 2) throw std::invalid_argument("graph space needs n >= 2");
}

Graph GraphSpace::mutate(const Graph& g, Rng& rng) const {
  const Node v = static_cast<Node>(uniform_index(rng, n_));
  std::vector<Edge> edges;
  edges.reserve(g.edge_count() + n_);
  for (const auto& e : g.edges()) {
    if (e.first != v && e.second != v) edges.push_back(e);
  }
  const std::size_t k = 1 + uniform_index(rng, n_ - 1);
  std::vector<Node> others;
  others.reserve(n_ - 1);
  for (Node u = 0; u < n_; ++u) {
    if (u != v) others.push_back(u);
  }
  // partial Fisher-Yates: first k entries become a uniform k-subset
  for (std::size_t i = 0; i < k; ++i) {
    std::swap(others[i], others[i + uniform_index(rng, others.size() - i)]);
    edges.emplace_back(v, others[i]);
  }
  return Graph::from_edges(n_, edges);
}

Graph GraphSpace::crossover(const Graph& a, const Graph& b, Rng& rng) const {
  std::vector<bool> from_a(n_);
  for (std::size_t i = 0; i < n_; ++i) from_a[i] = uniform01(rng) < 0.5;
  std::vector<Edge> edges;
  for (Node u = 0; u < n_; ++u) {
    for (Node v = u + 1; v < n_; ++v) {
      bool use_a = from_a[u];
      if (from_a[u] != from_a[v]) use_a = uniform01(rng) < 0.5;
      if ((use_a ? a : b).has_edge(u, v)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n_, edges);
}

Graph GraphSpace::local_move(const Graph& g, Rng& rng) const {
  const std::size_t pairs = n_ * (n_ - 1) / 2;
  std::size_t idx = uniform_index(rng, pairs);
  Node u = 0;
  while (idx >= n_ - 1 - u) {
    idx -= n_ - 1 - u;
    ++u;
  }
  return g.toggle_edge(u, static_cast<Node>(u + 1 + idx));
}

Graph GraphSpace::random_element(Rng& rng) const { return er_mix(n_, rng()); }

PointSpace::PointSpace(std::size_t dim, double sigma) : dim_(dim), sigma_(sigma) {
  if (dim == 0) throw std::invalid_argument("point space needs dim >= 1");
  if (!(sigma > 0.0)) throw std::invalid_argument("point space needs sigma > 0");
}

double PointSpace::distance(const Descriptor& a, const Descriptor& b) const {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

PointSpace::Element PointSpace::mutate(const Element& p, Rng& rng) const {
  std::normal_distribution<double> step(0.0, sigma_);
  Element out(p);
  for (auto& x : out) x = std::clamp(x + step(rng), 0.0, 1.0);
  return out;
}

PointSpace::Element PointSpace::random_element(Rng& rng) const {
  Element p(dim_);
  for (auto& x : p) x = uniform01(rng);
  return p;
}

}  // namespace divgraph
