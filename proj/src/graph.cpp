#include "divgraph/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace divgraph {

Graph::Graph(std::size_t n)
    : n_(n), words_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0), adj_(n) {}

Graph Graph::empty(std::size_t n) {
  if (n == 0) throw std::invalid_argument("graph must have at least one node");
  return Graph(n);
}

void Graph::set_bit(Node u, Node v) {
  bits_[row_offset(u) + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  bits_[row_offset(v) + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

void Graph::rebuild_lists() {
  edge_count_ = 0;
  for (Node u = 0; u < n_; ++u) {
    auto& list = adj_[u];
    list.clear();
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t word = bits_[row_offset(u) + w];
      while (word != 0) {
        list.push_back(static_cast<Node>(w * 64 + std::countr_zero(word)));
        word &= word - 1;
      }
    }
    edge_count_ += list.size();
  }
  edge_count_ /= 2;
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> pairs) {
  Graph g = empty(n);
  for (const auto& [u, v] : pairs) {
    if (u >= n || v >= n) {
      throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") has an endpoint outside [0," + std::to_string(n) + ")");
    }
    if (u == v) throw std::invalid_argument("self-loop at node " + std::to_string(u));
    g.set_bit(u, v);
  }
  g.rebuild_lists();
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Node u = 0; u < n_; ++u) {
    for (Node v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::toggle_edge(Node u, Node v) const {
  if (u >= n_ || v >= n_) throw std::invalid_argument("toggle_edge: node out of range");
  if (u == v) throw std::invalid_argument("toggle_edge: u == v");
  Graph g = *this;
  g.bits_[row_offset(u) + (v >> 6)] ^= std::uint64_t{1} << (v & 63);
  g.bits_[row_offset(v) + (u >> 6)] ^= std::uint64_t{1} << (u & 63);
  auto update = [](std::vector<Node>& list, Node x, bool add) {
    auto it = std::lower_bound(list.begin(), list.end(), x);
    if (add) {
      list.insert(it, x);
    } else {
      list.erase(it);
    }
  };
  const bool add = !has_edge(u, v);
  update(g.adj_[u], v, add);
  update(g.adj_[v], u, add);
  g.edge_count_ = add ? edge_count_ + 1 : edge_count_ - 1;
  return g;
}

std::vector<std::optional<std::uint32_t>> bfs_from(const Graph& g, Node source) {
  std::vector<std::optional<std::uint32_t>> dist(g.node_count());
  std::vector<Node> frontier{source};
  std::vector<Node> next;
  dist[source] = 0;
  std::uint32_t depth = 0;
  while (!frontier.empty()) {
    ++depth;
    next.clear();
    for (Node u : frontier) {
      for (Node v : g.neighbors(u)) {
        if (!dist[v]) {
          dist[v] = depth;
          next.push_back(v);
        }
      }
    }
    frontier.swap(next);
  }
  return dist;
}

HopDistances bfs_all_pairs(const Graph& g) {
  HopDistances out(g.node_count());
  for (Node s = 0; s < g.node_count(); ++s) {
    const auto row = bfs_from(g, s);
    for (Node t = 0; t < g.node_count(); ++t) {
      if (row[t]) out.set(s, t, *row[t]);
    }
  }
  return out;
}

std::vector<std::size_t> component_sizes(const Graph& g) {
  std::vector<bool> seen(g.node_count(), false);
  std::vector<std::size_t> sizes;
  std::vector<Node> stack;
  for (Node s = 0; s < g.node_count(); ++s) {
    if (seen[s]) continue;
    std::size_t size = 0;
    stack.push_back(s);
    seen[s] = true;
    while (!stack.empty()) {
      Node u = stack.back();
      stack.pop_back();
      ++size;
      for (Node v : g.neighbors(u)) {
        if (!seen[v]) {
          seen[v] = true;
          stack.push_back(v);
        }
      }
    }
    sizes.push_back(size);
  }
  return sizes;
}

}  // namespace divgraph
