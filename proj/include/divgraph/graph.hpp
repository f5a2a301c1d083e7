#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace divgraph {

using Node = std::uint32_t;
using Edge = std::pair<Node, Node>;

/// Simple undirected graph on nodes 0..n-1.
///
/// Values are immutable once built: mutation (toggle_edge) returns a new
/// graph. Adjacency is kept twice, as sorted neighbor lists and as an n x n
/// bit matrix, so both iteration and O(1) edge queries are cheap.
class Graph {
 public:
  /// Graph with n nodes and no edges. Throws std::invalid_argument if n == 0.
  static Graph empty(std::size_t n);

  /// Graph with exactly the given pairs, deduplicated and oriented u < v.
  /// Throws std::invalid_argument on self-loops or out-of-range endpoints.
  static Graph from_edges(std::size_t n, std::span<const Edge> pairs);

  std::size_t node_count() const { return n_; }
  std::size_t edge_count() const { return edge_count_; }

  bool has_edge(Node u, Node v) const {
    return (bits_[row_offset(u) + (v >> 6)] >> (v & 63)) & 1u;
  }
  std::span<const Node> neighbors(Node u) const { return adj_[u]; }
  std::size_t degree(Node u) const { return adj_[u].size(); }

  /// Row u of the adjacency bit matrix, words_per_row() 64-bit words.
  std::span<const std::uint64_t> adjacency_row(Node u) const {
    return {bits_.data() + row_offset(u), words_};
  }
  std::size_t words_per_row() const { return words_; }

  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  /// Copy with edge (u,v) flipped. Throws std::invalid_argument if u == v or
  /// either endpoint is out of range.
  Graph toggle_edge(Node u, Node v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  explicit Graph(std::size_t n);
  std::size_t row_offset(Node u) const { return static_cast<std::size_t>(u) * words_; }
  void set_bit(Node u, Node v);
  void rebuild_lists();

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::vector<Node>> adj_;
};

/// All-pairs hop distances. Unreachable pairs are std::nullopt.
class HopDistances {
 public:
  explicit HopDistances(std::size_t n) : n_(n), d_(n * n) {}

  std::size_t size() const { return n_; }
  std::optional<std::uint32_t> at(Node u, Node v) const { return d_[u * n_ + v]; }
  void set(Node u, Node v, std::uint32_t hops) { d_[u * n_ + v] = hops; }

 private:
  std::size_t n_;
  std::vector<std::optional<std::uint32_t>> d_;
};

/// Hop counts from `source` to every node; std::nullopt where unreachable.
std::vector<std::optional<std::uint32_t>> bfs_from(const Graph& g, Node source);

HopDistances bfs_all_pairs(const Graph& g);

/// Sizes of the connected components, in order of their smallest node.
std::vector<std::size_t> component_sizes(const Graph& g);

}  // namespace divgraph
