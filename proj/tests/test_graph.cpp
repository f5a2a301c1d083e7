#include <doctest.h>

#include <sstream>

#include "divgraph/graph.hpp"
#include "divgraph/graph_io.hpp"
#include "support.hpp"

using namespace divgraph;

TEST_CASE("empty graph construction") {
  const auto g = Graph::empty(16);
  CHECK(g.node_count() == 16);
  CHECK(g.edge_count() == 0);
  CHECK(Graph::empty(1).node_count() == 1);
  CHECK_THROWS_AS(Graph::empty(0), std::invalid_argument);
}

TEST_CASE("from_edges normalizes and validates") {
  const std::vector<Edge> tri{{0, 1}, {1, 2}, {0, 2}};
  const auto k3 = Graph::from_edges(3, tri);
  CHECK(k3.edge_count() == 3);
  CHECK(k3.has_edge(2, 0));

  const std::vector<Edge> dup{{0, 1}, {1, 0}};
  CHECK(Graph::from_edges(3, dup).edge_count() == 1);

  const std::vector<Edge> loop{{0, 0}};
  CHECK_THROWS_AS(Graph::from_edges(2, loop), std::invalid_argument);
  const std::vector<Edge> out{{0, 2}};
  CHECK_THROWS_AS(Graph::from_edges(2, out), std::invalid_argument);
}

TEST_CASE("adjacency agrees with edge set") {
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = testing::random_graph(1 + trial % 20, 0.3, rng);
    std::size_t listed = 0;
    for (Node u = 0; u < g.node_count(); ++u) {
      listed += g.degree(u);
      for (Node v : g.neighbors(u)) CHECK(g.has_edge(v, u));
    }
    CHECK(listed == 2 * g.edge_count());
    CHECK(g.edges().size() == g.edge_count());
  }
}

TEST_CASE("toggle_edge") {
  const auto k3 = testing::complete(3);
  const auto p3 = k3.toggle_edge(0, 1);
  CHECK(p3.edge_count() == 2);
  CHECK_FALSE(p3.has_edge(0, 1));
  CHECK(p3.toggle_edge(0, 1) == k3);
  CHECK(Graph::empty(2).toggle_edge(0, 1).edge_count() == 1);
  CHECK_THROWS_AS(k3.toggle_edge(1, 1), std::invalid_argument);

  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = testing::random_graph(9, 0.5, rng);
    const Node u = static_cast<Node>(uniform_index(rng, 9));
    const Node v = static_cast<Node>((u + 1 + uniform_index(rng, 8)) % 9);
    CHECK(g.toggle_edge(u, v).toggle_edge(u, v) == g);
  }
}

TEST_CASE("bfs_all_pairs") {
  const std::vector<Edge> path{{0, 1}, {1, 2}};
  const auto d = bfs_all_pairs(Graph::from_edges(3, path));
  CHECK(d.at(0, 2) == 2u);
  CHECK(d.at(1, 1) == 0u);
  CHECK_FALSE(bfs_all_pairs(Graph::empty(2)).at(0, 1).has_value());
  const auto k4 = bfs_all_pairs(testing::complete(4));
  for (Node u = 0; u < 4; ++u) {
    for (Node v = 0; v < 4; ++v) CHECK(k4.at(u, v) == (u == v ? 0u : 1u));
  }
}

TEST_CASE("bfs distances are a metric on reachable pairs") {
  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = testing::random_graph(12, 0.15, rng);
    const auto d = bfs_all_pairs(g);
    for (Node u = 0; u < 12; ++u) {
      for (Node v = 0; v < 12; ++v) {
        CHECK(d.at(u, v) == d.at(v, u));
        if (u != v) CHECK((d.at(u, v) == 1u) == g.has_edge(u, v));
        for (Node w = 0; w < 12; ++w) {
          if (d.at(u, v) && d.at(v, w)) {
            REQUIRE(d.at(u, w).has_value());
            CHECK(*d.at(u, w) <= *d.at(u, v) + *d.at(v, w));
          }
        }
      }
    }
  }
}

TEST_CASE("component sizes") {
  const std::vector<Edge> e{{0, 1}, {3, 4}, {4, 5}};
  const auto sizes = component_sizes(Graph::from_edges(6, e));
  CHECK(sizes == std::vector<std::size_t>{2, 1, 3});
}

TEST_CASE("graph record round trip") {
  const auto k3 = testing::complete(3);
  CHECK(encode(k3) == R"({"n":3,"edges":[[0,1],[0,2],[1,2]]})");
  CHECK(decode(encode(k3)) == k3);
  CHECK(encode(Graph::empty(2)) == R"({"n":2,"edges":[]})");

  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = testing::random_graph(1 + trial % 17, 0.4, rng);
    const auto text = encode(g);
    CHECK(decode(text) == g);
    CHECK(encode(decode(text)) == text);
  }
}

TEST_CASE("graph record errors carry position") {
  CHECK_THROWS_AS(decode(R"({"n":6,"edges":[[5,5]]})"), ParseError);
  CHECK_THROWS_AS(decode(R"({"n":2,"edges":[[0,2]]})"), ParseError);
  CHECK_THROWS_AS(decode(R"({"n":0,"edges":[]})"), ParseError);
  CHECK_THROWS_AS(decode(R"({"n":2,"edges":[],"x":1})"), ParseError);
  CHECK_THROWS_AS(decode(R"({"n":2,"edges":[[0]]})"), ParseError);

  std::istringstream in("{\"n\":2,\"edges\":[]}\n\n{\"n\":2,\"edges\":[[0,1]\n");
  try {
    read_graph_set(in);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.offset() > 0);
  }
}

TEST_CASE("graph set files skip blank lines") {
  std::ostringstream out;
  const std::vector<Graph> gs{testing::complete(3), Graph::empty(4)};
  write_graph_set(out, gs);
  std::istringstream in(out.str() + "\n");
  CHECK(read_graph_set(in) == gs);
}
