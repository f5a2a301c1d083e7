#include <doctest.h>

#include <cmath>
#include <variant>

#include "divgraph/generators.hpp"
#include "divgraph/graph_io.hpp"
#include "support.hpp"

using namespace divgraph;

TEST_CASE("degenerate ER probabilities") {
  CHECK(sample(ErSpec{0.0}, 16, 1).edge_count() == 0);
  CHECK(sample(ErSpec{1.0}, 16, 1).edge_count() == 120);
  CHECK_THROWS_AS(sample(ErSpec{1.5}, 16, 1), std::invalid_argument);
}

TEST_CASE("ER edge frequency within three standard errors") {
  const double p = 0.3;
  const std::size_t n = 10;
  const std::size_t samples = 10000;
  double edges = 0;
  for (std::size_t s = 0; s < samples; ++s) edges += static_cast<double>(sample(ErSpec{p}, n, s).edge_count());
  const double trials = static_cast<double>(samples) * 45.0;
  const double se = std::sqrt(p * (1 - p) / trials);
  CHECK(std::abs(edges / trials - p) < 3 * se);
}

TEST_CASE("regular graphs") {
  for (unsigned d : {1u, 2u, 4u, 8u, 10u}) {
    for (Seed s = 0; s < 5; ++s) {
      const auto g = sample(RegularSpec{d}, 16, s);
      for (Node v = 0; v < 16; ++v) CHECK(g.degree(v) == d);
    }
  }
  CHECK_THROWS_AS(sample(RegularSpec{3}, 15, 1), std::invalid_argument);
  CHECK_THROWS_AS(sample(RegularSpec{16}, 16, 1), std::invalid_argument);
}

TEST_CASE("geometric graph with a large radius is complete") {
  CHECK(sample(GeometricSpec{2, 2.0}, 16, 3).edge_count() == 120);
}

TEST_CASE("growth models respect the per-node edge limit") {
  for (Seed s = 0; s < 20; ++s) {
    for (unsigned m : {1u, 2u, 4u}) {
      const auto pa = sample(PrefAttachSpec{m, static_cast<double>(m)}, 16, s);
      CHECK(pa.node_count() == 16);
      CHECK(pa.edge_count() <= (16 - m) * m);
    }
    for (unsigned m : {2u, 4u}) {
      const auto hk = sample(HolmeKimSpec{m, 0.5}, 16, s);
      CHECK(hk.node_count() == 16);
      CHECK(hk.edge_count() <= (16 - m) * m);
    }
  }
}

TEST_CASE("SBM block frequencies") {
  const std::size_t n = 12;
  const double p = 0.6, q = 0.1;
  double in_e = 0, in_t = 0, out_e = 0, out_t = 0;
  for (Seed s = 0; s < 3000; ++s) {
    const auto g = sample(SbmSpec{2, p, q}, n, s);
    for (Node u = 0; u < n; ++u) {
      for (Node v = u + 1; v < n; ++v) {
        const bool same = detail::sbm_block(u, n, 2) == detail::sbm_block(v, n, 2);
        (same ? in_e : out_e) += g.has_edge(u, v);
        (same ? in_t : out_t) += 1;
      }
    }
  }
  CHECK(std::abs(in_e / in_t - p) < 3 * std::sqrt(p * (1 - p) / in_t));
  CHECK(std::abs(out_e / out_t - q) < 3 * std::sqrt(q * (1 - q) / out_t));
}

TEST_CASE("SBM blocks are balanced") {
  for (std::size_t blocks : {2u, 3u}) {
    std::vector<std::size_t> sizes(blocks);
    for (std::size_t v = 0; v < 16; ++v) ++sizes[detail::sbm_block(v, 16, blocks)];
    const auto [lo, hi] = std::minmax_element(sizes.begin(), sizes.end());
    CHECK(*hi - *lo <= 1);
  }
}

TEST_CASE("Chung-Lu probabilities") {
  Rng rng(4);
  const auto w = detail::chung_lu_weights(16, 2.0, rng);
  double sum = 0;
  for (double x : w) sum += x;
  for (std::size_t i = 0; i < w.size(); ++i) {
    CHECK(w[i] >= 1.0);
    for (std::size_t j = 0; j < w.size(); ++j) {
      const double p = detail::chung_lu_probability(w, sum, i, j);
      CHECK(p == doctest::Approx(std::min(1.0, w[i] * w[j] / sum)));
      CHECK(p <= 1.0);
    }
  }
}

TEST_CASE("ensemble grid") {
  const auto grid = ensemble_grid(16);
  CHECK(grid.size() == 45);
  std::size_t er = 0;
  for (const auto& s : grid) er += std::holds_alternative<ErSpec>(s);
  CHECK(er == 7);
  CHECK(label(grid.front()) == label(ensemble_grid(16).front()));
  for (std::size_t i = 0; i < grid.size(); ++i) CHECK(label(grid[i]) == label(ensemble_grid(16)[i]));
  for (const auto& s : grid) CHECK_NOTHROW(validate(s, 16));
}

TEST_CASE("sample_pool is round-robin and deterministic") {
  const auto empties = sample_pool({ErSpec{0.0}}, 3, 8, 1);
  CHECK(empties.size() == 3);
  for (const auto& g : empties) CHECK(g.edge_count() == 0);

  const auto grid = ensemble_grid(16);
  const auto a = sample_pool(grid, 45, 16, 9);
  const auto b = sample_pool(grid, 45, 16, 9);
  CHECK(a == b);
  for (std::size_t i = 0; i < 45; ++i) CHECK(a[i] == sample(grid[i], 16, derive_seed(9, i)));

  const GeneratorPool pool(grid, 90, 16, 9);
  CHECK(pool.at(50) == sample(grid[5], 16, derive_seed(9, 50)));
}

TEST_CASE("ER-mix mean edge count") {
  double edges = 0;
  for (Seed s = 0; s < 1000; ++s) edges += static_cast<double>(er_mix(16, s).edge_count());
  CHECK(std::abs(edges / 1000 - 60.0) <= 5.0);
  CHECK(er_mix(16, 42) == er_mix(16, 42));
}
