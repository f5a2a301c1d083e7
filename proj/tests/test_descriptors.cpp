#include <doctest.h>

#include <cmath>
#include <numeric>
#include <sstream>

#include "divgraph/descriptor.hpp"
#include "divgraph/descriptor_io.hpp"
#include "divgraph/gcm.hpp"
#include "divgraph/netlsd.hpp"
#include "divgraph/orbits.hpp"
#include "divgraph/portrait.hpp"
#include "divgraph/spectrum.hpp"
#include "support.hpp"

using namespace divgraph;

namespace {

std::vector<Edge> pairs(std::initializer_list<Edge> e) { return e; }

}  // namespace

TEST_CASE("normalized Laplacian spectra of small graphs") {
  const auto k2 = normalized_laplacian_spectrum(testing::complete(2));
  CHECK(k2[0] == doctest::Approx(0.0));
  CHECK(k2[1] == doctest::Approx(2.0));
  for (double x : normalized_laplacian_spectrum(Graph::empty(4))) CHECK(x == 0.0);
  const auto k3 = normalized_laplacian_spectrum(testing::complete(3));
  CHECK(k3[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(k3[1] == doctest::Approx(1.5));
  CHECK(k3[2] == doctest::Approx(1.5));
}

TEST_CASE("spectrum range and trace") {
  Rng rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = testing::random_graph(2 + trial % 30, 0.2, rng);
    const auto s = normalized_laplacian_spectrum(g);
    REQUIRE(s.size() == g.node_count());
    CHECK(std::is_sorted(s.begin(), s.end()));
    double trace = 0;
    for (Node v = 0; v < g.node_count(); ++v) trace += g.degree(v) > 0 ? 1.0 : 0.0;
    CHECK(std::accumulate(s.begin(), s.end(), 0.0) == doctest::Approx(trace).epsilon(1e-9));
    CHECK(s.front() >= -1e-9);
    CHECK(s.back() <= 2 + 1e-9);
  }
  CHECK_NOTHROW(normalized_laplacian_spectrum(testing::random_graph(256, 0.1, rng)));
}

TEST_CASE("NetLSD signatures") {
  Rng rng(8);
  const auto g = testing::random_graph(16, 0.4, rng);
  const auto h = netlsd_heat(g);
  CHECK(heat_timestamps().front() == doctest::Approx(1e-2));
  CHECK(heat_timestamps().back() == doctest::Approx(1e2));
  CHECK(h.values[0] == doctest::Approx(16.0).epsilon(0.02));
  for (double x : h.values) CHECK(x <= 16.0 + 1e-9);
  const auto w = netlsd_wave(g);
  CHECK(wave_timestamps().front() == 0.0);
  CHECK(wave_timestamps().back() < 2 * M_PI);
  CHECK(w.values[0] == 16.0);
  for (double x : w.values) CHECK(std::abs(x) <= 16.0 + 1e-9);
  CHECK(netlsd_distance(h, netlsd_heat(g)) == 0.0);
  CHECK(netlsd_distance(netlsd_heat(Graph::empty(16)), netlsd_heat(testing::complete(16))) > 0.0);
}

TEST_CASE("NetLSD is a pseudometric: cospectral star and square") {
  const auto claw = testing::star(4);
  const auto square = Graph::from_edges(4, pairs({{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
  CHECK(netlsd_distance(netlsd_heat(claw), netlsd_heat(square)) < 1e-12);
  CHECK_FALSE(claw == square);
}

TEST_CASE("orbit counts of small graphs") {
  const auto k3 = orbit_counts(testing::complete(3));
  for (Node v = 0; v < 3; ++v) {
    CHECK(k3.at(v, 0) == 2);
    CHECK(k3.at(v, 3) == 1);
  }
  const auto e5 = orbit_counts(Graph::empty(5));
  for (Node v = 0; v < 5; ++v) {
    for (std::size_t o = 0; o < kOrbitCount; ++o) CHECK(e5.at(v, o) == 0);
  }
  const auto s4 = orbit_counts(testing::star(4));
  CHECK(s4.at(0, 2) == 3);
  CHECK(s4.at(0, 7) == 1);
  CHECK(s4.at(1, 6) == 1);
}

TEST_CASE("orbit counts match the brute-force oracle") {
  Rng rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 7;
    const auto g = testing::random_graph(n, 0.2 + 0.6 * uniform01(rng), rng);
    const auto fast = orbit_counts(g);
    const auto slow = testing::brute_force_orbits(g);
    CHECK(fast == slow);
    for (Node v = 0; v < n; ++v) CHECK(fast.at(v, 0) == g.degree(v));
  }
}

TEST_CASE("GCM invariants") {
  Rng rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = testing::random_graph(12, 0.35, rng);
    const auto m = gcm(g);
    for (std::size_t i = 0; i < 11; ++i) {
      CHECK(m.at(i, i) == 1.0);
      for (std::size_t j = 0; j < 11; ++j) {
        CHECK(m.at(i, j) == m.at(j, i));
        CHECK(std::abs(m.at(i, j)) <= 1.0 + 1e-12);
      }
    }
    const auto moved = gcm(testing::relabel(g, testing::random_permutation(12, rng)));
    CHECK(gcd_distance(m, moved) < 1e-12);
  }
}

TEST_CASE("GCM of a perfect matching is all ones") {
  const auto g = Graph::from_edges(8, pairs({{0, 1}, {2, 3}, {4, 5}, {6, 7}}));
  const auto m = gcm(g);
  for (std::size_t i = 0; i < 11; ++i) {
    for (std::size_t j = 0; j < 11; ++j) CHECK(m.at(i, j) == doctest::Approx(1.0));
  }
}

TEST_CASE("average ranks resolve ties") {
  const std::vector<double> v{3, 1, 3, 2};
  CHECK(average_ranks(v) == std::vector<double>{3.5, 1, 3.5, 2});
}

TEST_CASE("GCD bounds") {
  Rng rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = gcm(testing::random_graph(10, 0.3, rng));
    const auto b = gcm(testing::random_graph(10, 0.6, rng));
    CHECK(gcd_distance(a, a) == 0.0);
    CHECK(gcd_distance(a, b) == gcd_distance(b, a));
    CHECK(gcd_distance(a, b) <= std::sqrt(220.0) + 1e-12);
  }
}

TEST_CASE("portrait structure") {
  Rng rng(14);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + trial % 15;
    const auto g = testing::random_graph(n, 0.15, rng);
    const auto p = portrait(g);
    CHECK(p.b(0, 1) == n);
    std::uint64_t pairs_seen = 0;
    for (std::uint32_t l = 0; l <= p.max_distance(); ++l) {
      std::uint64_t row = 0;
      for (const auto& e : p.entries()) {
        if (e.l == l) row += e.count;
      }
      CHECK(row <= n);
    }
    for (const auto& e : p.entries()) pairs_seen += static_cast<std::uint64_t>(e.k) * e.count;
    std::uint64_t sq = 0;
    for (auto c : component_sizes(g)) sq += c * c;
    CHECK(pairs_seen == sq);
    CHECK(p.pair_normalization() == sq);
    double total = 0;
    for (const auto& m : p.distribution()) total += m.p;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("portrait distribution matches the defining formula") {
  // path 0-1-2-3 plus isolated node 4
  const auto g = Graph::from_edges(5, pairs({{0, 1}, {1, 2}, {2, 3}}));
  const auto p = portrait(g);
  // pairs: 4*4 + 1*1 = 17; shells: l=1 has b(1,1)=2, b(1,2)=2; l=2 b(2,1)=4; l=3 b(3,1)=2
  CHECK(p.b(1, 1) == 2);
  CHECK(p.b(1, 2) == 2);
  CHECK(p.b(2, 1) == 4);
  CHECK(p.b(3, 1) == 2);
  auto mass = [&](std::uint32_t l, std::uint32_t k) {
    for (const auto& m : p.distribution()) {
      if (m.l == l && m.k == k) return m.p;
    }
    return 0.0;
  };
  // row weight (sum_k k b_lk)/17, spread by b_lk/5
  CHECK(mass(0, 1) == doctest::Approx(5.0 / 17 * 5.0 / 5));
  CHECK(mass(1, 1) == doctest::Approx(6.0 / 17 * 2.0 / 5));
  CHECK(mass(1, 2) == doctest::Approx(6.0 / 17 * 2.0 / 5));
  CHECK(mass(1, 0) == doctest::Approx(6.0 / 17 * 1.0 / 5));
  CHECK(mass(2, 0) == doctest::Approx(4.0 / 17 * 1.0 / 5));
  CHECK(mass(2, 1) == doctest::Approx(4.0 / 17 * 4.0 / 5));
  CHECK(mass(3, 0) == doctest::Approx(2.0 / 17 * 3.0 / 5));
  CHECK(mass(3, 1) == doctest::Approx(2.0 / 17 * 2.0 / 5));
}

TEST_CASE("portrait divergence bounds") {
  const auto e = portrait(Graph::empty(16));
  const auto k = portrait(testing::complete(16));
  CHECK(portrait_divergence(e, e) == 0.0);
  const double d = portrait_divergence(e, k);
  CHECK(d > 0.0);
  CHECK(d <= std::log(2.0) + 1e-12);
}

TEST_CASE("all distance kinds: identity, symmetry, relabel invariance") {
  Rng rng(15);
  for (auto kind : kAllDescriptorKinds) {
    for (int trial = 0; trial < 25; ++trial) {
      const auto a = testing::random_graph(10, 0.3, rng);
      const auto b = testing::random_graph(10, 0.5, rng);
      const auto da = describe(kind, a);
      const auto db = describe(kind, b);
      CHECK(da.kind() == kind);
      CHECK(distance(da, da) == 0.0);
      CHECK(distance(da, db) == distance(db, da));
      CHECK(distance(da, db) >= 0.0);
      CHECK(distance(da, describe(kind, testing::relabel(a, testing::random_permutation(10, rng)))) < 1e-9);
    }
  }
  CHECK_THROWS_AS(distance(describe(DescriptorKind::Heat, Graph::empty(3)),
                           describe(DescriptorKind::Wave, Graph::empty(3))),
                  std::invalid_argument);
}

TEST_CASE("descriptor kind names") {
  CHECK(parse_descriptor_kind("gcd") == DescriptorKind::Gcd);
  CHECK(parse_descriptor_kind("netlsd-heat") == DescriptorKind::Heat);
  CHECK(parse_descriptor_kind("portrait-div") == DescriptorKind::Portrait);
  CHECK_THROWS_AS(parse_descriptor_kind("nope"), std::invalid_argument);
  CHECK(display_name(DescriptorKind::Wave) == "NetLSD-wave");
}

TEST_CASE("descriptor records round trip") {
  Rng rng(16);
  std::vector<Descriptor> ds;
  for (auto kind : kAllDescriptorKinds) ds.push_back(describe(kind, testing::random_graph(9, 0.4, rng)));
  std::stringstream buf;
  write_descriptors(buf, ds);
  const auto back = read_descriptors(buf);
  REQUIRE(back.size() == ds.size());
  for (std::size_t i = 0; i < ds.size(); ++i) {
    CHECK(back[i].kind() == ds[i].kind());
    CHECK(distance(back[i], ds[i]) < 1e-9);
  }
}
