#include "divgraph/orbits.hpp"

#include <bit>

namespace divgraph {

namespace {

std::int64_t choose2(std::int64_t a) { return a < 2 ? 0 : a * (a - 1) / 2; }
std::int64_t choose3(std::int64_t a) { return a < 3 ? 0 : a * (a - 1) * (a - 2) / 6; }

}  // namespace

OrbitCountMatrix orbit_counts(const Graph& g) {
  const std::size_t n = g.node_count();
  const std::size_t words = g.words_per_row();
  OrbitCountMatrix out(n);

  // common[u*n+v] = |N(u) ∩ N(v)|
  std::vector<std::int64_t> common(n * n, 0);
  for (Node u = 0; u < n; ++u) {
    const auto ru = g.adjacency_row(u);
    for (Node v = u + 1; v < n; ++v) {
      const auto rv = g.adjacency_row(v);
      std::int64_t c = 0;
      for (std::size_t w = 0; w < words; ++w) c += std::popcount(ru[w] & rv[w]);
      common[u * n + v] = c;
      common[v * n + u] = c;
    }
  }
  auto cn = [&](Node u, Node v) { return common[u * n + v]; };

  std::vector<std::int64_t> deg(n), tri(n, 0), nbr_deg_sum(n, 0);
  for (Node u = 0; u < n; ++u) deg[u] = static_cast<std::int64_t>(g.degree(u));
  for (Node u = 0; u < n; ++u) {
    for (Node v : g.neighbors(u)) {
      tri[u] += cn(u, v);
      nbr_deg_sum[u] += deg[v];
    }
    tri[u] /= 2;
  }

  std::vector<std::uint64_t> scratch(words);
  for (Node x = 0; x < n; ++x) {
    const std::int64_t dx = deg[x];
    const std::int64_t tx = tri[x];
    const auto rx = g.adjacency_row(x);

    // Non-induced copies with x at each orbit position.
    std::int64_t n1 = 0, n4 = 0, n6 = 0, n9 = 0, n10 = 0, n13 = 0, sum_dm1 = 0;
    for (Node y : g.neighbors(x)) {
      const std::int64_t c = cn(x, y);
      n1 += deg[y] - 1;
      n4 += nbr_deg_sum[y] - dx - deg[y] + 1;
      n6 += choose2(deg[y] - 1);
      n9 += tri[y] - c;
      n10 += c * (deg[y] - 2);
      n13 += choose2(c);
      sum_dm1 += deg[y] - 1;
    }
    n4 -= 2 * tx;
    const std::int64_t n2 = choose2(dx);
    const std::int64_t n3 = tx;
    const std::int64_t n5 = (dx - 1) * sum_dm1 - 2 * tx;
    const std::int64_t n7 = choose3(dx);
    const std::int64_t n11 = tx * (dx - 2 > 0 ? dx - 2 : 0);

    std::int64_t n8 = 0;
    for (Node z = 0; z < n; ++z) {
      if (z != x) n8 += choose2(cn(x, z));
    }

    // Triangle edges y < z inside N(x): diamond-degree-2 copies and K4s.
    std::int64_t n12 = 0, k4_times3 = 0;
    for (Node y : g.neighbors(x)) {
      const auto ry = g.adjacency_row(y);
      for (std::size_t w = 0; w < words; ++w) scratch[w] = rx[w] & ry[w];
      for (std::size_t w = 0; w < words; ++w) {
        std::uint64_t word = scratch[w];
        while (word != 0) {
          const Node z = static_cast<Node>(w * 64 + std::countr_zero(word));
          word &= word - 1;
          if (z <= y) continue;
          n12 += cn(y, z) - 1;
          const auto rz = g.adjacency_row(z);
          for (std::size_t k = 0; k < words; ++k) k4_times3 += std::popcount(scratch[k] & rz[k]);
        }
      }
    }
    const std::int64_t n14 = k4_times3 / 3;

    // Induced counts, densest graphlet first.
    const std::int64_t i14 = n14;
    const std::int64_t i13 = n13 - 3 * i14;
    const std::int64_t i12 = n12 - 3 * i14;
    const std::int64_t i11 = n11 - 2 * i13 - 3 * i14;
    const std::int64_t i10 = n10 - 2 * i12 - 2 * i13 - 6 * i14;
    const std::int64_t i9 = n9 - 2 * i12 - 3 * i14;
    const std::int64_t i8 = n8 - i12 - i13 - 3 * i14;
    const std::int64_t i7 = n7 - i11 - i13 - i14;
    const std::int64_t i6 = n6 - i9 - i10 - 2 * i12 - i13 - 3 * i14;
    const std::int64_t i5 = n5 - 2 * i8 - i10 - 2 * i11 - 2 * i12 - 4 * i13 - 6 * i14;
    const std::int64_t i4 = n4 - 2 * i8 - 2 * i9 - i10 - 4 * i12 - 2 * i13 - 6 * i14;
    const std::int64_t i3 = n3;
    const std::int64_t i2 = n2 - i3;
    const std::int64_t i1 = n1 - 2 * i3;

    const std::int64_t values[kOrbitCount] = {dx, i1, i2, i3, i4,  i5,  i6, i7,
                                              i8, i9, i10, i11, i12, i13, i14};
    for (std::size_t o = 0; o < kOrbitCount; ++o) {
      out.at(x, o) = static_cast<std::uint64_t>(values[o]);
    }
  }
  return out;
}

}  // namespace divgraph
