#include "divgraph/portrait.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace divgraph {

Portrait::Portrait(std::size_t n, std::vector<Entry> entries, std::uint64_t pair_normalization)
    : n_(n), entries_(std::move(entries)), pair_norm_(pair_normalization) {
  std::sort(entries_.begin(), entries_.end(), [](const Entry& a, const Entry& b) {
    return a.l != b.l ? a.l < b.l : a.k < b.k;
  });
  for (const auto& e : entries_) max_l_ = std::max(max_l_, e.l);

  const double norm = static_cast<double>(pair_norm_);
  const double nd = static_cast<double>(n_);
  std::size_t i = 0;
  while (i < entries_.size()) {
    const std::uint32_t l = entries_[i].l;
    std::size_t j = i;
    std::uint64_t pairs_at_l = 0;
    std::uint64_t nodes_in_row = 0;
    while (j < entries_.size() && entries_[j].l == l) {
      pairs_at_l += static_cast<std::uint64_t>(entries_[j].k) * entries_[j].count;
      nodes_in_row += entries_[j].count;
      ++j;
    }
    const double p_l = static_cast<double>(pairs_at_l) / norm;
    const std::uint64_t zero_count = n_ - nodes_in_row;
    if (zero_count > 0) distribution_.push_back({l, 0, p_l * static_cast<double>(zero_count) / nd});
    for (std::size_t t = i; t < j; ++t) {
      distribution_.push_back(
          {l, entries_[t].k, p_l * static_cast<double>(entries_[t].count) / nd});
    }
    i = j;
  }
}

std::uint64_t Portrait::b(std::uint32_t l, std::uint32_t k) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), Entry{l, k, 0},
                             [](const Entry& a, const Entry& b) {
                               return a.l != b.l ? a.l < b.l : a.k < b.k;
                             });
  return it != entries_.end() && it->l == l && it->k == k ? it->count : 0;
}

Portrait portrait(const Graph& g) {
  const std::size_t n = g.node_count();
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint64_t> cells;
  std::uint64_t reachable_pairs = 0;
  std::vector<std::uint32_t> shell;
  for (Node s = 0; s < n; ++s) {
    const auto dist = bfs_from(g, s);
    shell.assign(n, 0);
    std::uint32_t far = 0;
    for (const auto& d : dist) {
      if (d) {
        ++shell[*d];
        far = std::max(far, *d);
        ++reachable_pairs;
      }
    }
    for (std::uint32_t l = 0; l <= far; ++l) {
      if (shell[l] > 0) ++cells[{l, shell[l]}];
    }
  }
  std::vector<Portrait::Entry> entries;
  entries.reserve(cells.size());
  for (const auto& [key, count] : cells) entries.push_back({key.first, key.second, count});
  return Portrait(n, std::move(entries), reachable_pairs);
}

double portrait_divergence(const Portrait& a, const Portrait& b) {
  const auto& pa = a.distribution();
  const auto& pb = b.distribution();
  auto term = [](double p, double m) { return p > 0.0 ? p * std::log(p / m) : 0.0; };
  double kl_a = 0.0;
  double kl_b = 0.0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < pa.size() || j < pb.size()) {
    double p = 0.0;
    double q = 0.0;
    if (j == pb.size() ||
        (i < pa.size() && (pa[i].l != pb[j].l ? pa[i].l < pb[j].l : pa[i].k < pb[j].k))) {
      p = pa[i++].p;
    } else if (i == pa.size() || pa[i].l != pb[j].l || pa[i].k != pb[j].k) {
      q = pb[j++].p;
    } else {
      p = pa[i++].p;
      q = pb[j++].p;
    }
    const double m = 0.5 * (p + q);
    kl_a += term(p, m);
    kl_b += term(q, m);
  }
  return std::max(0.0, 0.5 * (kl_a + kl_b));
}

}  // namespace divgraph
