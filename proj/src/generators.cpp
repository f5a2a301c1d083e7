#include "divgraph/generators.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace divgraph {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

bool is_probability(double p) { return p >= 0.0 && p <= 1.0; }

Graph erdos_renyi(std::size_t n, double p, Rng& rng) {
  std::vector<Edge> edges;
  for (Node u = 0; u < n; ++u) {
    for (Node v = u + 1; v < n; ++v) {
      if (uniform01(rng) < p) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

// Index drawn with probability proportional to weights[i]; weights[i] <= 0
// are never drawn. Falls back to uniform when every weight is zero.
std::size_t weighted_index(const std::vector<double>& weights, std::size_t limit, Rng& rng) {
  double total = 0.0;
  for (std::size_t i = 0; i < limit; ++i) total += std::max(0.0, weights[i]);
  if (total <= 0.0) return uniform_index(rng, limit);
  double r = uniform01(rng) * total;
  for (std::size_t i = 0; i < limit; ++i) {
    const double w = std::max(0.0, weights[i]);
    if (r < w) return i;
    r -= w;
  }
  for (std::size_t i = limit; i-- > 0;) {
    if (weights[i] > 0.0) return i;
  }
  return limit - 1;
}

Graph preferential_attachment(std::size_t n, const PrefAttachSpec& spec, Rng& rng) {
  const std::size_t m = spec.m;
  std::vector<double> weight(n, spec.alpha);  // in-degree + alpha
  std::vector<Edge> edges;
  for (std::size_t t = m; t < n; ++t) {
    std::vector<std::size_t> targets;
    while (targets.size() < m) {
      const std::size_t target = weighted_index(weight, t, rng);
      if (std::find(targets.begin(), targets.end(), target) == targets.end()) {
        targets.push_back(target);
      }
    }
    for (std::size_t target : targets) {
      edges.emplace_back(static_cast<Node>(target), static_cast<Node>(t));
      weight[target] += 1.0;
    }
  }
  return Graph::from_edges(n, edges);
}

Graph holme_kim(std::size_t n, const HolmeKimSpec& spec, Rng& rng) {
  const std::size_t m = spec.m;
  // Urn weight: degree, plus one for each seed node so the first arrival has
  // somewhere to attach.
  std::vector<double> weight(n, 0.0);
  for (std::size_t i = 0; i < std::min(m, n); ++i) weight[i] = 1.0;
  std::vector<std::set<std::size_t>> nbrs(n);
  auto link = [&](std::size_t a, std::size_t b) {
    nbrs[a].insert(b);
    nbrs[b].insert(a);
    weight[a] += 1.0;
    weight[b] += 1.0;
  };
  for (std::size_t source = m; source < n; ++source) {
    std::size_t anchor = 0;
    bool have_anchor = false;
    std::size_t added = 0;
    while (added < m) {
      if (have_anchor && uniform01(rng) < spec.p_triangle) {
        std::vector<std::size_t> options;
        for (std::size_t w : nbrs[anchor]) {
          if (w != source && !nbrs[source].contains(w)) options.push_back(w);
        }
        if (!options.empty()) {
          link(source, options[uniform_index(rng, options.size())]);
          ++added;
          continue;
        }
      }
      std::vector<double> masked(weight.begin(), weight.begin() + source);
      for (std::size_t w : nbrs[source]) masked[w] = 0.0;
      std::size_t target = weighted_index(masked, source, rng);
      if (nbrs[source].contains(target)) {
        // all remaining weight was zero; pick uniformly among unlinked nodes
        std::vector<std::size_t> free;
        for (std::size_t i = 0; i < source; ++i) {
          if (!nbrs[source].contains(i)) free.push_back(i);
        }
        target = free[uniform_index(rng, free.size())];
      }
      link(source, target);
      anchor = target;
      have_anchor = true;
      ++added;
    }
  }
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v : nbrs[u]) {
      if (u < v) edges.emplace_back(static_cast<Node>(u), static_cast<Node>(v));
    }
  }
  return Graph::from_edges(n, edges);
}

Graph chung_lu(std::size_t n, const ChungLuSpec& spec, Rng& rng) {
  const auto w = detail::chung_lu_weights(n, spec.gamma, rng);
  double sum = 0.0;
  for (double x : w) sum += x;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (uniform01(rng) < detail::chung_lu_probability(w, sum, i, j)) {
        edges.emplace_back(static_cast<Node>(i), static_cast<Node>(j));
      }
    }
  }
  return Graph::from_edges(n, edges);
}

Graph geometric(std::size_t n, const GeometricSpec& spec, Rng& rng) {
  std::vector<double> coords(n * spec.dim);
  for (double& c : coords) c = uniform01(rng);
  std::vector<Edge> edges;
  const double r2 = spec.radius * spec.radius;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double d2 = 0.0;
      for (std::size_t k = 0; k < spec.dim; ++k) {
        const double diff = coords[i * spec.dim + k] - coords[j * spec.dim + k];
        d2 += diff * diff;
      }
      if (d2 <= r2) edges.emplace_back(static_cast<Node>(i), static_cast<Node>(j));
    }
  }
  return Graph::from_edges(n, edges);
}

// Pairing model where each round pairs the remaining stubs at random and
// keeps every pair that is neither a loop nor a repeat; the leftovers go into
// the next round. Restarts only when no admissible pair is left.
bool try_regular(std::size_t n, std::size_t d, Rng& rng, std::set<Edge>& edges) {
  edges.clear();
  std::vector<Node> stubs;
  for (Node v = 0; v < n; ++v) stubs.insert(stubs.end(), d, v);
  while (!stubs.empty()) {
    std::shuffle(stubs.begin(), stubs.end(), rng);
    std::map<Node, std::size_t> leftover;
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
      Node a = std::min(stubs[i], stubs[i + 1]);
      Node b = std::max(stubs[i], stubs[i + 1]);
      if (a != b && !edges.contains({a, b})) {
        edges.insert({a, b});
      } else {
        ++leftover[a];
        ++leftover[b];
      }
    }
    if (leftover.empty()) return true;
    bool suitable = false;
    for (auto it = leftover.begin(); it != leftover.end() && !suitable; ++it) {
      for (auto jt = std::next(it); jt != leftover.end(); ++jt) {
        if (!edges.contains({it->first, jt->first})) {
          suitable = true;
          break;
        }
      }
    }
    if (!suitable) return false;
    stubs.clear();
    for (const auto& [v, count] : leftover) stubs.insert(stubs.end(), count, v);
  }
  return true;
}

Graph random_regular(std::size_t n, std::size_t d, Rng& rng) {
  std::set<Edge> edges;
  constexpr int kMaxRestarts = 1000;
  for (int attempt = 0; attempt < kMaxRestarts; ++attempt) {
    if (try_regular(n, d, rng, edges)) {
      std::vector<Edge> list(edges.begin(), edges.end());
      return Graph::from_edges(n, list);
    }
  }
  throw std::runtime_error("random regular graph: no simple pairing after 1000 restarts");
}

Graph stochastic_block(std::size_t n, const SbmSpec& spec, Rng& rng) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool same = detail::sbm_block(i, n, spec.blocks) == detail::sbm_block(j, n, spec.blocks);
      if (uniform01(rng) < (same ? spec.p_in : spec.q_out)) {
        edges.emplace_back(static_cast<Node>(i), static_cast<Node>(j));
      }
    }
  }
  return Graph::from_edges(n, edges);
}

std::string fmt(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

namespace detail {

std::vector<double> chung_lu_weights(std::size_t n, double gamma, Rng& rng) {
  std::vector<double> w(n);
  for (double& x : w) x = std::pow(1.0 - uniform01(rng), -1.0 / (gamma - 1.0));
  double sum = 0.0;
  for (double x : w) sum += x;
  const double cap = std::sqrt(sum);
  for (double& x : w) x = std::min(x, cap);
  return w;
}

double chung_lu_probability(const std::vector<double>& weights, double weight_sum, std::size_t i,
                            std::size_t j) {
  return std::min(1.0, weights[i] * weights[j] / weight_sum);
}

std::size_t sbm_block(std::size_t node, std::size_t n, std::size_t blocks) {
  return node * blocks / n;
}

}  // namespace detail

std::string label(const GeneratorSpec& spec) {
  return std::visit(
      overloaded{
          [](const ErSpec& s) { return "ER(p=" + fmt(s.p) + ")"; },
          [](const ErMixSpec& s) {
            return std::string(s.mode == ErMixMode::Uniform ? "ER-mix" : "ER-mix(grid)");
          },
          [](const PrefAttachSpec& s) {
            return "PA(m=" + std::to_string(s.m) + ",alpha=" + fmt(s.alpha) + ")";
          },
          [](const HolmeKimSpec& s) {
            return "HK(m=" + std::to_string(s.m) + ",p=" + fmt(s.p_triangle) + ")";
          },
          [](const ChungLuSpec& s) { return "CL(gamma=" + fmt(s.gamma) + ")"; },
          [](const GeometricSpec& s) {
            return "GEO(dim=" + std::to_string(s.dim) + ",r=" + fmt(s.radius) + ")";
          },
          [](const RegularSpec& s) { return "REG(d=" + std::to_string(s.d) + ")"; },
          [](const SbmSpec& s) {
            return "SBM(r=" + std::to_string(s.blocks) + ",p=" + fmt(s.p_in) + ",q=" +
                   fmt(s.q_out) + ")";
          },
      },
      spec);
}

void validate(const GeneratorSpec& spec, std::size_t n) {
  require(n >= 1, "graphs need at least one node");
  std::visit(overloaded{
                 [](const ErSpec& s) { require(is_probability(s.p), "ER: p must be in [0,1]"); },
                 [](const ErMixSpec&) {},
                 [](const PrefAttachSpec& s) {
                   require(s.m >= 1, "PA: m must be >= 1");
                   require(s.alpha > 0.0, "PA: alpha must be > 0");
                 },
                 [](const HolmeKimSpec& s) {
                   require(s.m >= 1, "HK: m must be >= 1");
                   require(is_probability(s.p_triangle), "HK: p must be in [0,1]");
                 },
                 [](const ChungLuSpec& s) { require(s.gamma > 1.0, "CL: gamma must be > 1"); },
                 [](const GeometricSpec& s) {
                   require(s.dim == 2 || s.dim == 3, "GEO: dim must be 2 or 3");
                   require(s.radius > 0.0, "GEO: radius must be > 0");
                 },
                 [n](const RegularSpec& s) {
                   require(s.d < n, "REG: degree must be below n");
                   require((n * s.d) % 2 == 0, "REG: n*d must be even");
                 },
                 [n](const SbmSpec& s) {
                   require(s.blocks >= 1 && s.blocks <= n, "SBM: block count must be in [1,n]");
                   require(is_probability(s.p_in) && is_probability(s.q_out),
                           "SBM: probabilities must be in [0,1]");
                 },
             },
             spec);
}

Graph sample(const GeneratorSpec& spec, std::size_t n, Seed seed) {
  validate(spec, n);
  Rng rng(seed);
  return std::visit(
      overloaded{
          [&](const ErSpec& s) { return erdos_renyi(n, s.p, rng); },
          [&](const ErMixSpec& s) { return er_mix(n, seed, s.mode); },
          [&](const PrefAttachSpec& s) { return preferential_attachment(n, s, rng); },
          [&](const HolmeKimSpec& s) { return holme_kim(n, s, rng); },
          [&](const ChungLuSpec& s) { return chung_lu(n, s, rng); },
          [&](const GeometricSpec& s) { return geometric(n, s, rng); },
          [&](const RegularSpec& s) { return random_regular(n, s.d, rng); },
          [&](const SbmSpec& s) { return stochastic_block(n, s, rng); },
      },
      spec);
}

const std::vector<double>& er_grid_probabilities() {
  static const std::vector<double> grid{1.0 / 16, 1.0 / 8, 1.0 / 4, 1.0 / 2,
                                        3.0 / 4,  7.0 / 8, 15.0 / 16};
  return grid;
}

Graph er_mix(std::size_t n, Seed seed, ErMixMode mode) {
  if (n == 0) throw std::invalid_argument("graphs need at least one node");
  Rng rng(seed);
  const double p = mode == ErMixMode::Uniform
                       ? uniform01(rng)
                       : er_grid_probabilities()[uniform_index(rng, er_grid_probabilities().size())];
  return erdos_renyi(n, p, rng);
}

std::vector<GeneratorSpec> ensemble_grid(std::size_t n) {
  std::vector<GeneratorSpec> grid;
  for (double p : er_grid_probabilities()) grid.push_back(ErSpec{p});
  for (unsigned m : {1u, 2u, 4u}) {
    for (double alpha : {m / 2.0, 1.0 * m, 2.0 * m}) grid.push_back(PrefAttachSpec{m, alpha});
  }
  for (unsigned m : {2u, 4u}) {
    for (double p : {0.5, 1.0}) grid.push_back(HolmeKimSpec{m, p});
  }
  for (double gamma : {2.0, 2.5, 3.0, 4.0}) grid.push_back(ChungLuSpec{gamma});
  for (double r : {0.2, 0.3, 0.5}) grid.push_back(GeometricSpec{2, r});
  for (double r : {1.0 / 3.0, 0.5, 0.65}) grid.push_back(GeometricSpec{3, r});
  for (unsigned d : {1u, 2u, 4u, 8u, 10u}) {
    if (d < n && (n * d) % 2 == 0) grid.push_back(RegularSpec{d});
  }
  for (double s : {1.0 / 16, 1.0 / 8, 1.0 / 4, 1.0 / 2}) grid.push_back(SbmSpec{2, 2 * s, s});
  for (double s : {1.0 / 16, 1.0 / 8, 1.0 / 4, 1.0 / 2}) grid.push_back(SbmSpec{2, s, 2 * s});
  grid.push_back(SbmSpec{3, 0.5, 0.25});
  grid.push_back(SbmSpec{3, 0.2, 0.4});
  return grid;
}

GeneratorPool::GeneratorPool(std::vector<GeneratorSpec> specs, std::size_t count, std::size_t n,
                             Seed seed)
    : specs_(std::move(specs)), count_(count), n_(n), seed_(seed) {
  if (specs_.empty()) throw std::invalid_argument("generator pool needs at least one spec");
  for (const auto& s : specs_) validate(s, n_);
}

Graph GeneratorPool::at(std::size_t index) const {
  return sample(specs_[index % specs_.size()], n_, derive_seed(seed_, index));
}

std::vector<Graph> sample_pool(const std::vector<GeneratorSpec>& specs, std::size_t count,
                               std::size_t n, Seed seed) {
  GeneratorPool pool(specs, count, n, seed);
  std::vector<Graph> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(pool.at(i));
  return out;
}

}  // namespace divgraph
