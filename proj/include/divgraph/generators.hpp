#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "divgraph/graph.hpp"
#include "divgraph/rng.hpp"

namespace divgraph {

/// How ER-mix picks the per-graph edge probability.
enum class ErMixMode { Uniform, Grid };

struct ErSpec {
  double p = 0.5;
};
struct ErMixSpec {
  ErMixMode mode = ErMixMode::Uniform;
};
/// New nodes attach m edges to older nodes with probability proportional to
/// (in-degree + alpha). Starts from m isolated seed nodes.
struct PrefAttachSpec {
  unsigned m = 1;
  double alpha = 1.0;
};
/// Holme-Kim growth: degree-proportional edges, each possibly followed by a
/// triangle-closing edge with probability p_triangle.
struct HolmeKimSpec {
  unsigned m = 2;
  double p_triangle = 0.5;
};
/// Expected-degree graph with Pareto(gamma) weights.
struct ChungLuSpec {
  double gamma = 2.5;
};
struct GeometricSpec {
  unsigned dim = 2;
  double radius = 0.3;
};
struct RegularSpec {
  unsigned d = 2;
};
struct SbmSpec {
  unsigned blocks = 2;
  double p_in = 0.5;
  double q_out = 0.25;
};

using GeneratorSpec = std::variant<ErSpec, ErMixSpec, PrefAttachSpec, HolmeKimSpec, ChungLuSpec,
                                   GeometricSpec, RegularSpec, SbmSpec>;

/// Short human-readable label, e.g. "ER(p=0.25)".
std::string label(const GeneratorSpec& spec);

/// Throws std::invalid_argument when the parameters are infeasible for n nodes.
void validate(const GeneratorSpec& spec, std::size_t n);

/// Draws one graph. Deterministic in (spec, n, seed).
Graph sample(const GeneratorSpec& spec, std::size_t n, Seed seed);

/// ER(n, p) with p ~ Uniform(0,1), or p drawn from the seven-value ER grid.
Graph er_mix(std::size_t n, Seed seed, ErMixMode mode = ErMixMode::Uniform);

/// ER edge probabilities used by the ensemble grid and the Grid ER-mix mode.
const std::vector<double>& er_grid_probabilities();

/// The full model/parameter ensemble, in this order: ER (7), preferential
/// attachment (m in {1,2,4} x alpha in {m/2,m,2m}), Holme-Kim
/// (m in {2,4} x p in {0.5,1}), Chung-Lu (gamma in {2,2.5,3,4}), geometric
/// (dim 2: r in {0.2,0.3,0.5}; dim 3: r in {1/3,0.5,0.65}), regular
/// (d in {1,2,4,8,10}), SBM r=2 ((2s,s) then (s,2s) for s in
/// {1/16,1/8,1/4,1/2}), SBM r=3 ((1/2,1/4), (1/5,2/5)).
/// Regular specs infeasible for n (d >= n or n*d odd) are left out.
std::vector<GeneratorSpec> ensemble_grid(std::size_t n);

/// Deterministic, random-access pool: element i comes from
/// specs[i % specs.size()] seeded with derive_seed(seed, i), so any subset of
/// elements can be regenerated without producing the others.
class GeneratorPool {
 public:
  GeneratorPool(std::vector<GeneratorSpec> specs, std::size_t count, std::size_t n, Seed seed);

  std::size_t size() const { return count_; }
  std::size_t node_count() const { return n_; }
  Graph at(std::size_t index) const;

 private:
  std::vector<GeneratorSpec> specs_;
  std::size_t count_;
  std::size_t n_;
  Seed seed_;
};

std::vector<Graph> sample_pool(const std::vector<GeneratorSpec>& specs, std::size_t count,
                               std::size_t n, Seed seed);

namespace detail {
/// Pareto weights (minimum 1) capped at sqrt of their sum.
std::vector<double> chung_lu_weights(std::size_t n, double gamma, Rng& rng);
/// min(1, w_i w_j / sum_k w_k)
double chung_lu_probability(const std::vector<double>& weights, double weight_sum, std::size_t i,
                            std::size_t j);
/// Block index of each node for an r-block SBM, sizes differing by at most one.
std::size_t sbm_block(std::size_t node, std::size_t n, std::size_t blocks);
}  // namespace detail

}  // namespace divgraph
