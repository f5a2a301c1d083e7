#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "divgraph/evolve.hpp"
#include "divgraph/greedy.hpp"
#include "divgraph/population.hpp"
#include "divgraph/rng.hpp"

namespace divgraph {

enum class StageKind { Greedy, Genetic, LocalOpt };

std::string_view to_string(StageKind kind);

struct Stage {
  StageKind kind = StageKind::Greedy;
  std::size_t budget = 0;
  std::size_t K = 1000;  // kNoEscape disables the escape
  double alpha = 0.1;    // genetic only
};

struct StagePlan {
  std::vector<Stage> stages;
};

/// Parses e.g. "greedy[100000]->genetic[100000,K=1000,alpha=0.1]->local_opt[100000,K=inf]".
/// "→" is accepted in place of "->". Throws std::invalid_argument.
StagePlan parse_stage_plan(std::string_view text);
std::string to_string(const StagePlan& plan);
/// Throws std::invalid_argument for an empty plan, a zero budget, alpha
/// outside [0,1] or K = 0.
void validate(const StagePlan& plan);

/// Stage failure, tagged with the 0-based stage index.
class StageError : public std::runtime_error {
 public:
  StageError(std::size_t stage, const std::string& what)
      : std::runtime_error("stage " + std::to_string(stage) + ": " + what), stage_(stage) {}
  std::size_t stage() const { return stage_; }

 private:
  std::size_t stage_;
};

struct StageReport {
  StageKind kind = StageKind::Greedy;
  std::size_t budget = 0;
  std::size_t used = 0;
  double penalty_before = std::nan("");  // NaN when the stage creates the population
  double penalty_after = std::nan("");
  std::size_t attempts = 0;
  std::size_t accepted = 0;
  std::size_t forced = 0;
};

struct RunReport {
  std::vector<StageReport> stages;
  std::size_t total_used() const {
    std::size_t s = 0;
    for (const auto& st : stages) s += st.used;
    return s;
  }
};

/// Fixed-width text table, one line per stage plus a total.
std::string format_run_report(const RunReport& report);
/// Single-line JSON summary.
std::string run_report_json(const RunReport& report);

template <DiversitySpace S>
struct PipelineResult {
  PopulationState<S> state;
  RunReport report;
};

template <DiversitySpace S>
struct PipelineSources {
  /// Greedy pool with `count` elements for a stage seeded with `seed`.
  std::function<std::unique_ptr<ElementPool<typename S::Element>>(std::size_t count, Seed seed)> pool;
  /// Starting population when the first stage is not greedy; defaults to
  /// N draws of space.random_element.
  std::function<std::vector<typename S::Element>(std::size_t n, Rng& rng)> initial;
};

/// Runs the stages in order. Stage i draws all randomness from
/// derive_seed(seed, i). Each stage owns a ledger of its budget; the
/// initial population of a non-greedy first stage is charged there.
template <DiversitySpace S>
PipelineResult<S> run_pipeline(const StagePlan& plan, const S& space, const MeasureConfig& cfg,
                               std::size_t n, Seed seed, const PipelineSources<S>& sources) {
  validate(plan);
  if (n < 2) throw std::invalid_argument("population size must be >= 2");
  std::optional<PopulationState<S>> state;
  RunReport report;
  for (std::size_t si = 0; si < plan.stages.size(); ++si) {
    const Stage& stage = plan.stages[si];
    const Seed stage_seed = derive_seed(seed, si);
    Rng rng(stage_seed);
    BudgetLedger ledger(stage.budget);
    StageReport sr;
    sr.kind = stage.kind;
    sr.budget = stage.budget;
    try {
      if (state) sr.penalty_before = state->energy_penalty();
      if (stage.kind == StageKind::Greedy) {
        if (!sources.pool) throw std::invalid_argument("greedy stage without a pool source");
        const auto pool = sources.pool(stage.budget, derive_seed(stage_seed, 0));
        state = greedy_select(*pool, n, cfg, space, rng, ledger, std::nullopt,
                              state ? &*state : nullptr);
      } else {
        if (!state) {
          if (stage.budget <= n) {
            throw std::invalid_argument("budget " + std::to_string(stage.budget) +
                                        " leaves nothing after the initial population of " +
                                        std::to_string(n));
          }
          std::vector<typename S::Element> elems;
          if (sources.initial) {
            elems = sources.initial(n, rng);
          } else {
            for (std::size_t i = 0; i < n; ++i) elems.push_back(space.random_element(rng));
          }
          if (elems.size() != n) throw std::invalid_argument("initial population has the wrong size");
          std::vector<typename S::Descriptor> descs;
          for (const auto& e : elems) descs.push_back(describe_charged(space, e, ledger));
          state.emplace(space, cfg, std::move(elems), std::move(descs));
        }
        EscapeBuffer<S> escape;
        while (!ledger.exhausted()) {
          StepOutcome out;
          if (stage.kind == StageKind::Genetic) {
            if constexpr (CrossoverSpace<S>) {
              out = genetic_step(*state, GeneticParams{stage.K, stage.alpha}, rng, ledger, escape);
            } else {
              throw std::invalid_argument("genetic stage needs a space with crossover");
            }
          } else {
            out = local_opt_step(*state, LocalOptParams{stage.K}, rng, ledger, escape);
          }
          ++sr.attempts;
          if (out == StepOutcome::Accepted) ++sr.accepted;
          if (out == StepOutcome::Forced) ++sr.forced;
        }
      }
    } catch (const StageError&) {
      throw;
    } catch (const std::exception& e) {
      throw StageError(si, e.what());
    }
    sr.used = ledger.used();
    sr.penalty_after = state->energy_penalty();
    report.stages.push_back(sr);
  }
  return {std::move(*state), std::move(report)};
}

}  // namespace divgraph
