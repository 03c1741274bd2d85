// The radar's probe optimization: maximize the radar utility over feasible
// probes, with the jammer model best-responding inside the objective.
#pragma once

#include "eccm/jammer.hpp"

#include <cstdint>
#include <utility>

namespace eccm {

struct SolverBudget {
  int n_random = 8;         // seeded random starts beyond the canonical ones
  long max_evals = 20000;   // objective evaluations per solve
  double step_init = 0.25;  // pattern-search initial step
  double step_min = 1e-4;   // search stops once the step falls below this
};

struct PapSolution {
  ActionVector alpha_star;
  ActionVector beta_predicted;  // inner best response under the model used
  double radar_value = 0.0;
  int starts_evaluated = 0;
  int best_start_index = 0;
  long evals_used = 0;

  bool operator==(const PapSolution&) const = default;
};

// One evaluation of the bilevel objective: the model's best response to
// alpha and the radar utility at that pair.
std::pair<ActionVector, double> evaluate_outer(const JammerParams& model,
                                               const RadarWeights& w,
                                               const ActionVector& alpha);

// Deterministic start set: the d canonical unit vectors, the uniform vector
// (1/sqrt(d)) 1, then budget.n_random seeded uniform feasible points.
std::vector<ActionVector> pap_start_points(std::size_t d, const SolverBudget& budget,
                                           std::uint64_t seed);

// Multi-start pattern search over the feasible set: per-coordinate +-step
// probes projected after each move, step halved when no probe improves.
// Ties across starts resolve to the lowest start index.
PapSolution solve_pap(const JammerParams& model, const RadarWeights& w,
                      const SolverBudget& budget, std::uint64_t seed);

}  // namespace eccm
