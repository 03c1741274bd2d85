#include "eccm/pap.hpp"

#include "eccm/rng.hpp"
#include "eccm/simplex.hpp"

#include <cmath>
#include <sstream>

namespace eccm {

namespace {

std::string format_vec(const Vec& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << "]";
  return os.str();
}

}  // namespace

std::pair<ActionVector, double> evaluate_outer(const JammerParams& model,
                                               const RadarWeights& w,
                                               const ActionVector& alpha) {
  BestResponseReport br = best_response(model, alpha);
  const double value = radar_utility(w, model, alpha, br.beta_star);
  if (!std::isfinite(value))
    throw SolverError("evaluate_outer: non-finite objective at alpha = " +
                      format_vec(alpha.entries()));
  return {std::move(br.beta_star), value};
}

std::vector<ActionVector> pap_start_points(std::size_t d, const SolverBudget& budget,
                                           std::uint64_t seed) {
  if (d == 0) throw std::invalid_argument("pap_start_points: dimension must be >= 1");
  if (budget.n_random < 0)
    throw std::invalid_argument("pap_start_points: n_random must be >= 0");
  std::vector<ActionVector> starts;
  starts.reserve(d + 1 + static_cast<std::size_t>(budget.n_random));
  for (std::size_t i = 0; i < d; ++i) {
    Vec e(d, 0.0);
    e[i] = 1.0;
    starts.push_back(project_feasible(e));
  }
  starts.push_back(project_feasible(Vec(d, 1.0 / std::sqrt(static_cast<double>(d)))));
  Rng rng(seed);
  for (int r = 0; r < budget.n_random; ++r) {
    Vec x(d);
    for (double& xi : x) xi = rng.u01();
    starts.push_back(project_feasible(x));
  }
  return starts;
}

PapSolution solve_pap(const JammerParams& model, const RadarWeights& w,
                      const SolverBudget& budget, std::uint64_t seed) {
  const std::size_t d = model.theta.size();
  if (budget.max_evals < 1) throw std::invalid_argument("solve_pap: max_evals must be >= 1");
  if (!(budget.step_init > 0.0) || !(budget.step_min > 0.0) ||
      budget.step_min > budget.step_init)
    throw std::invalid_argument("solve_pap: invalid step schedule");

  const std::vector<ActionVector> starts = pap_start_points(d, budget, seed);

  long evals = 0;
  const auto objective = [&](const ActionVector& a) {
    ++evals;
    return evaluate_outer(model, w, a).second;
  };

  PapSolution best;
  bool have_best = false;
  for (std::size_t s = 0; s < starts.size(); ++s) {
    if (evals >= budget.max_evals) break;
    ActionVector x = starts[s];
    double fx = objective(x);
    best.starts_evaluated = static_cast<int>(s + 1);

    double step = budget.step_init;
    while (step >= budget.step_min && evals < budget.max_evals) {
      ActionVector move_to;
      double move_val = fx;
      bool improved = false;
      for (std::size_t i = 0; i < d && evals < budget.max_evals; ++i) {
        for (const double dir : {1.0, -1.0}) {
          Vec cand = x.entries();
          cand[i] += dir * step;
          ActionVector proj = project_feasible(cand);
          if (proj == x) continue;
          const double fc = objective(proj);
          if (fc > move_val) {
            move_val = fc;
            move_to = std::move(proj);
            improved = true;
          }
          if (evals >= budget.max_evals) break;
        }
      }
      if (improved) {
        x = std::move(move_to);
        fx = move_val;
      } else {
        step *= 0.5;
      }
    }

    if (!have_best || fx > best.radar_value) {
      best.alpha_star = std::move(x);
      best.radar_value = fx;
      best.best_start_index = static_cast<int>(s);
      have_best = true;
    }
  }
  if (!have_best) throw SolverError("solve_pap: evaluation budget too small for any start");

  auto [beta, value] = evaluate_outer(model, w, best.alpha_star);
  best.beta_predicted = std::move(beta);
  best.radar_value = value;
  best.evals_used = evals;
  return best;
}

}  // namespace eccm
