#include "eccm/engagement.hpp"

#include "eccm/rng.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>
#include <string>

namespace eccm {

namespace {

Vec sub(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

KinematicsModel make_kinematics(const TrackerConfig& tc) {
  KinematicsModel km;
  km.sample_period = tc.sample_period;
  km.process_noise = Mat6::Identity() * tc.process_noise_q;
  for (int axis = 0; axis < 3; ++axis) {
    km.x0_mean(2 * axis) = tc.x0_pos;
    km.x0_mean(2 * axis + 1) = tc.x0_vel;
    km.x0_cov(2 * axis, 2 * axis) = tc.p0_pos;
    km.x0_cov(2 * axis + 1, 2 * axis + 1) = tc.p0_vel;
  }
  return km;
}

}  // namespace

void EngagementConfig::validate() const {
  if (d < 1 || d > 64) throw std::invalid_argument("config: d must lie in [1, 64]");
  if (steps < 0) throw std::invalid_argument("config: steps must be >= 0");
  if (!(lambda >= 0.0)) throw std::invalid_argument("config: lambda must be >= 0");
  if (!(delta >= 0.0)) throw std::invalid_argument("config: delta must be >= 0");
  if (!(eps_sinr > 0.0)) throw std::invalid_argument("config: eps_sinr must be > 0");
  if (!(tol_feas > 0.0)) throw std::invalid_argument("config: tol_feas must be > 0");
  if (!(box.lo <= box.hi)) throw std::invalid_argument("config: theta box is empty");
  if (box.lo < 0.0) throw std::invalid_argument("config: theta box must be nonnegative");
  if (theta_true) {
    if (theta_true->size() != d)
      throw std::invalid_argument("config: theta_true length differs from d");
    if (!box.contains(*theta_true))
      throw std::invalid_argument("config: theta_true outside the box");
  }
  if (!theta_hat0.empty()) {
    if (theta_hat0.size() != d)
      throw std::invalid_argument("config: theta_hat0 length differs from d");
    if (!box.contains(theta_hat0))
      throw std::invalid_argument("config: theta_hat0 outside the box");
  }
  if (!(exploration_scale >= 0.0))
    throw std::invalid_argument("config: exploration_scale must be >= 0");
  if (budget.n_random < 0) throw std::invalid_argument("config: pap_random_starts must be >= 0");
  if (budget.max_evals < 1) throw std::invalid_argument("config: pap_max_evals must be >= 1");
  if (!(budget.step_init > 0.0) || !(budget.step_min > 0.0) ||
      budget.step_min > budget.step_init)
    throw std::invalid_argument("config: invalid pattern-search step schedule");
  if (!(tracker.noise.sigma0_sq > 0.0))
    throw std::invalid_argument("config: tracker_sigma0_sq must be > 0");
  if (!(tracker.noise.eps > 0.0)) throw std::invalid_argument("config: tracker_eps must be > 0");
  if (tracker.noise.c_r < 0.0 || tracker.noise.c_j < 0.0)
    throw std::invalid_argument("config: tracker couplings must be >= 0");
  if (!(tracker.sample_period > 0.0))
    throw std::invalid_argument("config: tracker_period must be > 0");
  if (tracker.process_noise_q < 0.0)
    throw std::invalid_argument("config: tracker_q must be >= 0");
  if (tracker.steps_per_interaction < 1)
    throw std::invalid_argument("config: tracker_steps must be >= 1");
  if (tracker.p0_pos < 0.0 || tracker.p0_vel < 0.0)
    throw std::invalid_argument("config: tracker initial variances must be >= 0");
}

EngagementTrace run_engagement(const EngagementConfig& cfg) {
  cfg.validate();

  EngagementTrace trace;
  trace.theta_hat0 = cfg.resolved_theta_hat0();

  Rng theta_rng(Rng::derive_seed(cfg.seed, "theta-draw"));
  if (cfg.theta_true) {
    trace.theta_true = *cfg.theta_true;
  } else {
    trace.theta_true.resize(cfg.d);
    for (double& t : trace.theta_true) t = theta_rng.uniform(cfg.box.lo, cfg.box.hi);
  }
  trace.est_error0 = norm2(sub(trace.theta_true, trace.theta_hat0));

  const std::uint64_t pap_seed = Rng::derive_seed(cfg.seed, "pap-starts");
  Rng exploration_rng(Rng::derive_seed(cfg.seed, "exploration"));
  const std::uint64_t tracker_seed = Rng::derive_seed(cfg.seed, "tracker");

  const JammerParams true_params{trace.theta_true, cfg.lambda};
  const RadarWeights weights{cfg.delta, cfg.eps_sinr};
  const KinematicsModel km = make_kinematics(cfg.tracker);

  InteractionDataset data;
  Vec theta_hat = trace.theta_hat0;
  trace.steps.reserve(static_cast<std::size_t>(cfg.steps));

  for (int k = 1; k <= cfg.steps; ++k) {
    try {
      const Vec& model_theta =
          cfg.mode == EngagementMode::kAdaptive ? theta_hat : trace.theta_true;
      const JammerParams model{model_theta, cfg.lambda};

      PapSolution sol = solve_pap(model, weights, cfg.budget, pap_seed);
      ActionVector alpha = sol.alpha_star;
      if (cfg.exploration) {
        Vec perturbed = alpha.entries();
        const double scale = cfg.exploration_scale / std::sqrt(static_cast<double>(k));
        for (double& x : perturbed) x += scale * exploration_rng.gaussian();
        alpha = project_feasible(perturbed);
      }

      const BestResponseReport response = best_response(true_params, alpha);
      const ActionVector& beta = response.beta_star;
      data.append(alpha, beta);

      const AfriatInequalitySystem sys = build_system(data, cfg.lambda, cfg.box);
      const MarginResult irl = cfg.estimator == IrlEstimator::kMaxMargin
                                   ? max_margin_estimate(sys, theta_hat, cfg.tol_feas)
                                   : min_slack_estimate(sys, theta_hat, cfg.tol_feas);
      theta_hat = irl.theta_hat;

      StepRecord rec;
      rec.k = k;
      rec.alpha = alpha;
      rec.beta = beta;
      rec.theta_hat = theta_hat;
      rec.est_error = norm2(sub(trace.theta_true, theta_hat));
      rec.jammer_utility = jammer_utility(true_params, alpha, beta);
      rec.radar_utility = radar_utility(weights, model, alpha, beta);
      rec.margin = irl.margin;
      rec.feasible = irl.feasible;
      if (cfg.tracker.enabled) {
        const FastScaleResult fast = simulate_fast_timescale(
            km, cfg.tracker.noise, alpha, beta, cfg.tracker.steps_per_interaction,
            Rng::derive_seed(tracker_seed, "step", static_cast<std::uint64_t>(k)));
        rec.tracking_rmse = fast.rmse;
      }
      trace.steps.push_back(std::move(rec));
    } catch (const std::exception& e) {
      throw std::runtime_error("engagement step " + std::to_string(k) + ": " + e.what());
    }
  }
  assert(data.size() == static_cast<std::size_t>(cfg.steps));
  return trace;
}

double quantile_of(Vec values, double q) {
  if (values.empty()) throw std::invalid_argument("quantile_of: empty sample");
  std::sort(values.begin(), values.end());
  const double pos = q * static_cast<double>(values.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(pos);
  const std::size_t hi = std::min(lo + 1, values.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return values[lo] * (1.0 - frac) + values[hi] * frac;
}

double median_of(Vec values) { return quantile_of(std::move(values), 0.5); }

SummaryStats summarize(const std::vector<EngagementTrace>& traces) {
  if (traces.empty()) throw std::invalid_argument("summarize: no traces");
  const std::size_t k = traces.front().steps.size();
  for (const EngagementTrace& t : traces)
    if (t.steps.size() != k)
      throw std::invalid_argument("summarize: traces have mismatched lengths");

  SummaryStats stats;
  const auto push = [&traces](SeriesStats& series, auto&& get) {
    Vec sample(traces.size());
    for (std::size_t i = 0; i < traces.size(); ++i) sample[i] = get(traces[i]);
    series.median.push_back(median_of(sample));
    series.q1.push_back(quantile_of(sample, 0.25));
    series.q3.push_back(quantile_of(sample, 0.75));
  };

  push(stats.est_error, [](const EngagementTrace& t) { return t.est_error0; });
  for (std::size_t s = 0; s < k; ++s) {
    push(stats.est_error, [s](const EngagementTrace& t) { return t.steps[s].est_error; });
    push(stats.jammer_utility,
         [s](const EngagementTrace& t) { return t.steps[s].jammer_utility; });
    push(stats.radar_utility,
         [s](const EngagementTrace& t) { return t.steps[s].radar_utility; });
  }
  return stats;
}

}  // namespace eccm
