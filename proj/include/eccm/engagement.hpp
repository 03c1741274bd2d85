// Slow-timescale engagement loop: probe, response, dataset append, estimate
// update, fast-timescale tracking, and the per-step metrics.
#pragma once

#include "eccm/afriat.hpp"
#include "eccm/pap.hpp"
#include "eccm/tracker.hpp"

#include <optional>

namespace eccm {

enum class EngagementMode { kAdaptive, kSymmetric };
enum class IrlEstimator { kMaxMargin, kMinSlack };

struct TrackerConfig {
  bool enabled = true;
  NoiseModel noise;
  double sample_period = 1.0;
  double process_noise_q = 0.01;
  int steps_per_interaction = 100;
  double x0_pos = 1000.0;
  double x0_vel = 10.0;
  double p0_pos = 100.0;
  double p0_vel = 25.0;
};

struct EngagementConfig {
  std::size_t d = 4;
  int steps = 50;  // K
  double lambda = 0.5;
  double delta = 1.0;
  double eps_sinr = 1e-9;
  double tol_feas = kTolFeas;
  std::optional<Vec> theta_true;  // nullopt: drawn Unif(box)^d from the seed
  Vec theta_hat0;                 // empty: box midpoint
  ThetaBox box;
  EngagementMode mode = EngagementMode::kAdaptive;
  IrlEstimator estimator = IrlEstimator::kMaxMargin;
  bool exploration = false;
  double exploration_scale = 0.2;  // perturbation magnitude c / sqrt(k)
  SolverBudget budget;
  TrackerConfig tracker;
  std::uint64_t seed = 1;

  Vec resolved_theta_hat0() const {
    return theta_hat0.empty() ? box.midpoint(d) : theta_hat0;
  }

  // Throws std::invalid_argument on an inconsistent configuration.
  void validate() const;
};

struct StepRecord {
  int k = 0;
  ActionVector alpha;
  ActionVector beta;
  Vec theta_hat;
  double est_error = 0.0;       // ||theta_true - theta_hat_k||
  double jammer_utility = 0.0;  // under the true parameters
  double radar_utility = 0.0;   // under the model the probe was solved against
  double margin = 0.0;
  bool feasible = false;
  std::optional<double> tracking_rmse;

  bool operator==(const StepRecord&) const = default;
};

struct EngagementTrace {
  Vec theta_true;
  Vec theta_hat0;
  double est_error0 = 0.0;
  std::vector<StepRecord> steps;

  bool operator==(const EngagementTrace&) const = default;
};

// Runs K slow steps. The jammer best-responds to the realized probe under the
// true parameters; the radar solves the PAP against theta_hat_{k-1} (adaptive)
// or theta_true (symmetric, where the estimate is still tracked for
// diagnostics but never fed back).
EngagementTrace run_engagement(const EngagementConfig& cfg);

struct SeriesStats {
  Vec median, q1, q3;
};

struct SummaryStats {
  SeriesStats est_error;       // index 0 is the initial estimate
  SeriesStats jammer_utility;  // index 0 is step k=1
  SeriesStats radar_utility;
};

// Per-step median and interquartile range across traces. Throws on an empty
// list or mismatched lengths.
SummaryStats summarize(const std::vector<EngagementTrace>& traces);

double median_of(Vec values);
double quantile_of(Vec values, double q);  // linear interpolation

}  // namespace eccm
