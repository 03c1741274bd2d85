// Revealed-preference estimation of the jammer parameter: the pairwise
// inequality system over the dataset, its feasibility test, set membership,
// the margin, and the max-margin point estimate.
#pragma once

#include "eccm/dataset.hpp"
#include "eccm/params.hpp"
#include "eccm/simplex.hpp"

#include <cstddef>
#include <optional>

namespace eccm {

inline constexpr double kTolFeas = 1e-8;

// One ordered pair (s, t): L(theta) = coeff'theta + offset with
// coeff_i = -(beta_s_i^2 - beta_t_i^2) and offset = lambda alpha_t'(beta_s - beta_t).
struct AfriatRow {
  Vec coeff;
  double offset = 0.0;
  std::size_t s = 0, t = 0;  // 1-based record indices

  double value(const Vec& theta) const { return dot(coeff, theta) + offset; }
};

struct AfriatInequalitySystem {
  std::vector<AfriatRow> rows;  // all ordered off-diagonal pairs, k(k-1) of them
  ThetaBox box;
  std::size_t dim = 0;
  double lambda = 0.0;
};

struct FeasibilityResult {
  bool feasible = false;
  std::optional<Vec> witness;    // minimizer of the worst row when feasible
  double min_worst = 0.0;        // optimal value of max_r L_r over the box
};

struct MarginResult {
  bool feasible = false;
  Vec theta_hat;
  double margin = 0.0;           // min_r L_r(theta_hat); 0 when no rows / infeasible
  double worst_violation = 0.0;  // max_r L_r(theta_hat); 0 when no rows
};

AfriatInequalitySystem build_system(const InteractionDataset& data, double lambda,
                                    const ThetaBox& box);

// Feasibility of {theta in box : L_r(theta) <= tol_feas for all r} via the LP
// min over (theta, v) of v s.t. L_r(theta) <= v. An empty system is feasible
// with the box midpoint as witness.
FeasibilityResult feasibility_test(const AfriatInequalitySystem& sys,
                                   double tol_feas = kTolFeas);

// theta in box and every row value <= tol_feas.
bool membership(const AfriatInequalitySystem& sys, const Vec& theta,
                double tol_feas = kTolFeas);

// min over rows of L_r(theta); 0 for an empty system.
double margin_of(const AfriatInequalitySystem& sys, const Vec& theta);

// max over rows of L_r(theta); 0 for an empty system.
double worst_violation_of(const AfriatInequalitySystem& sys, const Vec& theta);

// argmax over the feasible set of the margin, as an LP. Empty or infeasible
// systems return the fallback (the previous estimate) with margin 0.
MarginResult max_margin_estimate(const AfriatInequalitySystem& sys, const Vec& fallback,
                                 double tol_feas = kTolFeas);

// Alternative estimator: the feasibility witness itself (minimizer of the
// worst row). Same fallback policy. Selected by config, not the default.
MarginResult min_slack_estimate(const AfriatInequalitySystem& sys, const Vec& fallback,
                                double tol_feas = kTolFeas);

}  // namespace eccm
