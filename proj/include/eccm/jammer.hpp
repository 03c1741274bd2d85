// The jammer's exact best response to a radar probe.
#pragma once

#include "eccm/params.hpp"
#include "eccm/utility.hpp"

#include <cstddef>

namespace eccm {

struct BestResponseReport {
  ActionVector beta_star;
  double multiplier = 0.0;    // KKT multiplier of the ball constraint
  double kkt_residual = 0.0;  // worst stationarity / complementarity residual
};

// Global maximizer of -beta'diag(theta)beta + lambda alpha'beta over
// {beta >= 0, ||beta||_2 <= 1}, via the separable KKT system: the candidate
// beta_i(mu) = lambda alpha_i / (2 (theta_i + mu)) is returned with mu = 0
// when its norm is at most 1; otherwise mu is bisected on (0, lambda||alpha||/2]
// until | ||beta(mu)||^2 - 1 | <= 1e-10. Coordinates with theta_i = 0 and
// alpha_i = 0 resolve to 0.
BestResponseReport best_response(const JammerParams& p, const ActionVector& alpha);

// Brute-force verifier: evaluates U_J on the grid {0, step, 2 step, ...}^d
// intersected with the unit ball and returns the best grid point. Intended
// for d <= 3; refuses grids larger than cell_budget.
ActionVector best_response_oracle(const JammerParams& p, const ActionVector& alpha,
                                  double step, std::size_t cell_budget = 50'000'000);

}  // namespace eccm
