// Closed-form utilities of the jammer and the radar.
#pragma once

#include "eccm/action.hpp"
#include "eccm/params.hpp"

namespace eccm {

// -sum_i theta_i beta_i^2 + lambda alpha'beta
double jammer_utility(const JammerParams& p, const ActionVector& alpha,
                      const ActionVector& beta);

// num / (num + beta'beta + eps_sinr) - delta * U_J(p_hat; alpha, beta)
// with num = alpha' diag(beta) alpha = sum_i beta_i alpha_i^2.
double radar_utility(const RadarWeights& w, const JammerParams& p_hat,
                     const ActionVector& alpha, const ActionVector& beta);

}  // namespace eccm
