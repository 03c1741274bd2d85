// Utility-function parameters for both players and the parameter box.
#pragma once

#include "eccm/action.hpp"

namespace eccm {

// Axis-aligned box [lo, hi]^d for the jammer parameter theta.
struct ThetaBox {
  double lo = 0.0;
  double hi = 1.0;

  bool contains(const Vec& theta) const {
    for (double t : theta)
      if (t < lo || t > hi) return false;
    return true;
  }
  Vec midpoint(std::size_t d) const { return Vec(d, 0.5 * (lo + hi)); }
  double clamp(double t) const { return t < lo ? lo : (t > hi ? hi : t); }
};

// Diagonal quadratic coefficients theta plus the bilinear coupling weight.
struct JammerParams {
  Vec theta;
  double lambda = 0.5;
};

void validate_jammer_params(const JammerParams& p, const ThetaBox& box);

// delta weighs the mitigation term of the radar utility; eps_sinr regularizes
// the SINR denominator so the value tends to 0 as beta -> 0.
struct RadarWeights {
  double delta = 1.0;
  double eps_sinr = 1e-9;
};

void validate_radar_weights(const RadarWeights& w);

}  // namespace eccm
